#include "ncpoisson/category.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "ncpoisson/errors.hpp"
#include "ncpoisson/parallel.hpp"
#include "ncpoisson/signs.hpp"

namespace ncpoisson {

void CheckReport::add_violation(const std::string& context, const std::string& detail) {
  ok = false;
  ++failure_count;
  if (violations.size() < kMaxStoredViolations) {
    violations.push_back({context, detail});
  }
}

void ValidationReport::add(CheckReport report) {
  ok = ok && report.ok;
  checks.push_back(std::move(report));
}

const CheckReport* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Category::Category(std::string name, long dimension, int arity_bound,
                   std::vector<std::string> objects, std::vector<Morphism> morphisms,
                   EpsTable eps)
    : m_name(std::move(name)),
      m_dimension(dimension),
      m_arity_bound(arity_bound),
      m_objects(std::move(objects)),
      m_morphisms(std::move(morphisms)),
      m_eps(std::move(eps)) {
  for (size_t i = 0; i < m_morphisms.size(); ++i) {
    auto [it, inserted] = m_index.try_emplace(m_morphisms[i].id, i);
    if (!inserted) {
      raise("InvalidInput", "duplicate morphism id '" + m_morphisms[i].id + "'");
    }
  }
  validate_structure();
}

bool Category::has_morphism(const std::string& id) const { return m_index.count(id) > 0; }

const Morphism& Category::morphism(const std::string& id) const {
  auto it = m_index.find(id);
  if (it == m_index.end()) {
    raise("InvalidInput", "unknown morphism id '" + id + "'");
  }
  return m_morphisms[it->second];
}

long Category::word_degree(const Word& w) const {
  long sum = 0;
  for (const auto& id : w.letters) sum += degree(id);
  return sum;
}

long Category::word_shifted_degree(const Word& w) const {
  return word_degree(w) - static_cast<long>(w.weight());
}

bool Category::is_composable(const Word& w) const {
  if (w.empty()) return false;
  for (const auto& id : w.letters) {
    if (!has_morphism(id)) return false;
  }
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    if (morphism(w.letters[i]).source != morphism(w.letters[i + 1]).target) return false;
  }
  return true;
}

bool Category::is_loop(const Word& w) const {
  return is_composable(w) && source_of(w) == target_of(w);
}

const std::string& Category::source_of(const Word& w) const {
  return morphism(w.letters.back()).source;
}

const std::string& Category::target_of(const Word& w) const {
  return morphism(w.letters.front()).target;
}

Chain Category::mbar(const Word& w) const {
  Chain out;
  if (w.weight() == 0 || w.weight() > static_cast<size_t>(m_arity_bound)) return out;
  // The table is keyed (out, word); scan candidate outputs via equal_range
  // over all morphisms would be linear in table size, so instead look up
  // each possible output directly.
  for (const auto& m : m_morphisms) {
    auto it = m_eps.find(EpsKey{m.id, w});
    if (it != m_eps.end()) {
      out.emplace(Word({m.id}), it->second);
    }
  }
  return out;
}

Scalar Category::pair_sign(const std::string& id, SignConvention convention) const {
  const Morphism& p = morphism(id);
  if (convention == SignConvention::ConstantOne) return Scalar(1);
  long own = p.degree;
  long partner = morphism(p.dual).degree;
  if (convention == SignConvention::Shifted) {
    own -= 1;
    partner -= 1;
  }
  switch (p.orientation) {
    case Orientation::SelfDual:
      // No consistent orientation sign exists for an even self-dual
      // morphism; such terms contribute nothing.
      return (parity(own) != 0) ? Scalar(-1) : Scalar(0);
    case Orientation::Plus:
      return Scalar(sign_pow(own));
    case Orientation::Star:
      return Scalar(sign_pow(own + (own + 1) * (partner + 1)));
  }
  return Scalar(0);
}

std::vector<Word> Category::enumerate_words(size_t min_weight, size_t max_weight,
                                            bool loops_only) const {
  std::vector<Word> out;
  std::vector<std::string> ids = sorted_ids();
  // Words are built left to right; each appended letter must have its
  // target equal to the source of the previously appended letter.
  std::vector<std::string> current;
  auto emit = [&](auto&& self, const std::string& needed_target) -> void {
    if (current.size() >= min_weight && !current.empty()) {
      Word w{std::vector<std::string>(current)};
      if (!loops_only || source_of(w) == target_of(w)) out.push_back(w);
    }
    if (current.size() == max_weight) return;
    for (const auto& id : ids) {
      const Morphism& m = morphism(id);
      if (!current.empty() && m.target != needed_target) continue;
      current.push_back(id);
      self(self, m.source);
      current.pop_back();
    }
  };
  emit(emit, std::string());
  std::sort(out.begin(), out.end(), WeightLexLess{});
  return out;
}

std::vector<std::string> Category::sorted_ids() const {
  std::vector<std::string> ids;
  ids.reserve(m_morphisms.size());
  for (const auto& m : m_morphisms) ids.push_back(m.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool Category::passed(Checked level) const {
  switch (level) {
    case Checked::Structure: return true; // enforced by the constructor
    case Checked::AInfty: return m_ainfty_passed;
    case Checked::Cyclic: return m_cyclic_passed;
  }
  return false;
}

void Category::mark_passed(Checked level) const {
  if (level == Checked::AInfty) m_ainfty_passed = true;
  if (level == Checked::Cyclic) m_cyclic_passed = true;
}

void Category::require(Checked level, const std::string& operation) const {
  if (!passed(level)) {
    const char* which = (level == Checked::AInfty) ? "check_ainfty" : "check_assumption";
    raise("NotValidated", operation + " requires the category to have passed " + which);
  }
}

void Category::validate_structure() const {
  if (m_dimension <= 0) {
    raise("InvalidInput", "dimension must be positive");
  }
  if (m_arity_bound < 1) {
    raise("InvalidInput", "arity bound must be at least 1");
  }
  {
    std::map<std::string, int> seen;
    for (const auto& o : m_objects) {
      if (o.empty()) raise("InvalidInput", "empty object id");
      if (++seen[o] > 1) raise("InvalidInput", "duplicate object id '" + o + "'");
    }
  }
  for (const auto& m : m_morphisms) {
    if (m.id.empty()) raise("InvalidInput", "empty morphism id");
    auto known_object = [&](const std::string& o) {
      return std::find(m_objects.begin(), m_objects.end(), o) != m_objects.end();
    };
    if (!known_object(m.source)) {
      raise("InvalidInput", "morphism '" + m.id + "' has unknown source '" + m.source + "'");
    }
    if (!known_object(m.target)) {
      raise("InvalidInput", "morphism '" + m.id + "' has unknown target '" + m.target + "'");
    }
    if (!has_morphism(m.dual)) {
      raise("DualityError", "morphism '" + m.id + "' has unknown dual '" + m.dual + "'");
    }
    const Morphism& d = morphism(m.dual);
    if (d.dual != m.id) {
      raise("DualityError", "dual map is not an involution at '" + m.id + "'");
    }
    if (m.degree + d.degree != m_dimension) {
      std::ostringstream os;
      os << "degrees of '" << m.id << "' and '" << m.dual << "' sum to "
         << (m.degree + d.degree) << ", expected " << m_dimension;
      raise("DualityError", os.str());
    }
    if (d.source != m.target || d.target != m.source) {
      raise("DualityError", "dual of '" + m.id + "' must reverse source and target");
    }
    if (m.dual == m.id) {
      if (m.orientation != Orientation::SelfDual) {
        raise("DualityError", "self-dual morphism '" + m.id + "' must carry the self orientation");
      }
    } else {
      if (m.orientation == Orientation::SelfDual) {
        raise("DualityError", "morphism '" + m.id + "' is not self-dual");
      }
      if (m.orientation == d.orientation) {
        raise("DualityError",
              "dual pair {" + m.id + "," + m.dual + "} needs one plus and one star member");
      }
    }
  }
  for (const auto& [key, value] : m_eps) {
    const std::string ctx = "entry (" + key.out + ", " + word_str(key.word) + ")";
    if (value.is_zero()) {
      raise("InvalidInput", ctx + " stores an explicit zero");
    }
    if (!has_morphism(key.out)) {
      raise("InvalidInput", ctx + ": unknown output id");
    }
    if (key.word.weight() == 0) {
      raise("InvalidInput", ctx + ": empty word");
    }
    if (key.word.weight() > static_cast<size_t>(m_arity_bound)) {
      raise("ArityExceeded", ctx + ": word is longer than the arity bound");
    }
    for (const auto& id : key.word.letters) {
      if (!has_morphism(id)) {
        raise("InvalidInput", ctx + ": unknown letter '" + id + "'");
      }
    }
    if (!is_composable(key.word)) {
      raise("InvalidInput", ctx + ": word is not composable");
    }
    if (source_of(key.word) != morphism(key.out).source ||
        target_of(key.word) != morphism(key.out).target) {
      raise("InvalidInput", ctx + ": output endpoints do not match the word");
    }
    long expected = word_degree(key.word) + 2 - static_cast<long>(key.word.weight());
    if (morphism(key.out).degree != expected) {
      std::ostringstream os;
      os << ctx << ": output degree " << morphism(key.out).degree << " != " << expected
         << " demanded by the degree law";
      raise("GradingMismatch", os.str());
    }
  }
}

Chain codifferential(const Category& cat, const Word& w) {
  Chain out;
  const size_t L = w.weight();
  const size_t K = static_cast<size_t>(cat.arity_bound());
  for (size_t start = 0; start < L; ++start) {
    for (size_t len = 1; len <= K && start + len <= L; ++len) {
      // Sign: shifted degrees of the letters strictly to the right of the
      // replaced run (display indices >= start + len).
      long exponent = 0;
      for (size_t j = start + len; j < L; ++j) exponent += cat.shifted_degree(w.letters[j]);
      Chain image = cat.mbar(subword(w, start, start + len));
      if (image.empty()) continue;
      Scalar sign(sign_pow(exponent));
      for (const auto& [outw, coeff] : image) {
        Word replaced = subword(w, 0, start);
        replaced.letters.push_back(outw.letters[0]);
        for (size_t j = start + len; j < L; ++j) replaced.letters.push_back(w.letters[j]);
        chain_add(out, replaced, coeff * sign);
      }
    }
  }
  return out;
}

CheckReport run_chunked(const std::string& name, size_t n, int jobs,
                        const std::function<void(size_t, CheckReport&)>& body) {
  size_t workers = jobs < 1 ? 1 : static_cast<size_t>(jobs);
  std::vector<CheckReport> parts(workers == 0 ? 1 : workers);
  parallel_chunks(n, static_cast<int>(workers), [&](size_t begin, size_t end, size_t chunk) {
    CheckReport& local = parts[chunk];
    for (size_t i = begin; i < end; ++i) body(i, local);
    local.cases = end - begin;
  });
  CheckReport merged;
  merged.name = name;
  for (const auto& part : parts) {
    merged.cases += part.cases;
    merged.failure_count += part.failure_count;
    merged.ok = merged.ok && part.ok;
    for (const auto& v : part.violations) {
      if (merged.violations.size() < CheckReport::kMaxStoredViolations) {
        merged.violations.push_back(v);
      }
    }
  }
  return merged;
}

CheckReport check_ainfty(const Category& cat, int jobs) {
  const size_t max_len = 2 * static_cast<size_t>(cat.arity_bound()) - 1;
  std::vector<Word> words = cat.enumerate_words(1, max_len, false);
  CheckReport report = run_chunked("ainfty", words.size(), jobs, [&](size_t i, CheckReport& local) {
    Chain once = codifferential(cat, words[i]);
    Chain twice;
    for (const auto& [w, c] : once) chain_add_scaled(twice, codifferential(cat, w), c);
    if (!twice.empty()) {
      local.add_violation(word_str(words[i]), "residual " + chain_str(twice));
    }
  });
  if (report.ok) cat.mark_passed(Checked::AInfty);
  return report;
}

CheckReport check_assumption(const Category& cat, int jobs) {
  std::vector<const EpsTable::value_type*> entries;
  for (const auto& entry : cat.eps()) entries.push_back(&entry);
  CheckReport report =
      run_chunked("cyclic_invariance", entries.size(), jobs, [&](size_t i, CheckReport& local) {
        const auto& [key, value] = *entries[i];
        // Rotate: the leftmost letter moves to the output slot (dualized)
        // and the dual of the output enters on the right.
        const std::string rotated_out = cat.morphism(key.word.letters.front()).dual;
        Word rotated_word = subword(key.word, 1, key.word.weight());
        rotated_word.letters.push_back(cat.morphism(key.out).dual);
        Scalar rhs(0);
        auto it = cat.eps().find(EpsKey{rotated_out, rotated_word});
        if (it != cat.eps().end()) rhs = it->second;
        long dual_out_shifted = cat.shifted_degree(cat.morphism(key.out).dual);
        Scalar sign(koszul_swap_sign(dual_out_shifted, cat.word_shifted_degree(key.word)));
        if (value != sign * rhs) {
          std::ostringstream os;
          os << "stored " << value.str() << " but the rotation (" << rotated_out << ", "
             << word_str(rotated_word) << ") gives " << (sign * rhs).str();
          local.add_violation("(" + key.out + ", " + word_str(key.word) + ")", os.str());
        }
      });
  if (report.ok) cat.mark_passed(Checked::Cyclic);
  return report;
}

ValidationReport validate_category(const Category& cat, int jobs) {
  ValidationReport report;
  // Structural invariants were enforced by the constructor; record that.
  CheckReport structure;
  structure.name = "structure";
  structure.cases = cat.morphisms().size() + cat.eps().size();
  report.add(structure);
  report.add(check_ainfty(cat, jobs));
  report.add(check_assumption(cat, jobs));
  return report;
}

} // namespace ncpoisson
