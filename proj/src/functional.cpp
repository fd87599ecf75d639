#include "ncpoisson/functional.hpp"

#include "ncpoisson/errors.hpp"
#include "ncpoisson/signs.hpp"

namespace ncpoisson {

std::vector<std::pair<Word, Word>> reduced_coproduct(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  const size_t n = w.weight();
  if (n < 2) return out;
  out.reserve(n - 1);
  // lower = last i letters in display order, i = 1 .. n-1.
  for (size_t i = 1; i < n; ++i) {
    out.emplace_back(subword(w, 0, n - i), subword(w, n - i, n));
  }
  return out;
}

Functional make_functional(const Category& cat, Chain support) {
  Functional f;
  for (auto it = support.begin(); it != support.end();) {
    if (it->second.is_zero()) {
      it = support.erase(it);
      continue;
    }
    if (!cat.is_composable(it->first)) {
      raise("InvalidInput", "functional supported on non-composable word " + word_str(it->first));
    }
    ++it;
  }
  bool homogeneous = true;
  std::optional<long> degree;
  for (const auto& [w, c] : support) {
    f.weight_support.insert(w.weight());
    long d = cat.word_shifted_degree(w);
    if (!degree) {
      degree = d;
    } else if (*degree != d) {
      homogeneous = false;
    }
  }
  if (homogeneous && degree) f.degree = degree;
  f.support = std::move(support);
  return f;
}

Functional delta(const Category& cat, const Word& w) {
  return make_functional(cat, Chain{{w, Scalar(1)}});
}

Scalar evaluate(const Functional& f, const Word& w) {
  auto it = f.support.find(w);
  return it == f.support.end() ? Scalar(0) : it->second;
}

Scalar evaluate(const Functional& f, const Chain& chain) {
  Scalar out(0);
  for (const auto& [w, c] : chain) out += c * evaluate(f, w);
  return out;
}

Functional convolution(const Category& cat, const Functional& f, const Functional& g) {
  Functional out;
  for (size_t wf : f.weight_support) {
    for (size_t wg : g.weight_support) out.weight_support.insert(wf + wg);
  }
  if (f.degree && g.degree) out.degree = *f.degree + *g.degree;
  for (const auto& [u, fu] : f.support) {
    long upper_degree = cat.word_shifted_degree(u);
    for (const auto& [l, gl] : g.support) {
      if (cat.source_of(u) != cat.target_of(l)) continue;
      Scalar sign(1);
      if (parity(upper_degree) != 0) {
        if (!g.degree) {
          raise("UngradedOperand",
                "convolution needs a declared degree on the right factor to "
                "move it past " +
                    word_str(u));
        }
        sign = Scalar(sign_pow(*g.degree * upper_degree));
      }
      chain_add(out.support, concat(u, l), sign * fu * gl);
    }
  }
  return out;
}

Functional dual_differential(const Category& cat, const Functional& f) {
  Functional out;
  const size_t K = static_cast<size_t>(cat.arity_bound());
  if (!f.weight_support.empty()) {
    size_t lo = *f.weight_support.begin();
    size_t hi = *f.weight_support.rbegin() + K - 1;
    for (size_t n = lo; n <= hi; ++n) out.weight_support.insert(n);
  }
  if (f.degree) out.degree = *f.degree - 1;

  // Index the structure constants by output letter once.
  std::map<std::string, std::vector<std::pair<const Word*, const Scalar*>>> by_output;
  for (const auto& [key, value] : cat.eps()) {
    by_output[key.out].emplace_back(&key.word, &value);
  }

  // (df)(w) = f(dw): every supported word v pulls back along each way of
  // blowing one of its letters up into a structure-constant word.
  for (const auto& [v, fv] : f.support) {
    for (size_t s = 0; s < v.weight(); ++s) {
      auto hit = by_output.find(v.letters[s]);
      if (hit == by_output.end()) continue;
      long right_exponent = 0;
      for (size_t j = s + 1; j < v.weight(); ++j) {
        right_exponent += cat.shifted_degree(v.letters[j]);
      }
      Scalar sign(sign_pow(right_exponent));
      for (const auto& [run, value] : hit->second) {
        Word w = subword(v, 0, s);
        w.letters.insert(w.letters.end(), run->letters.begin(), run->letters.end());
        for (size_t j = s + 1; j < v.weight(); ++j) w.letters.push_back(v.letters[j]);
        chain_add(out.support, w, sign * (*value) * fv);
      }
    }
  }
  return out;
}

bool cocommutator_test(const Category& cat, const Chain& x) {
  PairChain residual;
  for (const auto& [w, c] : x) {
    for (const auto& [u, l] : reduced_coproduct(w)) {
      pair_chain_add(residual, u, l, c);
      Scalar flip(koszul_swap_sign(cat.word_shifted_degree(u), cat.word_shifted_degree(l)));
      pair_chain_add(residual, l, u, -(flip * c));
    }
  }
  return residual.empty();
}

} // namespace ncpoisson
