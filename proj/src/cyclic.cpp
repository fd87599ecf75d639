#include "ncpoisson/cyclic.hpp"

#include <vector>

#include "ncpoisson/errors.hpp"
#include "ncpoisson/signs.hpp"

namespace ncpoisson {

namespace {

void require_loop(const Category& cat, const Word& w, const char* op) {
  if (!cat.is_loop(w)) {
    raise("InvalidInput",
          std::string(op) + " needs a cyclically composable word, got " + word_str(w));
  }
}

Chain op_on_chain(const Category& cat, const WordOperator& op, const Chain& x) {
  Chain out;
  for (const auto& [w, c] : x) chain_add_scaled(out, op(cat, w), c);
  return out;
}

} // namespace

Chain b_prime(const Category& cat, const Word& w) {
  require_loop(cat, w, "b_prime");
  return codifferential(cat, w);
}

Chain b_double_prime(const Category& cat, const Word& w) {
  require_loop(cat, w, "b_double_prime");
  Chain out;
  const size_t L = w.weight();
  if (L < 2) return out; // no run can cross the cyclic point
  const size_t K = static_cast<size_t>(cat.arity_bound());
  const size_t n = L - 1;
  std::vector<long> sh(L);
  for (size_t idx = 0; idx < L; ++idx) sh[idx] = cat.shifted_degree(w.letters[idx]);
  // Eat the last i letters and the first j+1 letters (display order); they
  // form one run across the cyclic point, fed to mbar tail-first.
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 0; i + j <= n && i + j + 1 <= K; ++j) {
      Word arg;
      for (size_t idx = L - i; idx < L; ++idx) arg.letters.push_back(w.letters[idx]);
      for (size_t idx = 0; idx <= j; ++idx) arg.letters.push_back(w.letters[idx]);
      Chain image = cat.mbar(arg);
      if (image.empty()) continue;
      long tail_block = 0; // the i letters taken from the display tail
      for (size_t idx = L - i; idx < L; ++idx) tail_block += sh[idx];
      long complement = 0; // every letter not in the tail block
      for (size_t idx = 0; idx < L - i; ++idx) complement += sh[idx];
      long survivors = 0; // letters that remain after the run is eaten
      for (size_t idx = j + 1; idx < L - i; ++idx) survivors += sh[idx];
      Scalar sign(sign_pow(tail_block * complement + survivors));
      for (const auto& [outw, coeff] : image) {
        Word result;
        result.letters.push_back(outw.letters[0]);
        for (size_t idx = j + 1; idx < L - i; ++idx) result.letters.push_back(w.letters[idx]);
        chain_add(out, result, coeff * sign);
      }
    }
  }
  return out;
}

Chain hochschild_b(const Category& cat, const Word& w) {
  Chain out = b_prime(cat, w);
  chain_add_scaled(out, b_double_prime(cat, w), Scalar(1));
  return out;
}

std::pair<Scalar, Word> t_rotate(const Category& cat, const Word& w) {
  require_loop(cat, w, "t_rotate");
  if (w.weight() == 1) return {Scalar(1), w};
  const std::string& moved = w.letters.back();
  long moved_sh = cat.shifted_degree(moved);
  long rest_sh = cat.word_shifted_degree(w) - moved_sh;
  Word rotated;
  rotated.letters.reserve(w.weight());
  rotated.letters.push_back(moved);
  for (size_t idx = 0; idx + 1 < w.weight(); ++idx) rotated.letters.push_back(w.letters[idx]);
  return {Scalar(koszul_swap_sign(moved_sh, rest_sh)), rotated};
}

Chain apply_T(const Category& cat, const Chain& x) {
  Chain out;
  for (const auto& [w, c] : x) {
    auto [sign, rotated] = t_rotate(cat, w);
    chain_add(out, rotated, sign * c);
  }
  return out;
}

Chain apply_N(const Category& cat, const Word& w) {
  require_loop(cat, w, "apply_N");
  Chain out;
  Scalar sign(1);
  Word current = w;
  for (size_t k = 0; k < w.weight(); ++k) {
    chain_add(out, current, sign);
    auto [step, rotated] = t_rotate(cat, current);
    sign = sign * step;
    current = std::move(rotated);
  }
  return out;
}

Chain apply_N(const Category& cat, const Chain& x) {
  Chain out;
  for (const auto& [w, c] : x) chain_add_scaled(out, apply_N(cat, w), c);
  return out;
}

Chain apply_one_minus_T(const Category& cat, const Chain& x) {
  Chain out = x;
  chain_add_scaled(out, apply_T(cat, x), Scalar(-1));
  return out;
}

ValidationReport verify_bicomplex_with(const Category& cat, size_t max_weight,
                                       const WordOperator& interior, const WordOperator& wrap,
                                       int jobs) {
  std::vector<Word> words = cat.enumerate_words(1, max_weight, true);
  WordOperator full = [&interior, &wrap](const Category& c, const Word& w) {
    Chain out = interior(c, w);
    chain_add_scaled(out, wrap(c, w), Scalar(1));
    return out;
  };
  ValidationReport report;
  auto residual_family = [&](const std::string& name,
                             const std::function<Chain(const Word&)>& residual) {
    report.add(run_chunked(name, words.size(), jobs, [&](size_t i, CheckReport& local) {
      Chain r = residual(words[i]);
      if (!r.empty()) local.add_violation(word_str(words[i]), "residual " + chain_str(r));
    }));
  };
  residual_family("b_squared",
                  [&](const Word& w) { return op_on_chain(cat, full, full(cat, w)); });
  residual_family("b_prime_squared",
                  [&](const Word& w) { return op_on_chain(cat, interior, interior(cat, w)); });
  residual_family("exchange_bN", [&](const Word& w) {
    Chain r = op_on_chain(cat, interior, apply_N(cat, w));
    chain_add_scaled(r, apply_N(cat, full(cat, w)), Scalar(-1));
    return r;
  });
  residual_family("exchange_bT", [&](const Word& w) {
    Chain single;
    chain_add(single, w, Scalar(1));
    Chain r = op_on_chain(cat, full, apply_one_minus_T(cat, single));
    chain_add_scaled(r, apply_one_minus_T(cat, interior(cat, w)), Scalar(-1));
    return r;
  });
  return report;
}

ValidationReport verify_bicomplex(const Category& cat, size_t max_weight, int jobs) {
  cat.require(Checked::AInfty, "verify_bicomplex");
  return verify_bicomplex_with(cat, max_weight, b_prime, b_double_prime, jobs);
}

} // namespace ncpoisson
