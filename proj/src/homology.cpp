#include "ncpoisson/homology.hpp"

#include <algorithm>
#include <sstream>

#include "ncpoisson/cyclic.hpp"
#include "ncpoisson/errors.hpp"
#include "ncpoisson/functional.hpp"

namespace ncpoisson {

namespace {

std::map<Word, size_t> index_of(const std::vector<Word>& basis) {
  std::map<Word, size_t> out;
  for (size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], i);
  return out;
}

/// Values of the rotation-invariant functional attached to a canonical
/// representative: rep itself maps to 1 and each further rotation to the
/// accumulated rotation sign, so that phi([w]) is rotation-invariant.
std::map<Word, Scalar> invariant_functional(const Category& cat, const Word& rep) {
  std::map<Word, Scalar> out;
  Word current = rep;
  Scalar value(1);
  for (size_t guard = 0; guard <= rep.weight(); ++guard) {
    out[current] = value;
    auto [step, rotated] = t_rotate(cat, current);
    value = value * step;
    current = rotated;
    if (current == rep) return out;
  }
  raise("Internal", "rotation orbit of " + word_str(rep) + " did not close");
}

/// Matrix of the induced differential on coinvariants: column c holds the
/// canonical coordinates of b(domain[c]).
Matrix induced_chain_matrix(const Category& cat, const std::vector<Word>& domain,
                            const std::vector<Word>& codomain) {
  Matrix m(codomain.size(), std::vector<Scalar>(domain.size(), Scalar(0)));
  std::map<Word, size_t> rows = index_of(codomain);
  for (size_t c = 0; c < domain.size(); ++c) {
    Chain image = canonicalize_chain(cat, hochschild_b(cat, domain[c]));
    for (const auto& [w, coeff] : image) {
      auto it = rows.find(w);
      if (it == rows.end()) {
        raise("Internal", "differential of " + word_str(domain[c]) +
                              " leaves the assembled basis at " + word_str(w));
      }
      m[it->second][c] = coeff;
    }
  }
  return m;
}

/// Matrix of the dual differential on invariant functionals, built by
/// direct evaluation (no reuse of the canonical coordinates): the entry at
/// (row r, col c) is phi_{upper[c]} applied to b(lower[r]).
Matrix evaluated_cochain_matrix(const Category& cat, const std::vector<Word>& lower,
                                const std::vector<Word>& upper) {
  Matrix m(lower.size(), std::vector<Scalar>(upper.size(), Scalar(0)));
  std::vector<Chain> images(lower.size());
  for (size_t r = 0; r < lower.size(); ++r) images[r] = hochschild_b(cat, lower[r]);
  for (size_t c = 0; c < upper.size(); ++c) {
    std::map<Word, Scalar> phi = invariant_functional(cat, upper[c]);
    for (size_t r = 0; r < lower.size(); ++r) {
      Scalar value(0);
      for (const auto& [w, coeff] : images[r]) {
        auto it = phi.find(w);
        if (it != phi.end()) value = value + coeff * it->second;
      }
      m[r][c] = value;
    }
  }
  return m;
}

Matrix mat_mul(const Matrix& a, size_t a_cols, const Matrix& b, size_t b_cols) {
  if (a_cols != b.size()) raise("Internal", "composite dimensions disagree");
  Matrix out(a.size(), std::vector<Scalar>(b_cols, Scalar(0)));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t k = 0; k < a_cols; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b_cols; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  }
  return out;
}

bool is_zero_matrix(const Matrix& m) {
  for (const auto& row : m) {
    for (const auto& v : row) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

} // namespace

CanonicalClass canonical_class(const Category& cat, const Word& w) {
  std::map<Word, Scalar> orbit;
  Word current = w;
  Scalar sign(1);
  for (size_t guard = 0; guard <= w.weight(); ++guard) {
    orbit[current] = sign;
    auto [step, rotated] = t_rotate(cat, current);
    sign = sign * step;
    current = rotated;
    if (current == w) break;
  }
  if (current != w) raise("Internal", "rotation orbit of " + word_str(w) + " did not close");
  if (sign != Scalar(1)) {
    // The orbit identifies w with -w, so its class vanishes over the
    // rationals.
    return {true, Word{}, Scalar(0)};
  }
  CanonicalClass out;
  out.zero = false;
  out.representative = orbit.begin()->first;
  out.coefficient = orbit.begin()->second;
  return out;
}

Chain canonicalize_chain(const Category& cat, const Chain& x) {
  Chain out;
  for (const auto& [w, c] : x) {
    CanonicalClass cls = canonical_class(cat, w);
    if (!cls.zero) chain_add(out, cls.representative, c * cls.coefficient);
  }
  return out;
}

std::vector<Word> coker_basis(const Category& cat, size_t weight, long degree) {
  std::vector<Word> out;
  for (const Word& w : cat.enumerate_words(weight, weight, true)) {
    if (cat.word_shifted_degree(w) != degree) continue;
    CanonicalClass cls = canonical_class(cat, w);
    if (!cls.zero && cls.representative == w) out.push_back(w);
  }
  return out;
}

std::vector<Word> coker_basis_upto(const Category& cat, size_t max_weight, long degree) {
  std::vector<Word> out;
  for (size_t weight = 1; weight <= max_weight; ++weight) {
    std::vector<Word> cell = coker_basis(cat, weight, degree);
    out.insert(out.end(), cell.begin(), cell.end());
  }
  return out;
}

ComplexSlice cyclic_complex_slice(const Category& cat, long degree, size_t max_weight) {
  cat.require(Checked::AInfty, "cyclic_complex_slice");
  ComplexSlice slice;
  slice.degree = degree;
  slice.max_weight = max_weight;
  slice.basis_below = coker_basis_upto(cat, max_weight, degree - 1);
  slice.basis_at = coker_basis_upto(cat, max_weight, degree);
  slice.basis_above = coker_basis_upto(cat, max_weight, degree + 1);
  slice.chain_in = induced_chain_matrix(cat, slice.basis_below, slice.basis_at);
  slice.chain_out = induced_chain_matrix(cat, slice.basis_at, slice.basis_above);
  slice.cochain_in = evaluated_cochain_matrix(cat, slice.basis_at, slice.basis_above);
  slice.cochain_out = evaluated_cochain_matrix(cat, slice.basis_below, slice.basis_at);
  if (!is_zero_matrix(mat_mul(slice.chain_out, slice.basis_at.size(), slice.chain_in,
                              slice.basis_below.size()))) {
    raise("Internal", "induced differential does not square to zero");
  }
  if (!is_zero_matrix(mat_mul(slice.cochain_out, slice.basis_at.size(), slice.cochain_in,
                              slice.basis_above.size()))) {
    raise("Internal", "dual differential does not square to zero");
  }
  return slice;
}

ValidationReport quillen_check(const Category& cat, long degree, size_t max_weight, int jobs) {
  cat.require(Checked::AInfty, "quillen_check");
  ValidationReport report;

  // Per-weight cell bases at the requested degree.
  std::vector<std::vector<Word>> cells(max_weight + 1);
  for (size_t weight = 1; weight <= max_weight; ++weight) {
    for (const Word& w : cat.enumerate_words(weight, weight, true)) {
      if (cat.word_shifted_degree(w) == degree) cells[weight].push_back(w);
    }
  }

  report.add(run_chunked("rank_duality", max_weight, jobs, [&](size_t i, CheckReport& local) {
    const size_t weight = i + 1;
    const std::vector<Word>& words = cells[weight];
    const size_t n = words.size();
    if (n == 0) return;
    std::map<Word, size_t> idx = index_of(words);
    Matrix one_minus_t(n, std::vector<Scalar>(n, Scalar(0)));
    for (size_t j = 0; j < n; ++j) {
      Chain column;
      chain_add(column, words[j], Scalar(1));
      for (const auto& [w, c] : apply_one_minus_T(cat, column)) {
        one_minus_t[idx.at(w)][j] = c;
      }
    }
    RankKernel rk = rank_kernel(one_minus_t, n);
    size_t kernel_dim = n - rk.rank;
    size_t coker_dim = n - rank(transpose(one_minus_t, n), n);
    size_t representatives = coker_basis(cat, weight, degree).size();
    std::ostringstream ctx;
    ctx << "weight " << weight << " cell";
    if (kernel_dim != coker_dim) {
      std::ostringstream os;
      os << "dim Ker(1-T) = " << kernel_dim << " but dim Coker(1-T) = " << coker_dim;
      local.add_violation(ctx.str(), os.str());
    }
    if (representatives != coker_dim) {
      std::ostringstream os;
      os << representatives << " canonical representatives but dim Coker(1-T) = " << coker_dim;
      local.add_violation(ctx.str(), os.str());
    }
  }));

  report.add(
      run_chunked("kernel_membership", max_weight, jobs, [&](size_t i, CheckReport& local) {
        const size_t weight = i + 1;
        const std::vector<Word>& words = cells[weight];
        for (const Word& w : words) {
          Chain single;
          chain_add(single, w, Scalar(1));
          Chain image = apply_one_minus_T(cat, single);
          bool in_kernel = image.empty();
          if (cocommutator_test(cat, single) != in_kernel) {
            local.add_violation(word_str(w), in_kernel
                                                 ? "rotation-invariant but coproduct test fails"
                                                 : "coproduct test passes off the kernel");
          }
          if (!in_kernel && cocommutator_test(cat, image)) {
            local.add_violation(word_str(w),
                                "nonzero (1-T)-image passes the coproduct test");
          }
        }
        // Kernel vectors from the elimination must pass the test.
        const size_t n = words.size();
        if (n == 0) return;
        std::map<Word, size_t> idx = index_of(words);
        Matrix one_minus_t(n, std::vector<Scalar>(n, Scalar(0)));
        for (size_t j = 0; j < n; ++j) {
          Chain column;
          chain_add(column, words[j], Scalar(1));
          for (const auto& [w, c] : apply_one_minus_T(cat, column)) {
            one_minus_t[idx.at(w)][j] = c;
          }
        }
        for (const auto& vec : rank_kernel(one_minus_t, n).kernel) {
          Chain x;
          for (size_t j = 0; j < n; ++j) chain_add(x, words[j], vec[j]);
          if (!cocommutator_test(cat, x)) {
            local.add_violation(chain_str(x), "kernel vector fails the coproduct test");
          }
        }
      }));

  std::vector<Word> representatives = coker_basis_upto(cat, max_weight, degree);
  report.add(run_chunked("averaging_chain_map", representatives.size(), jobs,
                         [&](size_t i, CheckReport& local) {
                           const Word& w = representatives[i];
                           Chain lhs;
                           for (const auto& [word, c] : apply_N(cat, w)) {
                             chain_add_scaled(lhs, b_prime(cat, word), c);
                           }
                           Chain rhs = apply_N(
                               cat, canonicalize_chain(cat, hochschild_b(cat, w)));
                           chain_add_scaled(lhs, rhs, Scalar(-1));
                           if (!lhs.empty()) {
                             local.add_violation(word_str(w), "residual " + chain_str(lhs));
                           }
                         }));
  return report;
}

HcTable hc_dims(const Category& cat, size_t max_weight, long degree_min, long degree_max,
                int jobs) {
  cat.require(Checked::AInfty, "hc_dims");
  if (degree_min > degree_max) raise("InvalidInput", "empty degree range");
  HcTable table;
  table.max_weight = max_weight;
  table.degree_min = degree_min;
  table.degree_max = degree_max;

  // One slot per degree in [degree_min - 1, degree_max]: basis dimension
  // and the ranks of the differential leaving that degree, chain side and
  // (independently) cochain side.
  const size_t slots = static_cast<size_t>(degree_max - degree_min + 2);
  std::vector<size_t> dim(slots), chain_rank(slots), cochain_rank(slots);
  run_chunked("hc_cells", slots, jobs, [&](size_t i, CheckReport&) {
    const long d = degree_min - 1 + static_cast<long>(i);
    std::vector<Word> at = coker_basis_upto(cat, max_weight, d);
    std::vector<Word> above = coker_basis_upto(cat, max_weight, d + 1);
    dim[i] = at.size();
    chain_rank[i] = rank(induced_chain_matrix(cat, at, above), at.size());
    cochain_rank[i] = rank(evaluated_cochain_matrix(cat, at, above), above.size());
  });

  for (long d = degree_min; d <= degree_max; ++d) {
    const size_t i = static_cast<size_t>(d - degree_min + 1);
    if (chain_rank[i] + chain_rank[i - 1] > dim[i] ||
        cochain_rank[i] + cochain_rank[i - 1] > dim[i]) {
      raise("Internal", "rank bookkeeping exceeded the cell dimension");
    }
    table.chain_dim[d] = dim[i] - chain_rank[i] - chain_rank[i - 1];
    table.cochain_dim[d] = dim[i] - cochain_rank[i] - cochain_rank[i - 1];
  }
  return table;
}

} // namespace ncpoisson
