#pragma once

#include <optional>

#include "ncpoisson/category.hpp"
#include "ncpoisson/functional.hpp"
#include "ncpoisson/scalar.hpp"
#include "ncpoisson/word.hpp"

namespace ncpoisson {

/// Value table of the pair bracket of two word functionals: a finitely
/// supported functional on pairs of words.
///
/// `support` holds the entries where both words are nonempty — the public
/// face of the object, and the only part that downstream contractions
/// consume.  While brackets are being composed (derivation and Jacobi
/// bookkeeping) a basis letter pair can absorb one argument word entirely,
/// so the values at pairs with an empty slot are kept alongside:
/// `left_empty` is keyed by the right word of (empty, v), `right_empty` by
/// the left word of (u, empty), and `at_empty_pair` is the value at the
/// doubly empty pair.  These side tables never enter reports; they exist
/// so that composed identities close termwise.
struct DoubleFunctional {
  PairChain support;
  Chain left_empty;
  Chain right_empty;
  Scalar at_empty_pair{0};
  std::optional<long> degree;  ///< common shifted degree of evaluation pairs

  bool zero() const {
    return support.empty() && left_empty.empty() && right_empty.empty() &&
           at_empty_pair == Scalar(0);
  }
};

/// The pair bracket of f and g: every support entry ((u, v), c) records the
/// bracket's value c on the evaluation pair (u, v).  Requires the cyclic
/// invariance check to have passed on cat (the defining sum is only
/// invariant under the choice of dual basis when that holds).
DoubleFunctional double_bracket(const Category& cat, const Functional& f, const Functional& g,
                                SignConvention convention = SignConvention::Shifted);

/// Contraction of double_bracket(f, g) along concatenation: the value on a
/// word w is the sum of the pair values over all two-block splittings of w.
Functional bracket(const Category& cat, const Functional& f, const Functional& g,
                   SignConvention convention = SignConvention::Shifted);

/// Whether f is invariant under the signed rotation on every supported
/// orbit (all supported words must be loops).
bool is_cyclic(const Category& cat, const Functional& f);

/// Rotation average: the value on w is 1/weight(w) times the pairing of f
/// with the signed rotation sum of w.  Projects onto rotation-invariant
/// functionals and is the identity on them.
Functional cyclic_average(const Category& cat, const Functional& f);

/// The induced bracket on rotation-invariant functionals: the rotation
/// average of bracket(f, g).  Raises NotCyclic unless both inputs are
/// rotation invariant.
Functional lie_bracket_cyclic(const Category& cat, const Functional& f, const Functional& g,
                              SignConvention convention = SignConvention::Shifted);

/// Graded Jacobiator of lie_bracket_cyclic on three rotation-invariant
/// functionals, rotation-averaged; identically zero is the pass condition.
Functional jacobi_on_cyclic(const Category& cat, const Functional& f, const Functional& g,
                            const Functional& h,
                            SignConvention convention = SignConvention::Shifted);

/// Exhaustive identity checks for the pair bracket over all delta
/// functionals on composable words of weight <= max_weight:
///   degree_check        — value pairs sit in shifted degree
///                         deg f + deg g + (dimension - 2), in bi-weights
///                         (m, n) with m, n >= 1, m + n = w_f + w_g - 2;
///   skew_check          — {{f,g}}(u,v) kills the Koszul-flipped
///                         {{g,f}}(v,u) up to the degree sign;
///   derivation_check    — right Leibniz rule against the convolution
///                         product, termwise on all value tables;
///   double_jacobi_check — the three-term rotation of the nested bracket
///                         cancels on every word triple;
///   differential_check  — the dual differential is a derivation of the
///                         bracket, termwise on all value tables.
/// Requires both the homotopy-associativity and cyclic-invariance checks.
ValidationReport verify_double_poisson(const Category& cat, size_t max_weight, int jobs = 1,
                                       SignConvention convention = SignConvention::Shifted);

} // namespace ncpoisson
