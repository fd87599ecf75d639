#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ncpoisson/category.hpp"
#include "ncpoisson/matrix.hpp"
#include "ncpoisson/word.hpp"

namespace ncpoisson {

/// The class of a loop word in the rotation-coinvariant space.  Orbits a
/// word shares with minus itself vanish over the rationals; every other
/// orbit is represented by its lexicographically smallest member, with
/// the rotation sign absorbed into the coefficient:
///   [w] = coefficient * [representative].
struct CanonicalClass {
  bool zero = false;
  Word representative;
  Scalar coefficient;
};

CanonicalClass canonical_class(const Category& cat, const Word& w);

/// Rewrites a chain of loop words over canonical representatives,
/// dropping vanishing orbits.
Chain canonicalize_chain(const Category& cat, const Chain& x);

/// Ordered basis of the rotation-coinvariant space in one
/// (weight, shifted degree) cell: canonical representatives only.
std::vector<Word> coker_basis(const Category& cat, size_t weight, long degree);

/// Same basis aggregated over all weights <= max_weight (the differential
/// can lower weight, so degree-indexed complexes mix weights).
std::vector<Word> coker_basis_upto(const Category& cat, size_t max_weight, long degree);

/// One degree column of the truncated cyclic complex, together with the
/// differentials in and out of it.  The full differential raises the
/// shifted degree by one and never raises weight, so truncating at
/// max_weight yields a genuine subcomplex.
///
/// Chain side: induced differential on the coinvariant basis.  Cochain
/// side: the dual differential on rotation-invariant functionals, built
/// independently by evaluating functionals on differentials of
/// representatives; it must equal the transpose of the chain matrix.
struct ComplexSlice {
  long degree = 0; // shifted degree of the middle column
  size_t max_weight = 0;
  std::vector<Word> basis_below; // degree - 1
  std::vector<Word> basis_at;    // degree
  std::vector<Word> basis_above; // degree + 1
  Matrix chain_in;               // rows: basis_at,    cols: basis_below
  Matrix chain_out;              // rows: basis_above, cols: basis_at
  Matrix cochain_in;             // rows: basis_at,    cols: basis_above
  Matrix cochain_out;            // rows: basis_below, cols: basis_at
};

/// Assembles the slice; requires check_ainfty to have passed (the squares
/// of the assembled matrices vanish only for a genuine homotopy-associative
/// structure, and that is verified here).
ComplexSlice cyclic_complex_slice(const Category& cat, long degree, size_t max_weight);

/// Per-cell linear-algebra cross-checks of the rotation operator:
///  - rank_duality: dim Ker(1-T) = dim Coker(1-T) in every weight cell at
///    the given degree, each side from its own elimination, and the count
///    of canonical representatives matches;
///  - kernel_membership: the coproduct-symmetry test agrees with
///    membership in Ker(1-T) on basis words, kernel vectors, and
///    (1-T)-images;
///  - averaging_chain_map: the rotation average intertwines the induced
///    coinvariant differential with the interior differential.
ValidationReport quillen_check(const Category& cat, long degree, size_t max_weight,
                               int jobs = 1);

/// Truncated cyclic homology/cohomology dimension table.  Every table is
/// labeled with its weight truncation; nothing is extrapolated.
struct HcTable {
  size_t max_weight = 0;
  long degree_min = 0;
  long degree_max = 0;
  std::map<long, size_t> chain_dim;   // degree -> dim of truncated homology
  std::map<long, size_t> cochain_dim; // degree -> dim of truncated cohomology
};

/// Homology dimensions of the truncated coinvariant complex (chain side)
/// and, independently, of the invariant-functional complex (cochain
/// side).  Over the rationals the two must agree cellwise.
HcTable hc_dims(const Category& cat, size_t max_weight, long degree_min, long degree_max,
                int jobs = 1);

} // namespace ncpoisson
