#pragma once

#include <functional>
#include <utility>

#include "ncpoisson/category.hpp"
#include "ncpoisson/word.hpp"

namespace ncpoisson {

/// Interior differential on a cyclic (loop) word: all insertions that do
/// not cross the cyclic point.  Coincides with the bar codifferential;
/// raises InvalidInput on a non-loop word.
Chain b_prime(const Category& cat, const Word& w);

/// Wrap-around differential: one term per way of feeding the last i
/// letters followed by the first j+1 letters (display order) into an
/// operation; the output letter lands leftmost.  The sign exponent is
/// A*B + C where A is the shifted degree of the right-eaten block, B of
/// everything else, and C of the surviving letters.
Chain b_double_prime(const Category& cat, const Word& w);

/// Full Hochschild differential b = b' + b''.
Chain hochschild_b(const Category& cat, const Word& w);

/// Cyclic rotation: the display-last letter moves to the front, with the
/// Koszul sign of carrying it past the rest.  Identity on weight-1
/// words.
std::pair<Scalar, Word> t_rotate(const Category& cat, const Word& w);

/// The weight-diagonal rotation operator extended linearly.
Chain apply_T(const Category& cat, const Chain& x);

/// Rotation average numerator: sum of all n+1 signed rotations of a
/// weight-(n+1) word.
Chain apply_N(const Category& cat, const Word& w);
Chain apply_N(const Category& cat, const Chain& x);

/// x - T(x).
Chain apply_one_minus_T(const Category& cat, const Chain& x);

using WordOperator = std::function<Chain(const Category&, const Word&)>;

/// Core of verify_bicomplex, parameterized over the two differentials so
/// tests can inject deliberately broken sign conventions.  Checks, for
/// every loop word of weight <= max_weight:
///   b^2 = 0,  b'^2 = 0,  b' N = N b,  b (1-T) = (1-T) b'
/// where b = interior + wrap.
ValidationReport verify_bicomplex_with(const Category& cat, size_t max_weight,
                                       const WordOperator& interior,
                                       const WordOperator& wrap, int jobs = 1);

/// The four bicomplex identities with the real operators.  Requires
/// check_ainfty to have passed.
ValidationReport verify_bicomplex(const Category& cat, size_t max_weight, int jobs = 1);

} // namespace ncpoisson
