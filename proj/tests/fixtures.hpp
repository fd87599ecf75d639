#pragma once

// In-code category fixtures shared across the test suite.  Each mirrors a
// small graded algebra whose structure constants are easy to verify by
// hand; the bundled data files reproduce a subset of them.

#include <map>
#include <string>
#include <vector>

#include "ncpoisson/category.hpp"
#include "ncpoisson/scalar.hpp"
#include "ncpoisson/word.hpp"

namespace ncpoisson::testing {

inline Word W(std::vector<std::string> letters) { return Word{std::move(letters)}; }

/// Two dual morphisms, no operations at all.  d = 4, degrees 1 and 3.
inline Category zero4() {
  return Category(
      "zero4", 4, 2, {"pt"},
      {{"p", "pt", "pt", 1, "pstar", Orientation::Plus},
       {"pstar", "pt", "pt", 3, "p", Orientation::Star}},
      {});
}

/// Truncated polynomial algebra on one degree-4 generator, d = 4.
inline Category sph4() {
  EpsTable eps;
  eps[{"e", W({"e", "e"})}] = Scalar(1);
  eps[{"x", W({"e", "x"})}] = Scalar(1);
  eps[{"x", W({"x", "e"})}] = Scalar(1);
  return Category(
      "sph4", 4, 2, {"pt"},
      {{"e", "pt", "pt", 0, "x", Orientation::Plus},
       {"x", "pt", "pt", 4, "e", Orientation::Star}},
      std::move(eps));
}

/// Same algebra with the generator in degree 2, d = 2.
inline Category sph2() {
  EpsTable eps;
  eps[{"e", W({"e", "e"})}] = Scalar(1);
  eps[{"x", W({"e", "x"})}] = Scalar(1);
  eps[{"x", W({"x", "e"})}] = Scalar(1);
  return Category(
      "sph2", 2, 2, {"pt"},
      {{"e", "pt", "pt", 0, "x", Orientation::Plus},
       {"x", "pt", "pt", 2, "e", Orientation::Star}},
      std::move(eps));
}

/// Four-dimensional algebra with two degree-2 generators whose product is
/// the top class in either order; d = 4.
inline Category s2xs2() {
  EpsTable eps;
  eps[{"e", W({"e", "e"})}] = Scalar(1);
  eps[{"y1", W({"e", "y1"})}] = Scalar(1);
  eps[{"y1", W({"y1", "e"})}] = Scalar(1);
  eps[{"y2", W({"e", "y2"})}] = Scalar(1);
  eps[{"y2", W({"y2", "e"})}] = Scalar(1);
  eps[{"z", W({"e", "z"})}] = Scalar(1);
  eps[{"z", W({"z", "e"})}] = Scalar(1);
  eps[{"z", W({"y1", "y2"})}] = Scalar(1);
  eps[{"z", W({"y2", "y1"})}] = Scalar(1);
  return Category(
      "s2xs2", 4, 2, {"pt"},
      {{"e", "pt", "pt", 0, "z", Orientation::Plus},
       {"y1", "pt", "pt", 2, "y2", Orientation::Plus},
       {"y2", "pt", "pt", 2, "y1", Orientation::Star},
       {"z", "pt", "pt", 4, "e", Orientation::Star}},
      std::move(eps));
}

/// Two-term complex: a single differential u -> ustar, no products.
/// Odd duality dimension d = 3, so shifted and unshifted sign
/// conventions genuinely differ here.
inline Category d3complex() {
  EpsTable eps;
  eps[{"ustar", W({"u"})}] = Scalar(1);
  return Category(
      "d3complex", 3, 2, {"pt"},
      {{"u", "pt", "pt", 1, "ustar", Orientation::Plus},
       {"ustar", "pt", "pt", 2, "u", Orientation::Star}},
      std::move(eps));
}

/// Two dual degree-2 morphisms with no operations; d = 4.  Both letters
/// have odd shifted degree, which makes weight-2 rotations sign-bearing.
inline Category pair4() {
  return Category(
      "pair4", 4, 2, {"pt"},
      {{"a", "pt", "pt", 2, "b", Orientation::Plus},
       {"b", "pt", "pt", 2, "a", Orientation::Star}},
      {});
}

/// Arity-3 structure: the only operation is the triple product of the
/// degree-1 generator, landing on its degree-2 dual; d = 3.  Exercises
/// code paths where an operation eats more than two letters.
inline Category cubic3() {
  EpsTable eps;
  eps[{"cstar", W({"c", "c", "c"})}] = Scalar(1);
  return Category(
      "cubic3", 3, 3, {"pt"},
      {{"c", "pt", "pt", 1, "cstar", Orientation::Plus},
       {"cstar", "pt", "pt", 2, "c", Orientation::Star}},
      std::move(eps));
}

/// Two objects joined by a dual pair of arrows; the only loops are the
/// two round trips.
inline Category two_object() {
  return Category(
      "two_object", 4, 2, {"A", "B"},
      {{"f", "A", "B", 2, "g", Orientation::Plus},
       {"g", "B", "A", 2, "f", Orientation::Star}},
      {});
}

} // namespace ncpoisson::testing
