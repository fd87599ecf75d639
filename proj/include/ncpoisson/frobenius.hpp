#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncpoisson/category.hpp"

namespace ncpoisson {

struct FrobeniusBasisElement {
  std::string id;
  long degree = 0; // unshifted
};

/// A finite graded algebra with a perfect pairing, given by structure
/// constants on a chosen basis.  One object; the product table maps
/// (left, right) to the expansion of left*right in the basis.
struct FrobeniusInput {
  std::string name;
  long dimension = 0;
  std::vector<FrobeniusBasisElement> basis;
  std::map<std::pair<std::string, std::string>, std::map<std::string, Scalar>> product;
  std::map<std::pair<std::string, std::string>, Scalar> pairing;
};

/// Builds the one-object category whose only operation is the binary one
/// induced by the product, with the de-suspension sign folded into the
/// structure constants and duals read off from the pairing.
///
/// Raises DegeneratePairing unless the pairing is a perfect matching of
/// basis elements, GradingMismatch on degree violations, InvalidInput on
/// non-associative products or malformed tables.
Category from_frobenius(const FrobeniusInput& input);

} // namespace ncpoisson
