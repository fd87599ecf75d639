#pragma once

#include <map>
#include <string>

#include "ncpoisson/category.hpp"
#include "ncpoisson/word.hpp"

namespace ncpoisson {

/// Multiplicative-map data between two categories: an object map plus
/// weight-n component maps given by their coefficients on word bases.
/// components[w][q] is the coefficient of target letter q in the image
/// of source word w (missing entries are zero).  A component output must
/// satisfy deg(q) = deg(w) + 1 - weight(w), the degree-zero condition in
/// shifted grading.
struct FunctorData {
  std::map<std::string, std::string> object_map;
  std::map<Word, std::map<std::string, Scalar>> components;
  size_t weight_bound = 0;
};

/// Extends the components to words as a coalgebra morphism: the sum over
/// all cuts of the word into contiguous blocks of the blockwise images,
/// concatenated in display order.  Carries no signs (the components have
/// shifted degree zero).
Chain coalgebra_image(const Category& source, const Category& target,
                      const FunctorData& functor, const Word& w);

/// Verifies the multiplicative-map equation - the coalgebra extension
/// commutes with the two codifferentials - on every composable source
/// word of weight <= functor.weight_bound.  Raises ShapeMismatch when a
/// component entry refers to unknown ids, connects mismatched endpoints,
/// or lands in the wrong degree.
ValidationReport check_functor(const Category& source, const Category& target,
                               const FunctorData& functor, int jobs = 1);

} // namespace ncpoisson
