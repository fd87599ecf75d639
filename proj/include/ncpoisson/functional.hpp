#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ncpoisson/category.hpp"
#include "ncpoisson/word.hpp"

namespace ncpoisson {

/// Finitely supported linear functional on words, i.e. a truncated
/// element of the graded dual of the reduced tensor coalgebra.
///
/// `degree` is the common shifted degree of the supported words when the
/// support is homogeneous (all sign rules only ever need it mod 2, so
/// tracking the support-side degree is equivalent to tracking the dual
/// one).  `weight_support` is the declared weight window; operations
/// propagate exact windows even when cancellation empties the support,
/// so truncation is never silent.
struct Functional {
  Chain support;
  std::optional<long> degree;
  std::set<size_t> weight_support;
};

/// The weight splittings of a word: pairs (upper, lower) where upper is
/// the display prefix.  Ordered by ascending lower weight, one entry per
/// cut; empty for weight-1 words.
std::vector<std::pair<Word, Word>> reduced_coproduct(const Word& w);

/// Builds a functional from explicit support: validates composability,
/// prunes zeros, derives the weight window and (when homogeneous) the
/// degree.
Functional make_functional(const Category& cat, Chain support);

/// Indicator functional of a single word.
Functional delta(const Category& cat, const Word& w);

Scalar evaluate(const Functional& f, const Word& w);
Scalar evaluate(const Functional& f, const Chain& chain);

/// Convolution product: (f . g)(w) = sum over splittings (u, l) of w of
/// (-1)^{deg(g) * shifted deg(u)} f(u) g(l).  Raises UngradedOperand when
/// g has no declared degree and a sign-bearing term arises.
Functional convolution(const Category& cat, const Functional& f, const Functional& g);

/// Differential dual to the bar codifferential, with no extra global
/// sign: (df)(w) = f(dw).  Computed as a pullback over the structure
/// constants, so the cost scales with the support, not with the word
/// basis.
Functional dual_differential(const Category& cat, const Functional& f);

/// Whether (reduced coproduct - its Koszul flip) annihilates x.  On
/// cyclically composable chains this is equivalent to invariance under
/// the signed rotation operator.
bool cocommutator_test(const Category& cat, const Chain& x);

} // namespace ncpoisson
