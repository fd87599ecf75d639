#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ncpoisson/scalar.hpp"

namespace ncpoisson {

/// Composable word of basis morphism ids.
///
/// Letters are stored in the written order (a_m, ..., a_1): index 0 holds
/// the leftmost letter a_m and letters.back() holds a_1, the first factor
/// applied.  Adjacency means source(letters[i]) = target(letters[i+1]).
struct Word {
  std::vector<std::string> letters;

  Word() = default;
  explicit Word(std::vector<std::string> ls) : letters(std::move(ls)) {}

  size_t weight() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  auto operator<=>(const Word&) const = default;
};

inline Word concat(const Word& left, const Word& right) {
  Word out = left;
  out.letters.insert(out.letters.end(), right.letters.begin(), right.letters.end());
  return out;
}

/// Slice of the display range [begin, end).
inline Word subword(const Word& w, size_t begin, size_t end) {
  Word out;
  out.letters.assign(w.letters.begin() + begin, w.letters.begin() + end);
  return out;
}

std::string word_str(const Word& w);

/// Weight-major order: shorter words first, ties broken lexicographically.
/// Used wherever a basis enumeration order must be deterministic.
struct WeightLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.letters < b.letters;
  }
};

/// Finite linear combination of words.  No zero coefficients are stored.
using Chain = std::map<Word, Scalar>;

void chain_add(Chain& dst, const Word& w, const Scalar& c);
void chain_add_scaled(Chain& dst, const Chain& src, const Scalar& c);
std::string chain_str(const Chain& chain);

/// Element of the tensor square: pairs of words with coefficients.
using PairChain = std::map<std::pair<Word, Word>, Scalar>;

void pair_chain_add(PairChain& dst, const Word& u, const Word& v, const Scalar& c);

} // namespace ncpoisson
