#include "ncpoisson/word.hpp"

#include <sstream>

namespace ncpoisson {

std::string word_str(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) os << ",";
    os << w.letters[i];
  }
  os << ")";
  return os.str();
}

void chain_add(Chain& dst, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = dst.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

void chain_add_scaled(Chain& dst, const Chain& src, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : src) chain_add(dst, w, v * c);
}

std::string chain_str(const Chain& chain) {
  if (chain.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, v] : chain) {
    if (!first) os << " + ";
    first = false;
    os << v.str() << "*" << word_str(w);
  }
  return os.str();
}

void pair_chain_add(PairChain& dst, const Word& u, const Word& v, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(u, v);
  auto [it, inserted] = dst.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

} // namespace ncpoisson
