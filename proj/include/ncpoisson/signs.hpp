#pragma once

#include <vector>

#include "ncpoisson/errors.hpp"
#include "ncpoisson/scalar.hpp"

namespace ncpoisson {

inline int parity(long degree) { return static_cast<int>(((degree % 2) + 2) % 2); }

/// Koszul sign for moving an element of degree deg_left past one of
/// degree deg_right: (-1)^{deg_left * deg_right}.
inline int koszul_swap_sign(long deg_left, long deg_right) {
  return (parity(deg_left) != 0 && parity(deg_right) != 0) ? -1 : 1;
}

/// Sign of the comparison isomorphism between the n-fold tensor power of
/// the shift and the shift of the tensor power.
///
/// Input: unshifted degrees |v_1|, ..., |v_n| in left-to-right tensor
/// order.  Returns (-1)^{(n-1)|v_n| + (n-2)|v_{n-1}| + ... + |v_2|}.
inline int shift_sign(const std::vector<long>& unshifted_degrees) {
  if (unshifted_degrees.empty()) {
    raise("InvalidInput", "shift_sign needs a nonempty degree list");
  }
  long exponent = 0;
  for (size_t i = 0; i < unshifted_degrees.size(); ++i) {
    exponent += static_cast<long>(i) * unshifted_degrees[i];
  }
  return sign_pow(exponent);
}

} // namespace ncpoisson
