#include "ncpoisson/frobenius.hpp"

#include <algorithm>
#include <sstream>

#include "ncpoisson/errors.hpp"
#include "ncpoisson/signs.hpp"

namespace ncpoisson {

namespace {

const char* kObject = "pt";

} // namespace

Category from_frobenius(const FrobeniusInput& input) {
  std::map<std::string, long> degrees;
  for (const auto& b : input.basis) {
    if (b.id.empty()) raise("InvalidInput", "empty basis id");
    if (!degrees.emplace(b.id, b.degree).second) {
      raise("InvalidInput", "duplicate basis id '" + b.id + "'");
    }
  }
  auto known = [&](const std::string& id) { return degrees.count(id) > 0; };
  auto product_of = [&](const std::string& a, const std::string& b) {
    auto it = input.product.find({a, b});
    return it == input.product.end() ? std::map<std::string, Scalar>{} : it->second;
  };

  for (const auto& [key, combo] : input.product) {
    if (!known(key.first) || !known(key.second)) {
      raise("InvalidInput", "product entry on unknown basis ids");
    }
    for (const auto& [out, c] : combo) {
      if (!known(out)) raise("InvalidInput", "product output '" + out + "' is unknown");
      if (c.is_zero()) continue;
      if (degrees[out] != degrees[key.first] + degrees[key.second]) {
        raise("GradingMismatch", "product (" + key.first + ", " + key.second +
                                     ") has an output of wrong degree");
      }
    }
  }

  // Pairing: perfect signed matching, graded symmetric, of total degree d.
  std::map<std::string, std::string> dual;
  for (const auto& [key, value] : input.pairing) {
    if (!known(key.first) || !known(key.second)) {
      raise("InvalidInput", "pairing entry on unknown basis ids");
    }
    if (value.is_zero()) continue;
    if (degrees[key.first] + degrees[key.second] != input.dimension) {
      raise("GradingMismatch", "pairing <" + key.first + ", " + key.second +
                                   "> violates the degree-d rule");
    }
    if (!dual.emplace(key.first, key.second).second) {
      raise("DegeneratePairing", "'" + key.first + "' pairs with more than one element");
    }
  }
  for (const auto& b : input.basis) {
    auto it = dual.find(b.id);
    if (it == dual.end()) {
      raise("DegeneratePairing", "'" + b.id + "' pairs with nothing");
    }
    if (dual.count(it->second) == 0 || dual[it->second] != b.id) {
      raise("DegeneratePairing", "pairing is not symmetric as a matching at '" + b.id + "'");
    }
    Scalar forward = input.pairing.at({b.id, it->second});
    Scalar backward = input.pairing.at({it->second, b.id});
    Scalar expected = backward * Scalar(koszul_swap_sign(degrees[b.id], degrees[it->second]));
    if (forward != expected) {
      raise("InvalidInput", "pairing is not graded symmetric at '" + b.id + "'");
    }
  }

  // Associativity of the structure constants.
  for (const auto& a : input.basis) {
    for (const auto& b : input.basis) {
      for (const auto& c : input.basis) {
        std::map<std::string, Scalar> left, right;
        for (const auto& [q, v] : product_of(a.id, b.id)) {
          for (const auto& [r, w] : product_of(q, c.id)) {
            left[r] += v * w;
          }
        }
        for (const auto& [q, v] : product_of(b.id, c.id)) {
          for (const auto& [r, w] : product_of(a.id, q)) {
            right[r] += v * w;
          }
        }
        for (const auto& [r, v] : right) left[r] -= v;
        for (const auto& [r, v] : left) {
          if (!v.is_zero()) {
            raise("InvalidInput", "product is not associative at (" + a.id + ", " + b.id +
                                      ", " + c.id + ")");
          }
        }
      }
    }
  }

  // Two-sided trace rule <ab, c> = <a, bc>; together with symmetry and
  // associativity this is what makes the derived structure constants
  // rotation invariant.
  auto pair_value = [&](const std::string& a, const std::string& b) {
    auto it = input.pairing.find({a, b});
    return it == input.pairing.end() ? Scalar(0) : it->second;
  };
  for (const auto& a : input.basis) {
    for (const auto& b : input.basis) {
      for (const auto& c : input.basis) {
        Scalar lhs(0), rhs(0);
        for (const auto& [q, v] : product_of(a.id, b.id)) lhs += v * pair_value(q, c.id);
        for (const auto& [q, v] : product_of(b.id, c.id)) rhs += v * pair_value(a.id, q);
        if (lhs != rhs) {
          raise("InvalidInput", "pairing is not compatible with the product at (" + a.id +
                                    ", " + b.id + ", " + c.id + ")");
        }
      }
    }
  }

  std::vector<Morphism> morphisms;
  for (const auto& b : input.basis) {
    Orientation orientation;
    if (dual[b.id] == b.id) {
      orientation = Orientation::SelfDual;
    } else if (b.id < dual[b.id]) {
      orientation = Orientation::Plus;
    } else {
      orientation = Orientation::Star;
    }
    morphisms.push_back({b.id, kObject, kObject, b.degree, dual[b.id], orientation});
  }

  // The binary operation on de-suspended letters picks up the sign of the
  // comparison isomorphism, which for two factors is (-1)^{degree of the
  // first-applied letter}.
  EpsTable eps;
  for (const auto& [key, combo] : input.product) {
    const auto& [a2, a1] = key;
    Scalar sign(sign_pow(degrees[a1]));
    for (const auto& [out, c] : combo) {
      if (c.is_zero()) continue;
      eps[EpsKey{out, Word({a2, a1})}] = c * sign;
    }
  }

  return Category(input.name, input.dimension, 2, {kObject}, std::move(morphisms),
                  std::move(eps));
}

} // namespace ncpoisson
