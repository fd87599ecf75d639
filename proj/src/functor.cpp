#include "ncpoisson/functor.hpp"

#include <algorithm>

#include "ncpoisson/errors.hpp"

namespace ncpoisson {

namespace {

void validate_shape(const Category& source, const Category& target,
                    const FunctorData& functor) {
  std::vector<std::string> target_objects = target.objects();
  std::sort(target_objects.begin(), target_objects.end());
  auto object_image = [&](const std::string& obj) -> const std::string& {
    auto it = functor.object_map.find(obj);
    if (it == functor.object_map.end()) {
      raise("ShapeMismatch", "object '" + obj + "' has no image");
    }
    if (!std::binary_search(target_objects.begin(), target_objects.end(), it->second)) {
      raise("ShapeMismatch", "object '" + obj + "' maps to unknown object '" + it->second + "'");
    }
    return it->second;
  };
  for (const auto& obj : source.objects()) object_image(obj);

  for (const auto& [w, combo] : functor.components) {
    if (w.empty()) raise("ShapeMismatch", "component indexed by the empty word");
    for (const auto& letter : w.letters) {
      if (!source.has_morphism(letter)) {
        raise("ShapeMismatch", "component word uses unknown letter '" + letter + "'");
      }
    }
    if (!source.is_composable(w)) {
      raise("ShapeMismatch", "component word " + word_str(w) + " is not composable");
    }
    long out_degree = source.word_degree(w) + 1 - static_cast<long>(w.weight());
    for (const auto& [q, c] : combo) {
      if (c.is_zero()) continue;
      if (!target.has_morphism(q)) {
        raise("ShapeMismatch", "component of " + word_str(w) + " uses unknown output '" + q + "'");
      }
      const Morphism& out = target.morphism(q);
      if (out.source != object_image(source.source_of(w)) ||
          out.target != object_image(source.target_of(w))) {
        raise("ShapeMismatch",
              "component of " + word_str(w) + " output '" + q + "' connects wrong objects");
      }
      if (out.degree != out_degree) {
        raise("ShapeMismatch", "component of " + word_str(w) + " output '" + q +
                                   "' has degree " + std::to_string(out.degree) + ", expected " +
                                   std::to_string(out_degree));
      }
    }
  }
}

Chain image_of_chain(const Category& source, const Category& target,
                     const FunctorData& functor, const Chain& chain) {
  Chain out;
  for (const auto& [w, c] : chain) {
    chain_add_scaled(out, coalgebra_image(source, target, functor, w), c);
  }
  return out;
}

} // namespace

Chain coalgebra_image(const Category& source, const Category& target,
                      const FunctorData& functor, const Word& w) {
  if (w.empty()) return Chain{{Word(), Scalar(1)}};
  Chain out;
  for (size_t cut = 1; cut <= w.weight(); ++cut) {
    auto it = functor.components.find(subword(w, 0, cut));
    if (it == functor.components.end()) continue;
    Chain tail = coalgebra_image(source, target, functor, subword(w, cut, w.weight()));
    for (const auto& [q, c] : it->second) {
      if (c.is_zero()) continue;
      for (const auto& [tw, tc] : tail) {
        chain_add(out, concat(Word({q}), tw), c * tc);
      }
    }
  }
  return out;
}

ValidationReport check_functor(const Category& source, const Category& target,
                               const FunctorData& functor, int jobs) {
  validate_shape(source, target, functor);

  std::vector<Word> words =
      functor.weight_bound == 0
          ? std::vector<Word>{}
          : source.enumerate_words(1, functor.weight_bound, /*loops_only=*/false);

  CheckReport merged =
      run_chunked("functor_equation", words.size(), jobs, [&](size_t i, CheckReport& local) {
        const Word& w = words[i];
        Chain lhs = image_of_chain(source, target, functor, codifferential(source, w));
        Chain rhs;
        for (const auto& [img, c] : coalgebra_image(source, target, functor, w)) {
          chain_add_scaled(rhs, codifferential(target, img), c);
        }
        Chain residual = lhs;
        chain_add_scaled(residual, rhs, Scalar(-1));
        if (!residual.empty()) {
          local.add_violation(word_str(w), "residual " + chain_str(residual));
        }
      });

  ValidationReport report;
  report.add(std::move(merged));
  return report;
}

} // namespace ncpoisson
