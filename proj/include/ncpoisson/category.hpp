#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncpoisson/scalar.hpp"
#include "ncpoisson/word.hpp"

namespace ncpoisson {

enum class Orientation { Plus, Star, SelfDual };

/// Which degrees feed the pair-orientation sign, or whether it is
/// disabled outright (useful for demonstrating that the extra sign is
/// load-bearing).
enum class SignConvention { Shifted, Unshifted, ConstantOne };

struct Morphism {
  std::string id;
  std::string source;
  std::string target;
  long degree = 0; // unshifted grading
  std::string dual;
  Orientation orientation = Orientation::Plus;
};

/// Key of one structure constant: output morphism plus input word.
/// The table stores the coefficient of `out` in mbar(word).
struct EpsKey {
  std::string out;
  Word word;
  auto operator<=>(const EpsKey&) const = default;
};

using EpsTable = std::map<EpsKey, Scalar>;

struct Violation {
  std::string context; // the word / entry the failure was observed on
  std::string detail;  // residual or mismatch description
};

struct CheckReport {
  std::string name;
  bool ok = true;
  size_t cases = 0;
  size_t failure_count = 0;
  std::vector<Violation> violations; // capped; deterministic order

  static constexpr size_t kMaxStoredViolations = 32;
  void add_violation(const std::string& context, const std::string& detail);
};

struct ValidationReport {
  bool ok = true;
  std::vector<CheckReport> checks;

  void add(CheckReport report);
  const CheckReport* find(const std::string& name) const;
};

/// Checks a category can have passed, in increasing strength.  Operations
/// that rely on a check refuse to run before it has succeeded.
enum class Checked { Structure, AInfty, Cyclic };

/// A finite A-infinity category presented by structure constants.
///
/// Degrees are stored unshifted; shifted degrees (deg - 1) are derived at
/// the call sites that need them.  The structure-constant table maps
/// (output, word) to the coefficient of `output` in mbar(word).
class Category {
public:
  Category(std::string name, long dimension, int arity_bound,
           std::vector<std::string> objects, std::vector<Morphism> morphisms,
           EpsTable eps);

  const std::string& name() const { return m_name; }
  long dimension() const { return m_dimension; }
  int arity_bound() const { return m_arity_bound; }
  const std::vector<std::string>& objects() const { return m_objects; }
  const std::vector<Morphism>& morphisms() const { return m_morphisms; }
  const EpsTable& eps() const { return m_eps; }

  bool has_morphism(const std::string& id) const;
  const Morphism& morphism(const std::string& id) const;

  long degree(const std::string& id) const { return morphism(id).degree; }
  long shifted_degree(const std::string& id) const { return morphism(id).degree - 1; }
  long word_degree(const Word& w) const;
  long word_shifted_degree(const Word& w) const;

  bool is_composable(const Word& w) const;
  /// Cyclic composability: composable and source(word) = target(word).
  bool is_loop(const Word& w) const;
  const std::string& source_of(const Word& w) const;
  const std::string& target_of(const Word& w) const;

  /// mbar on a single word: the stored linear combination of outputs.
  /// Words longer than the arity bound have no table entries and yield
  /// the empty combination.
  Chain mbar(const Word& w) const;

  /// Orientation sign of the dual pair through `id`, under the given
  /// convention.  Zero for an even self-dual morphism (no consistent
  /// choice exists there).
  Scalar pair_sign(const std::string& id, SignConvention convention) const;

  /// All composable words with weights in [min_weight, max_weight],
  /// ordered by weight then lexicographically. loops_only restricts to
  /// cyclically composable words.
  std::vector<Word> enumerate_words(size_t min_weight, size_t max_weight,
                                    bool loops_only) const;

  /// Morphism ids in sorted order.
  std::vector<std::string> sorted_ids() const;

  bool passed(Checked level) const;
  void mark_passed(Checked level) const;
  /// Raises NotValidated unless the given check level has passed.
  void require(Checked level, const std::string& operation) const;

private:
  void validate_structure() const;

  std::string m_name;
  long m_dimension;
  int m_arity_bound;
  std::vector<std::string> m_objects;
  std::vector<Morphism> m_morphisms;
  std::map<std::string, size_t> m_index;
  EpsTable m_eps;
  mutable bool m_ainfty_passed = false;
  mutable bool m_cyclic_passed = false;
};

/// Runs `body(i, report)` for i in [0, n) split into deterministic chunks
/// (at most `jobs` threads) and merges the per-chunk reports in chunk
/// order, so the outcome is identical for every jobs value.
CheckReport run_chunked(const std::string& name, size_t n, int jobs,
                        const std::function<void(size_t, CheckReport&)>& body);

/// Single application of the bar codifferential: the signed sum over all
/// contiguous-run insertions of mbar.
Chain codifferential(const Category& cat, const Word& w);

/// Verifies codifferential . codifferential = 0 on all composable words
/// of weight <= 2K - 1.  Marks the category on success.
CheckReport check_ainfty(const Category& cat, int jobs = 1);

/// Verifies the cyclic-invariance condition on every stored structure
/// constant.  Marks the category on success; independent of check_ainfty.
CheckReport check_assumption(const Category& cat, int jobs = 1);

/// Structural + A-infinity + cyclic-invariance checks in one report.
ValidationReport validate_category(const Category& cat, int jobs = 1);

} // namespace ncpoisson
