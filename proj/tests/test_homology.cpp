#include "ncpoisson/homology.hpp"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "ncpoisson/cyclic.hpp"
#include "ncpoisson/errors.hpp"
#include "fixtures.hpp"

namespace ncpoisson {
namespace {

using testing::W;

template <typename Fn>
void expect_error(const std::string& name, Fn&& fn) {
  try {
    fn();
    FAIL() << "expected error " << name;
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), name);
  }
}

Category empty_category() { return Category("empty", 4, 2, {"pt"}, {}, {}); }

TEST(CanonicalClass, OddSquaresVanish) {
  // Rotating (e,e) costs the Koszul sign of two odd shifted degrees, so
  // the word is identified with its own negative.
  Category cat = testing::sph4();
  EXPECT_TRUE(canonical_class(cat, W({"e", "e"})).zero);
  EXPECT_TRUE(canonical_class(cat, W({"x", "x"})).zero);
  EXPECT_TRUE(canonical_class(cat, W({"e", "e", "e", "e"})).zero);
  EXPECT_TRUE(canonical_class(cat, W({"x", "x", "x", "x"})).zero);
  // Odd orbit sizes close with a plus sign.
  CanonicalClass cls = canonical_class(cat, W({"e", "e", "e"}));
  EXPECT_FALSE(cls.zero);
  EXPECT_EQ(cls.representative, W({"e", "e", "e"}));
  EXPECT_EQ(cls.coefficient, Scalar(1));
}

TEST(CanonicalClass, AbsorbsTheRotationSign) {
  Category cat = testing::sph4();
  CanonicalClass cls = canonical_class(cat, W({"x", "e"}));
  ASSERT_FALSE(cls.zero);
  EXPECT_EQ(cls.representative, W({"e", "x"}));
  EXPECT_EQ(cls.coefficient, Scalar(-1));
  CanonicalClass deep = canonical_class(cat, W({"e", "e", "x", "e"}));
  ASSERT_FALSE(deep.zero);
  EXPECT_EQ(deep.representative, W({"e", "e", "e", "x"}));
  EXPECT_EQ(deep.coefficient, Scalar(-1));

  Chain x;
  chain_add(x, W({"x", "e"}), Scalar(2));
  chain_add(x, W({"e", "e"}), Scalar(5));
  Chain expected;
  chain_add(expected, W({"e", "x"}), Scalar(-2));
  EXPECT_EQ(canonicalize_chain(cat, x), expected);
}

TEST(CanonicalClass, ClassIsConstantAlongTheOrbit) {
  // [w] = coeff * [rep] must assign every member of an orbit the same
  // class: re-canonicalizing sign * member reproduces the representative
  // with coefficient one.
  for (const Category& cat : {testing::sph4(), testing::d3complex(), testing::cubic3(),
                              testing::pair4(), testing::s2xs2()}) {
    for (const Word& w : cat.enumerate_words(1, 5, true)) {
      CanonicalClass cls = canonical_class(cat, w);
      if (cls.zero) {
        // An anomalous orbit must vanish consistently from every member.
        Chain x;
        chain_add(x, w, Scalar(1));
        EXPECT_TRUE(canonicalize_chain(cat, x).empty()) << word_str(w);
        continue;
      }
      CanonicalClass again = canonical_class(cat, cls.representative);
      ASSERT_FALSE(again.zero) << word_str(w);
      EXPECT_EQ(again.representative, cls.representative) << word_str(w);
      EXPECT_EQ(again.coefficient, Scalar(1)) << word_str(w);
    }
  }
}

TEST(CokerBasis, ListsCanonicalRepresentativesOnly) {
  Category cat = testing::sph4();
  EXPECT_EQ(coker_basis(cat, 1, -1), std::vector<Word>({W({"e"})}));
  EXPECT_EQ(coker_basis(cat, 1, 3), std::vector<Word>({W({"x"})}));
  EXPECT_EQ(coker_basis(cat, 2, 2), std::vector<Word>({W({"e", "x"})}));
  EXPECT_TRUE(coker_basis(cat, 2, -2).empty()); // (e,e) vanishes
  EXPECT_EQ(coker_basis(cat, 4, 4),
            std::vector<Word>({W({"e", "e", "x", "x"}), W({"e", "x", "e", "x"})}));
  EXPECT_EQ(coker_basis_upto(cat, 4, 4),
            std::vector<Word>({W({"e", "e", "x", "x"}), W({"e", "x", "e", "x"})}));

  Category p = testing::pair4();
  EXPECT_EQ(coker_basis(p, 2, 2), std::vector<Word>({W({"a", "b"})}));
}

TEST(ComplexSlice, RequiresTheAinftyCheckFirst) {
  Category cat = testing::sph4();
  expect_error("NotValidated", [&] { cyclic_complex_slice(cat, 1, 4); });
  expect_error("NotValidated", [&] { quillen_check(cat, 1, 4); });
  expect_error("NotValidated", [&] { hc_dims(cat, 4, -1, 1); });
}

TEST(ComplexSlice, SmallSliceMatchesHandComputation) {
  Category cat = testing::sph4();
  ASSERT_TRUE(check_ainfty(cat).ok);
  ComplexSlice slice = cyclic_complex_slice(cat, 1, 4);
  ASSERT_EQ(slice.basis_below, std::vector<Word>({W({"e", "e", "e", "x"})}));
  ASSERT_EQ(slice.basis_at, std::vector<Word>({W({"e", "e", "x"})}));
  ASSERT_EQ(slice.basis_above, std::vector<Word>({W({"e", "x"})}));
  // The wrap image of (e,e,e,x) cancels against the interior one in the
  // coinvariant space, while (e,e,x) maps onto (e,x) with a plus sign
  // after the rotation sign is absorbed.
  EXPECT_EQ(slice.chain_in, Matrix({{Scalar(0)}}));
  EXPECT_EQ(slice.chain_out, Matrix({{Scalar(1)}}));
  EXPECT_EQ(slice.cochain_in, Matrix({{Scalar(1)}}));
  EXPECT_EQ(slice.cochain_out, Matrix({{Scalar(0)}}));
}

TEST(ComplexSlice, CochainMatricesAreTransposesOfChainMatrices) {
  struct Case {
    Category cat;
    size_t max_weight;
    long degree_lo, degree_hi;
  };
  std::vector<Case> cases;
  cases.push_back({testing::sph4(), 4, -4, 9});
  cases.push_back({testing::cubic3(), 5, 0, 5});
  cases.push_back({testing::s2xs2(), 4, -4, 8});
  cases.push_back({testing::d3complex(), 4, 0, 4});
  for (auto& [cat, max_weight, lo, hi] : cases) {
    ASSERT_TRUE(check_ainfty(cat).ok) << cat.name();
    for (long d = lo; d <= hi; ++d) {
      ComplexSlice slice = cyclic_complex_slice(cat, d, max_weight);
      EXPECT_EQ(slice.cochain_in, transpose(slice.chain_out, slice.basis_at.size()))
          << cat.name() << " degree " << d;
      EXPECT_EQ(slice.cochain_out, transpose(slice.chain_in, slice.basis_below.size()))
          << cat.name() << " degree " << d;
    }
  }
}

TEST(QuillenCheck, WeightTwoCellWithTwoOddLetters) {
  // Both letters have odd shifted degree: (a,a) and (b,b) are identified
  // with their negatives, and the mixed 2x2 rotation block has rank one,
  // so Ker(1-T) and Coker(1-T) are both one-dimensional.
  Category cat = testing::pair4();
  ASSERT_TRUE(check_ainfty(cat).ok);
  ValidationReport report = quillen_check(cat, 2, 2);
  EXPECT_TRUE(report.ok);
  for (const char* name : {"rank_duality", "kernel_membership", "averaging_chain_map"}) {
    const CheckReport* check = report.find(name);
    ASSERT_NE(check, nullptr) << name;
    EXPECT_TRUE(check->ok) << name;
  }
  EXPECT_EQ(coker_basis(cat, 2, 2).size(), 1u);
}

TEST(QuillenCheck, PassesAcrossFixturesAndDegrees) {
  struct Case {
    Category cat;
    size_t max_weight;
    long degree_lo, degree_hi;
  };
  std::vector<Case> cases;
  cases.push_back({testing::sph4(), 4, -4, 9});
  cases.push_back({testing::d3complex(), 4, 0, 4});
  cases.push_back({testing::cubic3(), 5, 0, 5});
  for (auto& [cat, max_weight, lo, hi] : cases) {
    ASSERT_TRUE(check_ainfty(cat).ok) << cat.name();
    for (long d = lo; d <= hi; ++d) {
      ValidationReport report = quillen_check(cat, d, max_weight);
      EXPECT_TRUE(report.ok) << cat.name() << " degree " << d;
    }
  }
}

TEST(QuillenCheck, OutcomeDoesNotDependOnJobCount) {
  Category cat = testing::sph4();
  ASSERT_TRUE(check_ainfty(cat).ok);
  ValidationReport serial = quillen_check(cat, 4, 4, 1);
  ValidationReport parallel = quillen_check(cat, 4, 4, 8);
  ASSERT_EQ(serial.checks.size(), parallel.checks.size());
  for (size_t i = 0; i < serial.checks.size(); ++i) {
    EXPECT_EQ(serial.checks[i].name, parallel.checks[i].name);
    EXPECT_EQ(serial.checks[i].ok, parallel.checks[i].ok);
    EXPECT_EQ(serial.checks[i].cases, parallel.checks[i].cases);
    EXPECT_EQ(serial.checks[i].failure_count, parallel.checks[i].failure_count);
  }
}

TEST(HcDims, SilentCategoryCountsSignedNecklaces) {
  // With no operations the differential vanishes and each dimension is
  // the number of rotation classes in its cell.  Both letters here have
  // even shifted degree, so every rotation sign is plus and the count is
  // plain necklace counting, reproduced independently below.
  Category cat = testing::zero4();
  ASSERT_TRUE(check_ainfty(cat).ok);
  std::map<long, size_t> expected;
  std::set<Word> seen;
  for (const Word& w : cat.enumerate_words(1, 3, true)) {
    if (seen.count(w)) continue;
    Word current = w;
    for (size_t k = 0; k < w.weight(); ++k) {
      seen.insert(current);
      std::vector<std::string> rotated;
      rotated.push_back(current.letters.back());
      for (size_t j = 0; j + 1 < current.weight(); ++j) rotated.push_back(current.letters[j]);
      current = Word{rotated};
    }
    ++expected[cat.word_shifted_degree(w)];
  }
  HcTable table = hc_dims(cat, 3, 0, 6);
  for (long d = 0; d <= 6; ++d) {
    size_t want = expected.count(d) ? expected[d] : 0;
    EXPECT_EQ(table.chain_dim[d], want) << "degree " << d;
    EXPECT_EQ(table.cochain_dim[d], want) << "degree " << d;
  }
  EXPECT_EQ(table.chain_dim[0], 3u);
  EXPECT_EQ(table.chain_dim[2], 3u);
  EXPECT_EQ(table.chain_dim[4], 2u);
  EXPECT_EQ(table.chain_dim[6], 1u);
}

TEST(HcDims, TruncatedTableMatchesHandComputation) {
  Category cat = testing::sph4();
  ASSERT_TRUE(check_ainfty(cat).ok);
  HcTable table = hc_dims(cat, 4, -4, 12);
  EXPECT_EQ(table.max_weight, 4u);
  std::map<long, size_t> expected = {{-3, 1}, {-1, 1}, {0, 1}, {3, 1},
                                     {4, 1},  {8, 1},  {9, 1}};
  for (long d = -4; d <= 12; ++d) {
    size_t want = expected.count(d) ? expected[d] : 0;
    EXPECT_EQ(table.chain_dim[d], want) << "degree " << d;
    EXPECT_EQ(table.cochain_dim[d], want) << "degree " << d;
  }
}

TEST(HcDims, ChainAndCochainTablesAgreeCellwise) {
  struct Case {
    Category cat;
    size_t max_weight;
    long degree_lo, degree_hi;
  };
  std::vector<Case> cases;
  cases.push_back({testing::sph4(), 4, -4, 12});
  cases.push_back({testing::sph2(), 5, -5, 5});
  cases.push_back({testing::cubic3(), 5, -1, 6});
  cases.push_back({testing::s2xs2(), 4, -4, 12});
  cases.push_back({testing::d3complex(), 4, -1, 5});
  for (auto& [cat, max_weight, lo, hi] : cases) {
    ASSERT_TRUE(check_ainfty(cat).ok) << cat.name();
    HcTable table = hc_dims(cat, max_weight, lo, hi);
    for (long d = lo; d <= hi; ++d) {
      EXPECT_EQ(table.chain_dim[d], table.cochain_dim[d]) << cat.name() << " degree " << d;
    }
  }
}

TEST(HcDims, EmptyCategoryYieldsZeros) {
  Category cat = empty_category();
  ASSERT_TRUE(check_ainfty(cat).ok);
  HcTable table = hc_dims(cat, 4, -2, 2);
  for (long d = -2; d <= 2; ++d) {
    EXPECT_EQ(table.chain_dim[d], 0u);
    EXPECT_EQ(table.cochain_dim[d], 0u);
  }
  ComplexSlice slice = cyclic_complex_slice(cat, 0, 4);
  EXPECT_TRUE(slice.basis_at.empty());
  EXPECT_TRUE(slice.chain_in.empty());
}

TEST(HcDims, RejectsAnEmptyDegreeRange) {
  Category cat = testing::sph4();
  ASSERT_TRUE(check_ainfty(cat).ok);
  expect_error("InvalidInput", [&] { hc_dims(cat, 4, 2, 1); });
}

TEST(HcDims, OutcomeDoesNotDependOnJobCount) {
  Category cat = testing::sph4();
  ASSERT_TRUE(check_ainfty(cat).ok);
  HcTable serial = hc_dims(cat, 4, -4, 12, 1);
  HcTable parallel = hc_dims(cat, 4, -4, 12, 8);
  EXPECT_EQ(serial.chain_dim, parallel.chain_dim);
  EXPECT_EQ(serial.cochain_dim, parallel.cochain_dim);
}

} // namespace
} // namespace ncpoisson
