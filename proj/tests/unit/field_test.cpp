#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stacky/error.hpp"
#include "stacky/field.hpp"

namespace stacky {
namespace {

using Residues = std::vector<std::uint32_t>;

TEST(MakeField, PrimeFieldUsesModulusZ) {
  const Field f = make_field(5, 1);
  EXPECT_EQ(f.characteristic(), 5u);
  EXPECT_EQ(f.degree(), 1u);
  EXPECT_EQ(f.modulus(), (Residues{0, 1}));
  EXPECT_EQ(f.cardinality(), 5);
}

TEST(MakeField, F4Modulus) {
  EXPECT_EQ(make_field(2, 2).modulus(), (Residues{1, 1, 1}));
}

TEST(MakeField, Errors) {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of([] { make_field(4, 1); }), ErrorKind::CompositeCharacteristic);
  EXPECT_EQ(kind_of([] { make_field(1, 1); }), ErrorKind::CompositeCharacteristic);
  EXPECT_EQ(kind_of([] { make_field(3, 0); }), ErrorKind::InvalidDegree);
  EXPECT_EQ(kind_of([] { make_field(2, 21); }), ErrorKind::EnumerationTooLarge);
  EXPECT_NO_THROW(make_field(2, 20));
}

TEST(MakeField, Deterministic) {
  for (auto [p, k] : {std::pair{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
    EXPECT_EQ(make_field(p, k).modulus(), make_field(p, k).modulus());
    EXPECT_TRUE(make_field(p, k) == make_field(p, k));
  }
}

TEST(FindIrreducible, SmallCases) {
  EXPECT_EQ(find_irreducible(2, 1), (Residues{0, 1}));
  EXPECT_EQ(find_irreducible(2, 2), (Residues{1, 1, 1}));
  EXPECT_EQ(find_irreducible(3, 2), (Residues{1, 0, 1}));
}

// For degree 2 and 3 irreducible means rootless, so scan every monic
// candidate in the same order and take the first without a root in F_p.
TEST(FindIrreducible, MatchesRootlessScanForDegreesTwoAndThree) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field fp = make_field(p, 1);
    for (std::uint32_t k : {2u, 3u}) {
      std::optional<Residues> expected;
      const std::uint64_t count = checked_power(p, k);
      for (std::uint64_t m = 0; m < count && !expected; ++m) {
        Residues c(k + 1, 0);
        c[k] = 1;
        std::uint64_t rest = m;
        for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
          c[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rest % p);
          rest /= p;
        }
        std::vector<FieldElement> elems;
        for (auto x : c) elems.push_back(fp.from_integer(x));
        if (!oracle::has_root(Polynomial(fp, elems))) expected = c;
      }
      EXPECT_EQ(find_irreducible(p, k), *expected) << "p=" << p << " k=" << k;
    }
  }
}

TEST(FieldArithmetic, InverseExamples) {
  const Field f5 = make_field(5, 1);
  EXPECT_EQ(f5.inv(f5.from_integer(2)), f5.from_integer(3));
  const Field f4 = make_field(2, 2);
  const FieldElement z = f4.generator();
  EXPECT_EQ(f4.format(f4.inv(z)), "z+1");
  try {
    f4.inv(f4.zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
}

TEST(FieldArithmetic, PowExamples) {
  const Field f5 = make_field(5, 1);
  EXPECT_EQ(f5.pow(f5.from_integer(2), 4), f5.one());
  const Field f4 = make_field(2, 2);
  EXPECT_EQ(f4.pow(f4.generator(), 3), f4.one());
  for (const auto x : enumerate_field(f4)) EXPECT_EQ(f4.pow(x, 0), f4.one());
  EXPECT_EQ(f5.pow(f5.zero(), 0), f5.one());
}

TEST(FieldArithmetic, FrobeniusExamples) {
  const Field f4 = make_field(2, 2);
  EXPECT_EQ(f4.format(f4.frobenius(f4.generator())), "z+1");
  for (const auto x : enumerate_field(f4)) EXPECT_EQ(f4.frobenius(f4.frobenius(x)), x);
  EXPECT_EQ(f4.frobenius(f4.one()), f4.one());
  EXPECT_EQ(f4.frobenius(f4.zero()), f4.zero());
}

TEST(EnumerateField, Examples) {
  const Field f2 = make_field(2, 1);
  EXPECT_EQ(enumerate_field(f2), (std::vector<FieldElement>{FieldElement{0}, FieldElement{1}}));

  const Field f9 = make_field(3, 2);
  const auto elems = enumerate_field(f9);
  ASSERT_EQ(elems.size(), 9u);
  EXPECT_TRUE(elems.front().is_zero());
  FieldElement sum = f9.zero();
  for (const auto x : elems) sum = f9.add(sum, x);
  EXPECT_EQ(sum, f9.zero());

  try {
    enumerate_field(f9, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EnumerationTooLarge);
  }
}

// Exhaustive field axioms on every field up to 81 elements, plus the large
// untabulated paths on one prime and one extension field.
class FieldProperties : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldProperties, InverseFrobeniusAndDistinctness) {
  const auto [p, k] = GetParam();
  const Field f = make_field(p, k);
  const auto elems = enumerate_field(f);
  EXPECT_EQ(std::set<FieldElement>(elems.begin(), elems.end()).size(), f.size());
  for (const auto x : elems) {
    if (!x.is_zero()) EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    EXPECT_EQ(f.add(x, f.neg(x)), f.zero());
    FieldElement y = x;
    for (std::uint32_t i = 0; i < f.degree(); ++i) y = f.frobenius(y);
    EXPECT_EQ(y, x);
  }
  for (const auto x : elems) {
    for (const auto y : elems) {
      EXPECT_EQ(f.frobenius(f.add(x, y)), f.add(f.frobenius(x), f.frobenius(y)));
      EXPECT_EQ(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
    }
  }
  // Prime subfield is fixed.
  for (std::uint32_t c = 0; c < f.characteristic(); ++c) {
    EXPECT_EQ(f.frobenius(f.from_integer(c)), f.from_integer(c));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldProperties,
                         ::testing::Values(std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 3},
                                           std::pair{2, 4}, std::pair{2, 6}, std::pair{3, 1},
                                           std::pair{3, 2}, std::pair{3, 3}, std::pair{3, 4},
                                           std::pair{5, 1}, std::pair{5, 2}, std::pair{7, 1},
                                           std::pair{7, 2}));

TEST(FieldArithmetic, UntabulatedPathsAgreeWithDefinition) {
  // 1031 is prime and above the table threshold; 3^6 = 729 is an extension.
  for (auto [p, k] : {std::pair{1031, 1}, std::pair{3, 6}}) {
    const Field f = make_field(p, k);
    ASSERT_EQ(f.tables(), nullptr);
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::uint32_t> pick(1, f.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
      const FieldElement x{pick(rng)};
      const FieldElement y{pick(rng)};
      EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
      EXPECT_EQ(f.mul(f.add(x, y), x), f.add(f.mul(x, x), f.mul(y, x)));
      EXPECT_EQ(f.pow(x, f.size() - 1), f.one());
    }
  }
}

TEST(FieldFormat, Strings) {
  const Field f9 = make_field(3, 2);
  EXPECT_EQ(f9.format(f9.zero()), "0");
  EXPECT_EQ(f9.format(f9.from_coeffs(std::vector<std::uint32_t>{2, 1})), "z+2");
  EXPECT_EQ(f9.format(f9.from_coeffs(std::vector<std::uint32_t>{0, 2})), "2z");
  const Field f8 = make_field(2, 3);
  EXPECT_EQ(f8.format(f8.from_coeffs(std::vector<std::uint32_t>{1, 0, 1})), "z^2+1");
}

}  // namespace
}  // namespace stacky
