#include <gtest/gtest.h>

#include "stacky/error.hpp"
#include "stacky/zeta.hpp"

namespace stacky {
namespace {

using Coeffs = std::vector<BigRational>;

Coeffs ints(std::initializer_list<long> values) {
  Coeffs out;
  for (long v : values) out.emplace_back(v);
  return out;
}

CountSequence counts_of(unsigned long q, std::size_t m, auto fn) {
  CountSequence c{q, {}};
  for (std::size_t nu = 1; nu <= m; ++nu) c.values.push_back(fn(nu));
  return c;
}

TEST(ZetaSeries, Examples) {
  const auto hom = counts_of(2, 3, [](std::size_t nu) {
    return BigRational(big_pow(2, 3 * nu) - big_pow(2, nu));
  });
  EXPECT_EQ(zeta_series_from_counts(hom, 3).coeffs(), ints({1, 6, 48, 384}));

  const auto point = counts_of(1, 3, [](std::size_t) { return BigRational(1); });
  EXPECT_EQ(zeta_series_from_counts(point, 3).coeffs(), ints({1, 1, 1, 1}));
}

// Coarse P^1 over F_2: counts 2^nu + 1. The reference is the Cauchy product
// of 1/(1-t) and 1/(1-2t), c_n = 2^{n+1} - 1.
TEST(ZetaSeries, ProjectiveLineAgainstGeometricProduct) {
  const auto counts = counts_of(2, 6, [](std::size_t nu) { return BigRational(big_pow(2, nu) + 1); });
  const auto series = zeta_series_from_counts(counts, 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(series.coeffs()[n], BigRational(big_pow(2, n + 1) - 1)) << n;
  }
  EXPECT_EQ(zeta_series_from_counts(counts, 2).coeffs(), ints({1, 3, 7}));
}

TEST(ZetaSeries, InsufficientCounts) {
  const auto counts = counts_of(2, 2, [](std::size_t) { return BigRational(1); });
  try {
    zeta_series_from_counts(counts, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientCounts);
  }
}

TEST(ZetaSeries, FractionalIntermediateCoefficients) {
  // N_1 = 1, N_2 = 0: exp(t) truncated gives 1, 1, 1/2, 1/6 only while the
  // higher counts vanish.
  CountSequence c{2, {BigRational(1), BigRational(0), BigRational(0)}};
  const auto series = zeta_series_from_counts(c, 3);
  EXPECT_EQ(series.coeffs()[2], BigRational(1, 2));
  EXPECT_EQ(series.coeffs()[3], BigRational(1, 6));
}

TEST(ExpandRational, Examples) {
  EXPECT_EQ(expand_rational(RationalFunction(ints({1, -2}), ints({1, -8})), 3).coeffs(),
            ints({1, 6, 48, 384}));
  EXPECT_EQ(expand_rational(RationalFunction(ints({1}), ints({1, -1})), 4).coeffs(),
            ints({1, 1, 1, 1, 1}));
  EXPECT_EQ(expand_rational(RationalFunction(ints({1, -1}), ints({1, -1})), 2).coeffs(),
            ints({1, 0, 0}));
}

TEST(RationalFunction, NormalizesAndRejectsZeroConstantTerm) {
  const RationalFunction r(ints({2, -4}), ints({2, -16}));
  EXPECT_EQ(r.numerator(), ints({1, -2}));
  EXPECT_EQ(r.denominator(), ints({1, -8}));
  EXPECT_EQ(r.format(), "(1 - 2t)/(1 - 8t)");
  try {
    RationalFunction(ints({1}), ints({0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotExpandable);
  }
}

TEST(ZetaFromTable, Examples) {
  for (unsigned long q : {5ul, 7ul, 25ul}) {
    const auto r = zeta_rational_from_table(hom_stack_table(StackParams(4, 6, 1), CohomologyKind::Compact), q);
    EXPECT_EQ(r.numerator(), (Coeffs{BigRational(1), BigRational(-big_pow(q, 9))}));
    EXPECT_EQ(r.denominator(), (Coeffs{BigRational(1), BigRational(-big_pow(q, 11))}));
  }
  EXPECT_EQ(zeta_rational_from_table(hom_stack_table(StackParams(1, 1, 1), CohomologyKind::Compact), 2),
            RationalFunction(ints({1, -2}), ints({1, -8})));
  // 1/((1-t)(1-qt)) and its series matches counts q^nu + 1.
  const auto proj = zeta_rational_from_table(projective_stack_table(CohomologyKind::Compact), 3);
  EXPECT_EQ(proj, RationalFunction(ints({1}), ints({1, -4, 3})));
  const auto counts = counts_of(3, 8, [](std::size_t nu) { return BigRational(big_pow(3, nu) + 1); });
  EXPECT_EQ(expand_rational(proj, 8), zeta_series_from_counts(counts, 8));

  try {
    zeta_rational_from_table(hom_stack_table(StackParams(1, 1, 1), CohomologyKind::Ordinary), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongTableKind);
  }
}

TEST(FitTwoEigenvalues, Examples) {
  const auto fit = fit_two_eigenvalues(CountSequence{2, ints({6, 60, 504})});
  EXPECT_EQ(fit.alpha, 2);
  EXPECT_EQ(fit.beta, 8);
  EXPECT_TRUE(fit.consistent());

  const auto l12 = fit_two_eigenvalues(hom_stack_counts(StackParams(4, 6, 1), 5, 3));
  EXPECT_EQ(l12.alpha, big_pow(5, 9));
  EXPECT_EQ(l12.beta, big_pow(5, 11));
  EXPECT_TRUE(l12.consistent());
  EXPECT_EQ(hom_stack_counts(StackParams(4, 6, 1), 5, 1).values.front(), 46875000);

  const auto off = fit_two_eigenvalues(CountSequence{2, ints({6, 60, 505, 4080})});
  EXPECT_EQ(off.mismatched_orders, (std::vector<std::size_t>{3}));
}

TEST(FitTwoEigenvalues, Errors) {
  auto kind_of = [](const CountSequence& c) {
    try {
      fit_two_eigenvalues(c);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind_of(CountSequence{2, ints({0, 5})}), ErrorKind::ModelMismatch);
  EXPECT_EQ(kind_of(CountSequence{2, ints({4, 6})}), ErrorKind::ModelMismatch);   // 6/4
  EXPECT_EQ(kind_of(CountSequence{2, ints({2, 6})}), ErrorKind::ModelMismatch);   // beta = 5/2
  EXPECT_EQ(kind_of(CountSequence{2, {BigRational(1, 2), BigRational(1)}}), ErrorKind::ModelMismatch);
  EXPECT_EQ(kind_of(CountSequence{2, ints({6})}), ErrorKind::InsufficientCounts);
}

const std::vector<StackParams> kPresets = {StackParams(1, 1, 1), StackParams(1, 1, 2), StackParams(1, 2, 1),
                                           StackParams(2, 3, 1), StackParams(4, 6, 1), StackParams(4, 6, 2)};

TEST(ZetaInvariants, RoundTripLogExpAndEigenvalues) {
  for (const auto& p : kPresets) {
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
      if (!hypothesis_holds(p, q)) continue;
      const auto counts = hom_stack_counts(p, q, 8);
      const auto series = zeta_series_from_counts(counts, 8);
      const auto function = zeta_rational_from_table(hom_stack_table(p, CohomologyKind::Compact), q);
      EXPECT_EQ(series, expand_rational(function, 8));

      const auto log = formal_log(series);
      for (std::size_t nu = 1; nu <= 8; ++nu) {
        EXPECT_EQ(log.coeffs()[nu], counts.values[nu - 1] / BigRational(static_cast<unsigned long>(nu)));
      }

      const auto fit = fit_two_eigenvalues(counts);
      EXPECT_EQ(fit.alpha, big_pow(q, p.s() - 1));
      EXPECT_EQ(fit.beta, big_pow(q, p.s() + 1));
      EXPECT_TRUE(fit.consistent());
    }
  }
}

TEST(VerifyZeta, Examples) {
  const auto check = verify_zeta(StackParams(1, 1, 1), 2, 8);
  EXPECT_EQ(check.function, RationalFunction(ints({1, -2}), ints({1, -8})));
  EXPECT_EQ(check.from_counts.coeffs()[3], 384);
  EXPECT_NO_THROW(verify_zeta(StackParams(4, 6, 1), 5, 8));
  EXPECT_NO_THROW(verify_zeta(StackParams(2, 3, 1), 7, 8));
  EXPECT_NO_THROW(verify_zeta(StackParams(4, 6, 2), 25, 16));
  try {
    verify_zeta(StackParams(1, 1, 1), 2, 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
  EXPECT_THROW(verify_zeta(StackParams(1, 1, 1), 2, 0), Error);
}

TEST(ZetaJson, RoundTrip) {
  const auto check = verify_zeta(StackParams(4, 6, 1), 5, 4);
  const std::string series_text = to_json(check.from_counts).dump();
  EXPECT_EQ(series_from_json(nlohmann::ordered_json::parse(series_text)), check.from_counts);
  EXPECT_EQ(to_json(series_from_json(nlohmann::ordered_json::parse(series_text))).dump(), series_text);
  const std::string fn_text = to_json(check.function).dump();
  EXPECT_EQ(fn_text, R"({"numerator":[["1","1"],["-1953125","1"]],"denominator":[["1","1"],["-48828125","1"]]})");
  EXPECT_EQ(rational_from_json(nlohmann::ordered_json::parse(fn_text)), check.function);

  const PowerSeries half({BigRational(1), BigRational(1, 2)});
  EXPECT_EQ(to_json(half).dump(), R"({"order":1,"coeffs":[["1","1"],["1","2"]]})");
}

}  // namespace
}  // namespace stacky
