#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stacky/bignum.hpp"
#include "stacky/cohomology.hpp"
#include "stacky/counting.hpp"

namespace stacky {

// Truncated power series in t with exact rational coefficients c_0..c_N.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<BigRational> coeffs);

  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<BigRational> coeffs_;
};

// numerator / denominator in t. The denominator's constant term must be
// nonzero (NotExpandable otherwise); both sides are divided by it so that it
// is stored as 1. Trailing zero coefficients are dropped.
class RationalFunction {
 public:
  RationalFunction(std::vector<BigRational> numerator, std::vector<BigRational> denominator);

  const std::vector<BigRational>& numerator() const noexcept { return numerator_; }
  const std::vector<BigRational>& denominator() const noexcept { return denominator_; }

  // "(1 - 2t)/(1 - 8t)"
  std::string format() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  std::vector<BigRational> numerator_;
  std::vector<BigRational> denominator_;
};

// Weighted counts N_1..N_M over F_q, F_{q^2}, ..., F_{q^M}.
struct CountSequence {
  BigInt q;
  std::vector<BigRational> values;
};

// Counts of Hom_n(P^1, P(a,b)) from the closed formula, nu = 1..m.
CountSequence hom_stack_counts(const StackParams& params, const BigInt& q, std::size_t m);

// exp(sum_{nu>=1} N_nu t^nu / nu) through t^order. Throws
// InsufficientCounts when fewer than `order` counts are supplied.
PowerSeries zeta_series_from_counts(const CountSequence& counts, std::size_t order);

// Inverse of the above: the log series sum N_nu t^nu / nu of a series with
// constant term 1 (InvalidArgument otherwise). Coefficient 0 is 0.
PowerSeries formal_log(const PowerSeries& series);

PowerSeries expand_rational(const RationalFunction& function, std::size_t order);

// Product of (1 - q^w t) over the entries of a compact table, odd degrees in
// the numerator and even degrees in the denominator. Throws WrongTableKind.
RationalFunction zeta_rational_from_table(const CohomologyTable& table, const BigInt& q);

struct EigenvalueFit {
  BigInt alpha;
  BigInt beta;
  // Orders nu >= 3 at which N_nu != beta^nu - alpha^nu.
  std::vector<std::size_t> mismatched_orders;

  bool consistent() const noexcept { return mismatched_orders.empty(); }
};

// Solves N_nu = beta^nu - alpha^nu from N_1 and N_2, then checks the
// remaining counts. Throws ModelMismatch when N_1 = 0 or the solution is not
// integral, InsufficientCounts when fewer than two counts are given.
EigenvalueFit fit_two_eigenvalues(const CountSequence& counts);

inline constexpr std::size_t kMaxZetaOrder = 16;
inline constexpr std::size_t kDefaultZetaOrder = 8;

struct ZetaCheck {
  RationalFunction function;
  PowerSeries from_counts;
  PowerSeries from_function;
};

// Compares exp of the closed-form counts with the expansion of the rational
// function read off the compact hom-stack table, coefficient by coefficient
// through t^order. Throws InvalidArgument for order outside [1, 16] and
// ZetaMismatchError at the first differing coefficient.
ZetaCheck verify_zeta(const StackParams& params, const BigInt& q,
                      std::size_t order = kDefaultZetaOrder);

// Coefficients as [numerator, denominator] decimal-string pairs.
nlohmann::ordered_json to_json(const PowerSeries& series);
nlohmann::ordered_json to_json(const RationalFunction& function);
PowerSeries series_from_json(const nlohmann::ordered_json& json);
RationalFunction rational_from_json(const nlohmann::ordered_json& json);

}  // namespace stacky
