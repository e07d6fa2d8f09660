#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "stacky/bignum.hpp"
#include "stacky/field.hpp"
#include "stacky/poly.hpp"

namespace stacky {

// Weights and degree of Hom_n(P^1, P(a,b)). All three are at least 1.
class StackParams {
 public:
  // Throws InvalidArgument unless a, b, n >= 1.
  StackParams(std::uint32_t a, std::uint32_t b, std::uint32_t n);

  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t an() const noexcept { return std::uint64_t{a_} * n_; }
  std::uint64_t bn() const noexcept { return std::uint64_t{b_} * n_; }
  // (a + b) n
  std::uint64_t s() const noexcept { return an() + bn(); }
  std::uint64_t dim() const noexcept { return s() + 1; }

  friend bool operator==(const StackParams&, const StackParams&) = default;

 private:
  std::uint32_t a_;
  std::uint32_t b_;
  std::uint32_t n_;
};

std::string to_string(const StackParams& params);

// The weighted-count formula assumes char(F_q) divides neither a nor b.
bool hypothesis_holds(const StackParams& params, std::uint64_t characteristic) noexcept;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 250'000'000;

struct EnumerationOptions {
  // Maximum number of coefficient tuples a single enumeration may visit.
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
};

using BigCount = BigInt;
using WeightedCount = BigRational;

// |Poly_1^(d1,d2)(F_q)|: q^{d1+d2} - q^{d1+d2-1} when both degrees are
// positive, q^{d1+d2} otherwise.
BigCount count_poly1_formula(std::uint64_t d1, std::uint64_t d2, const BigInt& q);

// Brute force over all monic pairs of exact degrees (d1, d2).
BigCount count_poly1_enumerate(std::uint64_t d1, std::uint64_t d2, const Field& field,
                               const EnumerationOptions& options = {});

// |T(F_q)|: pairs (u, v), not necessarily monic, coprime, with
// (deg u = an and 0 <= deg v <= bn) or (deg v = bn and 0 <= deg u <= an).
// Visits all q^{(an+1)+(bn+1)} coefficient tuples.
BigCount count_T_enumerate(const StackParams& params, const Field& field,
                           const EnumerationOptions& options = {});

// |T(F_q)| assembled from the exact-degree strata: each admissible (d1, d2)
// contributes (q-1)^2 |Poly_1^(d1,d2)|.
BigCount count_T_strata(const StackParams& params, const BigInt& q);

// q^{(a+b)n+1} - q^{(a+b)n-1}.
BigCount weighted_hom_count_formula(const StackParams& params, const BigInt& q);

struct OrbitReport {
  BigCount orbit_count;
  // stabilizer order -> number of orbits with that stabilizer
  std::map<std::uint64_t, BigCount> stabilizer_histogram;
  WeightedCount weighted_total;
  // |T(F_q)|, gathered during the same pass.
  BigCount point_count;
};

// Splits T(F_q) into orbits of (u, v) -> (l^a u, l^b v), l in F_q^x. Each
// orbit is counted once, at its smallest member in enumeration order.
OrbitReport weighted_count_from_orbits(const StackParams& params, const Field& field,
                                       const EnumerationOptions& options = {});

// |{l in F_q^x : l^a u = u and l^b v = v}|. Throws InvalidPoint for (0, 0).
std::uint64_t stabilizer_order(const Polynomial& u, const Polynomial& v,
                               const StackParams& params, const Field& field);

enum class FiberPoint { Generic, ZeroOne, OneZero };

std::string to_string(FiberPoint point);

// F_q-points of the evaluation fiber over [1:1], [0:1] or [1:0], each built
// from enumerated Poly_1 counts.
BigCount fiber_count(FiberPoint point, const StackParams& params, const Field& field,
                     const EnumerationOptions& options = {});

// #_q P(a,b) = |A^2 \ 0| / (q - 1) = q + 1.
WeightedCount weighted_count_P(std::uint32_t a, std::uint32_t b, const BigInt& q);

}  // namespace stacky
