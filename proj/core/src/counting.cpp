#include "stacky/counting.hpp"

#include <numeric>
#include <vector>

#include "kernels.hpp"
#include "parallel.hpp"
#include "stacky/error.hpp"

namespace stacky {

namespace {

void require_q(const BigInt& q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
}

std::uint64_t tuple_space(const Field& field, std::uint64_t digits, std::uint64_t budget) {
  const std::uint64_t total = checked_power(field.size(), digits);
  if (total == 0 || total > budget) {
    throw Error(ErrorKind::EnumerationTooLarge,
                std::to_string(field.size()) + "^" + std::to_string(digits) +
                    " coefficient tuples exceed the budget of " + std::to_string(budget));
  }
  return total;
}

// Walks (u, v) tuples in index order: v occupies the low digits, u the high
// ones, each stored low-to-high. Only the first *_free coefficients of each
// buffer move; the rest are fixed by the caller.
struct PairCursor {
  std::uint32_t q;
  std::uint32_t* u;
  int u_free;
  std::uint32_t* v;
  int v_free;

  void seek(std::uint64_t index) {
    const std::uint64_t v_space = checked_power(q, static_cast<std::uint64_t>(v_free));
    detail::decode_digits(index % v_space, q, v, v_free);
    detail::decode_digits(index / v_space, q, u, u_free);
  }

  void next() {
    if (!detail::advance_digits(q, v, v_free)) detail::advance_digits(q, u, u_free);
  }
};

bool in_T(int du, int dv, int an, int bn) {
  return (du == an && dv >= 0) || (dv == bn && du >= 0);
}

struct OrbitPartial {
  std::uint64_t points = 0;
  std::uint64_t orbits = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;
};

struct ScalePair {
  std::uint32_t alpha;  // l^a
  std::uint32_t beta;   // l^b
};

template <class Arith>
std::uint64_t count_poly1_range(std::uint64_t d1, std::uint64_t d2, std::uint32_t q,
                                std::uint64_t begin, std::uint64_t end, const Arith& ar) {
  std::uint32_t u[detail::kKernelMaxLen] = {};
  std::uint32_t v[detail::kKernelMaxLen] = {};
  u[d1] = 1;
  v[d2] = 1;
  PairCursor cursor{q, u, static_cast<int>(d1), v, static_cast<int>(d2)};
  cursor.seek(begin);
  std::uint64_t hits = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    if (detail::coprime_kernel(u, static_cast<int>(d1), v, static_cast<int>(d2), ar)) ++hits;
    cursor.next();
  }
  return hits;
}

template <class Arith>
std::uint64_t count_T_range(const StackParams& params, std::uint32_t q, std::uint64_t begin,
                            std::uint64_t end, const Arith& ar) {
  const int an = static_cast<int>(params.an());
  const int bn = static_cast<int>(params.bn());
  std::uint32_t u[detail::kKernelMaxLen] = {};
  std::uint32_t v[detail::kKernelMaxLen] = {};
  PairCursor cursor{q, u, an + 1, v, bn + 1};
  cursor.seek(begin);
  std::uint64_t hits = 0;
  for (std::uint64_t i = begin; i < end; ++i) {
    const int du = detail::kernel_degree(u, an + 1);
    const int dv = detail::kernel_degree(v, bn + 1);
    if (in_T(du, dv, an, bn) && detail::coprime_kernel(u, du, v, dv, ar)) ++hits;
    cursor.next();
  }
  return hits;
}

// -1, 0, 1 comparing the scaled tuple (alpha u, beta v) against (u, v) in
// enumeration order (u's top coefficient most significant).
template <class Arith>
int compare_scaled(const std::uint32_t* u, int u_len, const std::uint32_t* v, int v_len,
                   ScalePair scale, const Arith& ar) {
  for (int i = u_len - 1; i >= 0; --i) {
    const std::uint32_t s = ar.mul(scale.alpha, u[i]);
    if (s != u[i]) return s < u[i] ? -1 : 1;
  }
  for (int i = v_len - 1; i >= 0; --i) {
    const std::uint32_t s = ar.mul(scale.beta, v[i]);
    if (s != v[i]) return s < v[i] ? -1 : 1;
  }
  return 0;
}

template <class Arith>
OrbitPartial orbit_range(const StackParams& params, std::uint32_t q,
                         const std::vector<ScalePair>& scales, std::uint64_t begin,
                         std::uint64_t end, const Arith& ar) {
  const int an = static_cast<int>(params.an());
  const int bn = static_cast<int>(params.bn());
  std::uint32_t u[detail::kKernelMaxLen] = {};
  std::uint32_t v[detail::kKernelMaxLen] = {};
  PairCursor cursor{q, u, an + 1, v, bn + 1};
  cursor.seek(begin);
  OrbitPartial out;
  for (std::uint64_t i = begin; i < end; ++i) {
    const int du = detail::kernel_degree(u, an + 1);
    const int dv = detail::kernel_degree(v, bn + 1);
    if (in_T(du, dv, an, bn) && detail::coprime_kernel(u, du, v, dv, ar)) {
      ++out.points;
      bool canonical = true;
      std::uint64_t stabilizer = 0;
      for (const ScalePair& scale : scales) {
        const int cmp = compare_scaled(u, an + 1, v, bn + 1, scale, ar);
        if (cmp < 0) {
          canonical = false;
          break;
        }
        if (cmp == 0) ++stabilizer;
      }
      if (canonical) {
        ++out.orbits;
        ++out.histogram[stabilizer];
      }
    }
    cursor.next();
  }
  return out;
}

}  // namespace

StackParams::StackParams(std::uint32_t a, std::uint32_t b, std::uint32_t n) : a_(a), b_(b), n_(n) {
  if (a == 0 || b == 0 || n == 0) {
    throw Error(ErrorKind::InvalidArgument, "a, b and n must all be at least 1");
  }
}

std::string to_string(const StackParams& params) {
  return "(a=" + std::to_string(params.a()) + ", b=" + std::to_string(params.b()) +
         ", n=" + std::to_string(params.n()) + ")";
}

bool hypothesis_holds(const StackParams& params, std::uint64_t characteristic) noexcept {
  return params.a() % characteristic != 0 && params.b() % characteristic != 0;
}

BigCount count_poly1_formula(std::uint64_t d1, std::uint64_t d2, const BigInt& q) {
  require_q(q);
  const std::uint64_t total = d1 + d2;
  if (d1 > 0 && d2 > 0) return big_pow(q, total) - big_pow(q, total - 1);
  return big_pow(q, total);
}

BigCount count_poly1_enumerate(std::uint64_t d1, std::uint64_t d2, const Field& field,
                               const EnumerationOptions& options) {
  const std::uint64_t total = tuple_space(field, d1 + d2, options.budget);
  const std::uint32_t q = field.size();
  const std::uint64_t hits = detail::with_arith(field, [&](const auto& ar) {
    return detail::parallel_reduce<std::uint64_t>(
        total, options.threads,
        [&](std::uint64_t begin, std::uint64_t end) {
          return count_poly1_range(d1, d2, q, begin, end, ar);
        },
        [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
  });
  return big_from_u64(hits);
}

BigCount count_T_enumerate(const StackParams& params, const Field& field,
                           const EnumerationOptions& options) {
  const std::uint64_t total =
      tuple_space(field, (params.an() + 1) + (params.bn() + 1), options.budget);
  const std::uint32_t q = field.size();
  const std::uint64_t hits = detail::with_arith(field, [&](const auto& ar) {
    return detail::parallel_reduce<std::uint64_t>(
        total, options.threads,
        [&](std::uint64_t begin, std::uint64_t end) {
          return count_T_range(params, q, begin, end, ar);
        },
        [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
  });
  return big_from_u64(hits);
}

BigCount count_T_strata(const StackParams& params, const BigInt& q) {
  require_q(q);
  const std::uint64_t an = params.an();
  const std::uint64_t bn = params.bn();
  BigCount monic_total = 0;
  for (std::uint64_t d2 = 0; d2 <= bn; ++d2) monic_total += count_poly1_formula(an, d2, q);
  // (an, bn) was already taken in the first sweep.
  for (std::uint64_t d1 = 0; d1 < an; ++d1) monic_total += count_poly1_formula(d1, bn, q);
  const BigInt units = q - 1;
  return units * units * monic_total;
}

BigCount weighted_hom_count_formula(const StackParams& params, const BigInt& q) {
  require_q(q);
  return big_pow(q, params.s() + 1) - big_pow(q, params.s() - 1);
}

OrbitReport weighted_count_from_orbits(const StackParams& params, const Field& field,
                                       const EnumerationOptions& options) {
  const std::uint64_t total =
      tuple_space(field, (params.an() + 1) + (params.bn() + 1), options.budget);
  const std::uint32_t q = field.size();

  std::vector<ScalePair> scales;
  scales.reserve(q - 1);
  for (std::uint32_t l = 1; l < q; ++l) {
    const FieldElement lambda{l};
    scales.push_back({field.pow(lambda, params.a()).index(), field.pow(lambda, params.b()).index()});
  }

  const OrbitPartial merged = detail::with_arith(field, [&](const auto& ar) {
    return detail::parallel_reduce<OrbitPartial>(
        total, options.threads,
        [&](std::uint64_t begin, std::uint64_t end) {
          return orbit_range(params, q, scales, begin, end, ar);
        },
        [](OrbitPartial& acc, OrbitPartial part) {
          acc.points += part.points;
          acc.orbits += part.orbits;
          for (const auto& [order, count] : part.histogram) acc.histogram[order] += count;
        });
  });

  OrbitReport report;
  report.orbit_count = big_from_u64(merged.orbits);
  report.point_count = big_from_u64(merged.points);
  report.weighted_total = 0;
  for (const auto& [order, count] : merged.histogram) {
    report.stabilizer_histogram[order] = big_from_u64(count);
    report.weighted_total += make_rational(big_from_u64(count), big_from_u64(order));
  }
  report.weighted_total.canonicalize();
  return report;
}

std::uint64_t stabilizer_order(const Polynomial& u, const Polynomial& v,
                               const StackParams& params, const Field& field) {
  if (u.is_zero() && v.is_zero()) throw Error(ErrorKind::InvalidPoint, "(0, 0) is not in T");
  std::uint64_t order = 0;
  for (const FieldElement lambda : enumerate_field(field, field.size())) {
    if (lambda.is_zero()) continue;
    const Polynomial su = u.scaled(field.pow(lambda, params.a()));
    const Polynomial sv = v.scaled(field.pow(lambda, params.b()));
    if (su == u && sv == v) ++order;
  }
  return order;
}

std::string to_string(FiberPoint point) {
  switch (point) {
    case FiberPoint::Generic: return "[1:1]";
    case FiberPoint::ZeroOne: return "[0:1]";
    case FiberPoint::OneZero: return "[1:0]";
  }
  return "?";
}

BigCount fiber_count(FiberPoint point, const StackParams& params, const Field& field,
                     const EnumerationOptions& options) {
  const std::uint64_t an = params.an();
  const std::uint64_t bn = params.bn();
  const BigInt units = field.cardinality() - 1;
  BigCount total = 0;
  switch (point) {
    case FiberPoint::Generic:
      return count_poly1_enumerate(an, bn, field, options);
    case FiberPoint::ZeroOne:
      for (std::uint64_t k = 1; k <= an; ++k) {
        total += units * count_poly1_enumerate(an - k, bn, field, options);
      }
      return total;
    case FiberPoint::OneZero:
      for (std::uint64_t k = 1; k <= bn; ++k) {
        total += units * count_poly1_enumerate(an, bn - k, field, options);
      }
      return total;
  }
  return total;
}

WeightedCount weighted_count_P(std::uint32_t a, std::uint32_t b, const BigInt& q) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidArgument, "weights must be at least 1");
  require_q(q);
  return make_rational(q * q - 1, q - 1);
}

}  // namespace stacky
