#pragma once

#include <cstdint>
#include <utility>

#include "stacky/field.hpp"

namespace stacky::detail {

// Upper bound on polynomial length inside the enumeration kernels. Any
// enumeration within a 64-bit budget has fewer than 64 coefficients.
inline constexpr int kKernelMaxLen = 64;

// Arithmetic on packed element indices. TableArith for q <= 256,
// PrimeArith for larger prime fields, GenericArith otherwise.
struct TableArith {
  const std::uint8_t* add_t;
  const std::uint8_t* mul_t;
  const std::uint8_t* neg_t;
  const std::uint8_t* inv_t;
  std::uint32_t q;

  explicit TableArith(const ArithTables& t)
      : add_t(t.add.data()), mul_t(t.mul.data()), neg_t(t.neg.data()), inv_t(t.inv.data()), q(t.q) {}

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_t[x * q + y]; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return mul_t[x * q + y]; }
  std::uint32_t neg(std::uint32_t x) const { return neg_t[x]; }
  std::uint32_t inv(std::uint32_t x) const { return inv_t[x]; }
};

struct PrimeArith {
  std::uint64_t p;

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>((std::uint64_t{x} + y) % p);
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>(std::uint64_t{x} * y % p);
  }
  std::uint32_t neg(std::uint32_t x) const {
    return x == 0 ? 0 : static_cast<std::uint32_t>(p - x);
  }
  std::uint32_t inv(std::uint32_t x) const {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e != 0) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
  }
};

struct GenericArith {
  const Field* field;

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    return field->add(FieldElement{x}, FieldElement{y}).index();
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    return field->mul(FieldElement{x}, FieldElement{y}).index();
  }
  std::uint32_t neg(std::uint32_t x) const { return field->neg(FieldElement{x}).index(); }
  std::uint32_t inv(std::uint32_t x) const { return field->inv(FieldElement{x}).index(); }
};

template <class Fn>
decltype(auto) with_arith(const Field& field, Fn&& fn) {
  if (const auto* t = field.tables()) return fn(TableArith(*t));
  if (field.degree() == 1) return fn(PrimeArith{field.characteristic()});
  return fn(GenericArith{&field});
}

// Degree of coeffs[0..len), -1 for zero.
inline int kernel_degree(const std::uint32_t* coeffs, int len) {
  int d = len - 1;
  while (d >= 0 && coeffs[d] == 0) --d;
  return d;
}

// Coprimality of u (degree du) and v (degree dv) by the Euclidean algorithm.
// Degrees are -1 for zero; (0, 0) must not be passed.
template <class Arith>
bool coprime_kernel(const std::uint32_t* u, int du, const std::uint32_t* v, int dv,
                    const Arith& ar) {
  if (du < 0) return dv == 0;
  if (dv < 0) return du == 0;
  if (du == 0 || dv == 0) return true;

  std::uint32_t buf_a[kKernelMaxLen];
  std::uint32_t buf_b[kKernelMaxLen];
  for (int i = 0; i <= du; ++i) buf_a[i] = u[i];
  for (int i = 0; i <= dv; ++i) buf_b[i] = v[i];
  std::uint32_t* a = buf_a;
  std::uint32_t* b = buf_b;
  int da = du;
  int db = dv;

  for (;;) {
    if (db == 0) return true;
    if (da >= db) {
      const std::uint32_t lead_inv = ar.inv(b[db]);
      for (int i = da; i >= db; --i) {
        const std::uint32_t c = a[i];
        if (c == 0) continue;
        const std::uint32_t factor = ar.neg(ar.mul(c, lead_inv));
        const int shift = i - db;
        for (int j = 0; j < db; ++j) a[shift + j] = ar.add(a[shift + j], ar.mul(factor, b[j]));
        a[i] = 0;
      }
      da = db - 1;
      while (da >= 0 && a[da] == 0) --da;
    }
    // b now divides the old a exactly when the remainder vanished.
    if (da < 0) return false;
    std::swap(a, b);
    std::swap(da, db);
  }
}

// Writes the base-q digits of index into digits[0..len), least significant
// first.
inline void decode_digits(std::uint64_t index, std::uint32_t q, std::uint32_t* digits, int len) {
  for (int i = 0; i < len; ++i) {
    digits[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
}

// Advances the base-q odometer; returns false on wrap-around.
inline bool advance_digits(std::uint32_t q, std::uint32_t* digits, int len) {
  for (int i = 0; i < len; ++i) {
    if (++digits[i] < q) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace stacky::detail
