#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace stacky {

// Exact counts and rational coefficients. Nothing in the library touches
// floating point.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline BigInt big_from_u64(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

inline std::string decimal(const BigInt& value) { return value.get_str(10); }

// "n" for integers, "n/d" otherwise.
inline std::string decimal(const BigRational& value) { return value.get_str(10); }

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace stacky
