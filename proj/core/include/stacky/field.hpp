#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "stacky/bignum.hpp"

namespace stacky {

// Largest q accepted by make_field / enumerate_field unless overridden.
inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

// Fields up to this size carry dense addition/multiplication tables that the
// enumeration kernels read directly.
inline constexpr std::uint32_t kTabulatedFieldMax = 256;

bool is_prime(std::uint64_t n) noexcept;

// Smallest monic irreducible of degree k over F_p, comparing candidates by
// their low-to-high coefficient tuple. Returned low-to-high, length k + 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k);

// An element of F_{p^k}. The payload is the coefficient vector c_0..c_{k-1}
// packed as sum c_i p^i, so equality is coefficient-wise and 0 is the zero
// element. Only meaningful together with the Field that produced it.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const noexcept { return index_; }
  constexpr bool is_zero() const noexcept { return index_ == 0; }

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t index_ = 0;
};

namespace detail {

// Row-major q x q tables indexed by packed element indices.
struct ArithTables {
  std::uint32_t q = 0;
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> mul;
  std::vector<std::uint8_t> neg;
  std::vector<std::uint8_t> inv;  // inv[0] unused
};

}  // namespace detail

// F_{p^k} = F_p[z]/(modulus). Cheap to copy; copies share one immutable
// implementation, so a Field may be handed to any number of threads.
class Field {
 public:
  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  // Monic, low-to-high, length degree() + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  std::uint32_t size() const noexcept;
  BigInt cardinality() const;

  FieldElement zero() const noexcept { return FieldElement{0}; }
  FieldElement one() const noexcept { return FieldElement{1}; }
  // The class of z; equals the constant z only when k = 1 (then it is 0).
  FieldElement generator() const;
  // Image of an integer in the prime subfield.
  FieldElement from_integer(std::int64_t value) const;
  // Reduces each residue mod p; missing high coefficients are zero.
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement x) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  // Throws DivisionByZero on x = 0.
  FieldElement inv(FieldElement x) const;
  FieldElement pow(FieldElement x, std::uint64_t e) const;
  // x -> x^p.
  FieldElement frobenius(FieldElement x) const;

  bool contains(FieldElement x) const noexcept { return x.index() < size(); }

  // "0", "2", "z+1", "2z^2+z".
  std::string format(FieldElement x) const;

  // Null when size() > kTabulatedFieldMax.
  const detail::ArithTables* tables() const noexcept;

  friend bool operator==(const Field& lhs, const Field& rhs) noexcept;

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  friend Field make_field(std::uint64_t p, std::uint64_t k, std::uint64_t bound);

  std::shared_ptr<const Impl> impl_;
};

// Throws CompositeCharacteristic, InvalidDegree, or EnumerationTooLarge when
// p^k exceeds bound.
Field make_field(std::uint64_t p, std::uint64_t k = 1,
                 std::uint64_t bound = kDefaultFieldBound);

// All q elements in packed-index order, starting with 0.
std::vector<FieldElement> enumerate_field(const Field& field,
                                          std::uint64_t bound = kDefaultFieldBound);

// base^exponent, or 0 when the result does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) noexcept;

}  // namespace stacky
