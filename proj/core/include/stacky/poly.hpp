#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stacky/field.hpp"

namespace stacky {

// Polynomial degree with a distinct value for the zero polynomial. There is
// deliberately no arithmetic on Degree; read value() only after checking.
class Degree {
 public:
  static constexpr Degree neg_inf() noexcept { return Degree{}; }
  static constexpr Degree of(std::size_t d) noexcept { return Degree{static_cast<std::int64_t>(d)}; }

  constexpr bool is_neg_inf() const noexcept { return value_ < 0; }
  // Throws InvalidArgument for NEG_INF.
  std::size_t value() const;

  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  constexpr Degree() = default;
  constexpr explicit Degree(std::int64_t v) : value_(v) {}
  std::int64_t value_ = -1;
};

std::string to_string(Degree d);

// Dense univariate polynomial over a finite field, coefficients low-to-high.
// Always normalized: empty for zero, nonzero leading coefficient otherwise.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<FieldElement> coeffs);

  // Integer coefficients taken in the prime subfield, low-to-high.
  static Polynomial from_integers(const Field& field, std::initializer_list<std::int64_t> coeffs);
  static Polynomial constant(const Field& field, FieldElement c);
  // z^degree.
  static Polynomial monomial(const Field& field, std::size_t degree);

  const Field& field() const noexcept { return field_; }
  std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }
  // Coefficient of z^i, zero past the end.
  FieldElement coeff(std::size_t i) const noexcept;
  Degree degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Leading coefficient; zero for the zero polynomial.
  FieldElement leading() const noexcept;
  bool is_monic() const noexcept;

  Polynomial monic() const;
  Polynomial scaled(FieldElement c) const;
  FieldElement evaluate(FieldElement x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string format() const;

 private:
  void normalize();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// Throws DivisionByZero when divisor is zero.
DivMod divmod(const Polynomial& dividend, const Polynomial& divisor);

// Monic gcd; gcd(u, 0) = monic(u). Throws UndefinedGcd when both are zero.
Polynomial gcd(const Polynomial& u, const Polynomial& v);

// Resultant with respect to the actual degrees, via the Sylvester
// determinant. A degree-0 argument c gives c^{deg other}. Throws
// ZeroPolynomialResultant for a zero argument.
FieldElement resultant_sylvester(const Polynomial& u, const Polynomial& v);

// Same value as resultant_sylvester, computed by the Euclidean recursion
// Res(u, v) = (-1)^{deg u deg v} lc(v)^{deg u - deg r} Res(v, r), r = u mod v.
FieldElement resultant_euclid(const Polynomial& u, const Polynomial& v);

// No common root over the algebraic closure. The zero polynomial vanishes
// everywhere, so only constants are coprime to it. Throws UndefinedGcd when
// both are zero.
bool is_coprime(const Polynomial& u, const Polynomial& v);

}  // namespace stacky
