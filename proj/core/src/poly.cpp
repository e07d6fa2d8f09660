#include "stacky/poly.hpp"

#include <algorithm>

#include "stacky/error.hpp"

namespace stacky {

std::size_t Degree::value() const {
  if (is_neg_inf()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial");
  return static_cast<std::size_t>(value_);
}

std::string to_string(Degree d) {
  return d.is_neg_inf() ? std::string("-inf") : std::to_string(d.value());
}

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto c : coeffs_) {
    if (!field_.contains(c)) throw Error(ErrorKind::InvalidArgument, "coefficient outside field");
  }
  normalize();
}

Polynomial Polynomial::from_integers(const Field& field,
                                     std::initializer_list<std::int64_t> coeffs) {
  std::vector<FieldElement> elems;
  elems.reserve(coeffs.size());
  for (const auto c : coeffs) elems.push_back(field.from_integer(c));
  return Polynomial(field, std::move(elems));
}

Polynomial Polynomial::constant(const Field& field, FieldElement c) {
  return Polynomial(field, {c});
}

Polynomial Polynomial::monomial(const Field& field, std::size_t degree) {
  std::vector<FieldElement> elems(degree + 1, field.zero());
  elems[degree] = field.one();
  return Polynomial(field, std::move(elems));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

Degree Polynomial::degree() const noexcept {
  return coeffs_.empty() ? Degree::neg_inf() : Degree::of(coeffs_.size() - 1);
}

FieldElement Polynomial::leading() const noexcept {
  return coeffs_.empty() ? field_.zero() : coeffs_.back();
}

bool Polynomial::is_monic() const noexcept { return leading() == field_.one(); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  std::vector<FieldElement> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                 [&](FieldElement x) { return field_.mul(c, x); });
  return Polynomial(field_, std::move(out));
}

FieldElement Polynomial::evaluate(FieldElement x) const {
  FieldElement acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_.add(field_.mul(acc, x), *it);
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field_;
  std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field_;
  std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field_;
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(f, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string Polynomial::format() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = field_.format(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != field_.one()) out += compound ? "(" + cs + ")" : cs;
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& f = dividend.field();
  std::vector<FieldElement> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const std::size_t dv = divisor.degree().value();
  if (rem.size() <= dv) return {Polynomial(f), dividend};

  std::vector<FieldElement> quot(rem.size() - dv, f.zero());
  const FieldElement lead_inv = f.inv(divisor.leading());
  for (std::size_t i = rem.size(); i-- > dv;) {
    const FieldElement c = rem[i];
    if (c.is_zero()) continue;
    const FieldElement factor = f.mul(c, lead_inv);
    quot[i - dv] = factor;
    for (std::size_t j = 0; j <= dv; ++j) {
      rem[i - dv + j] = f.sub(rem[i - dv + j], f.mul(factor, divisor.coeff(j)));
    }
  }
  rem.resize(dv);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& u, const Polynomial& v) {
  if (u.is_zero() && v.is_zero()) throw Error(ErrorKind::UndefinedGcd, "gcd(0, 0)");
  Polynomial a = u;
  Polynomial b = v;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FieldElement resultant_sylvester(const Polynomial& u, const Polynomial& v) {
  if (u.is_zero() || v.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomialResultant, "resultant with the zero polynomial");
  }
  const Field& f = u.field();
  const std::size_t m = u.degree().value();
  const std::size_t n = v.degree().value();
  const std::size_t size = m + n;
  if (size == 0) return f.one();

  // n shifted rows of u, then m shifted rows of v, highest coefficient first.
  std::vector<std::vector<FieldElement>> mat(size, std::vector<FieldElement>(size, f.zero()));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t j = 0; j <= m; ++j) mat[row][row + j] = u.coeff(m - j);
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t j = 0; j <= n; ++j) mat[n + row][row + j] = v.coeff(n - j);
  }

  FieldElement det = f.one();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return f.zero();
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = f.neg(det);
    }
    det = f.mul(det, mat[col][col]);
    const FieldElement pivot_inv = f.inv(mat[col][col]);
    for (std::size_t row = col + 1; row < size; ++row) {
      if (mat[row][col].is_zero()) continue;
      const FieldElement factor = f.mul(mat[row][col], pivot_inv);
      for (std::size_t j = col; j < size; ++j) {
        mat[row][j] = f.sub(mat[row][j], f.mul(factor, mat[col][j]));
      }
    }
  }
  return det;
}

FieldElement resultant_euclid(const Polynomial& u, const Polynomial& v) {
  if (u.is_zero() || v.is_zero()) {
    throw Error(ErrorKind::ZeroPolynomialResultant, "resultant with the zero polynomial");
  }
  const Field& f = u.field();
  FieldElement scale = f.one();
  Polynomial a = u;
  Polynomial b = v;
  for (;;) {
    const std::size_t m = a.degree().value();
    const std::size_t n = b.degree().value();
    if (n == 0) return f.mul(scale, f.pow(b.leading(), m));
    if (m == 0) return f.mul(scale, f.pow(a.leading(), n));
    Polynomial r = divmod(a, b).remainder;
    if (r.is_zero()) return f.zero();
    const std::size_t dr = r.degree().value();
    if ((m * n) % 2 == 1) scale = f.neg(scale);
    scale = f.mul(scale, f.pow(b.leading(), m - dr));
    a = std::move(b);
    b = std::move(r);
  }
}

bool is_coprime(const Polynomial& u, const Polynomial& v) {
  if (u.is_zero() && v.is_zero()) throw Error(ErrorKind::UndefinedGcd, "coprimality of (0, 0)");
  if (u.is_zero()) return v.degree() == Degree::of(0);
  if (v.is_zero()) return u.degree() == Degree::of(0);
  return gcd(u, v).degree() == Degree::of(0);
}

}  // namespace stacky
