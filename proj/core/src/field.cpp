#include "stacky/field.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

#include "stacky/error.hpp"

namespace stacky {

namespace {

constexpr std::uint64_t kHardFieldMax = std::uint64_t{1} << 31;

using Residues = std::vector<std::uint32_t>;

// Degree of a residue vector over F_p, -1 for zero.
int residue_degree(const Residues& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p); p prime and a != 0.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quotient = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quotient * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quotient * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of f modulo the monic-or-not divisor g over F_p.
Residues residue_mod(Residues f, const Residues& g, std::uint32_t p) {
  const int dg = residue_degree(g);
  const std::uint64_t lead_inv = inverse_mod(g[static_cast<std::size_t>(dg)], p);
  for (int i = residue_degree(f); i >= dg; --i) {
    const std::uint64_t c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::uint64_t factor = c * lead_inv % p;
    for (int j = 0; j <= dg; ++j) {
      auto& slot = f[static_cast<std::size_t>(i - dg + j)];
      const std::uint64_t sub = factor * g[static_cast<std::size_t>(j)] % p;
      slot = static_cast<std::uint32_t>((slot + p - sub) % p);
    }
  }
  f.resize(static_cast<std::size_t>(std::max(dg, 0)));
  return f;
}

bool is_irreducible(const Residues& f, std::uint32_t p) {
  const int degree = residue_degree(f);
  if (degree <= 1) return degree == 1;
  // Every monic divisor candidate of degree d, coefficients c_0..c_{d-1}.
  for (int d = 1; d <= degree / 2; ++d) {
    Residues divisor(static_cast<std::size_t>(d) + 1, 0);
    divisor[static_cast<std::size_t>(d)] = 1;
    const std::uint64_t count = checked_power(p, static_cast<std::uint64_t>(d));
    for (std::uint64_t m = 0; m < count; ++m) {
      std::uint64_t rest = m;
      for (int j = 0; j < d; ++j) {
        divisor[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (residue_degree(residue_mod(f, divisor, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) noexcept {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return 0;
    out *= base;
  }
  return out;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (k < 1) throw Error(ErrorKind::InvalidDegree, "extension degree must be >= 1");
  Residues candidate(static_cast<std::size_t>(k) + 1, 0);
  candidate[k] = 1;
  const std::uint64_t count = checked_power(p, k);
  if (count == 0) throw Error(ErrorKind::EnumerationTooLarge, "p^k overflows");
  // Scan with c_0 as the most significant digit so the first hit is the
  // lexicographically smallest low-to-high tuple.
  for (std::uint64_t m = 0; m < count; ++m) {
    std::uint64_t rest = m;
    for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
      candidate[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw Error(ErrorKind::InvalidDegree, "no irreducible found");  // unreachable
}

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  Residues modulus;
  Residues place;  // p^i
  detail::ArithTables tables;
  bool tabulated = false;

  Residues unpack(std::uint32_t index) const {
    Residues out(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      out[i] = index % p;
      index /= p;
    }
    return out;
  }

  std::uint32_t pack(const Residues& coeffs) const {
    std::uint64_t index = 0;
    for (std::uint32_t i = 0; i < k && i < coeffs.size(); ++i) {
      index += static_cast<std::uint64_t>(coeffs[i]) * place[i];
    }
    return static_cast<std::uint32_t>(index);
  }

  std::uint32_t add_slow(std::uint32_t x, std::uint32_t y) const {
    if (k == 1) return static_cast<std::uint32_t>((std::uint64_t{x} + y) % p);
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((x % p + y % p) % p) * place[i];
      x /= p;
      y /= p;
    }
    return out;
  }

  std::uint32_t neg_slow(std::uint32_t x) const {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      out += ((p - x % p) % p) * place[i];
      x /= p;
    }
    return out;
  }

  std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y) const {
    if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{x} * y % p);
    const Residues a = unpack(x);
    const Residues b = unpack(y);
    Residues product(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) {
        product[i + j] = static_cast<std::uint32_t>(
            (product[i + j] + std::uint64_t{a[i]} * b[j]) % p);
      }
    }
    return pack(residue_mod(std::move(product), modulus, p));
  }

  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    if (tabulated) return tables.mul[std::size_t{x} * q + y];
    return mul_slow(x, y);
  }

  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const {
    std::uint32_t result = 1;
    std::uint32_t base = x;
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }
};

Field make_field(std::uint64_t p, std::uint64_t k, std::uint64_t bound) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::CompositeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (k < 1) throw Error(ErrorKind::InvalidDegree, "extension degree must be >= 1");
  const std::uint64_t q = checked_power(p, k);
  if (q == 0 || q > std::min(bound, kHardFieldMax)) {
    throw Error(ErrorKind::EnumerationTooLarge,
                "field size " + std::to_string(p) + "^" + std::to_string(k) +
                    " exceeds bound " + std::to_string(std::min(bound, kHardFieldMax)));
  }

  auto impl = std::make_shared<Field::Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->k = static_cast<std::uint32_t>(k);
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = find_irreducible(impl->p, impl->k);
  impl->place.resize(impl->k);
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < impl->k; ++i) {
    impl->place[i] = place;
    place *= impl->p;
  }

  if (q <= kTabulatedFieldMax) {
    auto& t = impl->tables;
    t.q = impl->q;
    t.add.resize(q * q);
    t.mul.resize(q * q);
    t.neg.resize(q);
    t.inv.resize(q, 0);
    for (std::uint32_t x = 0; x < q; ++x) {
      t.neg[x] = static_cast<std::uint8_t>(impl->neg_slow(x));
      for (std::uint32_t y = 0; y < q; ++y) {
        t.add[x * q + y] = static_cast<std::uint8_t>(impl->add_slow(x, y));
        t.mul[x * q + y] = static_cast<std::uint8_t>(impl->mul_slow(x, y));
      }
    }
    for (std::uint32_t x = 1; x < q; ++x) {
      for (std::uint32_t y = 1; y < q; ++y) {
        if (t.mul[x * q + y] == 1) {
          t.inv[x] = static_cast<std::uint8_t>(y);
          break;
        }
      }
    }
    impl->tabulated = true;
  }
  return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
std::uint32_t Field::degree() const noexcept { return impl_->k; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
std::uint32_t Field::size() const noexcept { return impl_->q; }
BigInt Field::cardinality() const { return BigInt(static_cast<unsigned long>(impl_->q)); }

FieldElement Field::generator() const {
  if (impl_->k == 1) return zero();
  return FieldElement{impl_->p};
}

FieldElement Field::from_integer(std::int64_t value) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  Residues reduced(impl_->k, 0);
  for (std::size_t i = 0; i < coeffs.size() && i < impl_->k; ++i) {
    reduced[i] = coeffs[i] % impl_->p;
  }
  return FieldElement{impl_->pack(reduced)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
  return impl_->unpack(x.index());
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
  if (impl_->tabulated) return FieldElement{impl_->tables.add[std::size_t{x.index()} * impl_->q + y.index()]};
  return FieldElement{impl_->add_slow(x.index(), y.index())};
}

FieldElement Field::neg(FieldElement x) const {
  if (impl_->tabulated) return FieldElement{impl_->tables.neg[x.index()]};
  return FieldElement{impl_->neg_slow(x.index())};
}

FieldElement Field::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement Field::mul(FieldElement x, FieldElement y) const {
  return FieldElement{impl_->mul(x.index(), y.index())};
}

FieldElement Field::inv(FieldElement x) const {
  if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (impl_->tabulated) return FieldElement{impl_->tables.inv[x.index()]};
  return FieldElement{impl_->pow(x.index(), impl_->q - 2)};
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
  return FieldElement{impl_->pow(x.index(), e)};
}

FieldElement Field::frobenius(FieldElement x) const { return pow(x, impl_->p); }

std::string Field::format(FieldElement x) const {
  const Residues c = coeffs(x);
  if (impl_->k == 1) return std::to_string(c[0]);
  std::string out;
  for (int i = static_cast<int>(impl_->k) - 1; i >= 0; --i) {
    const std::uint32_t ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(ci);
      continue;
    }
    if (ci != 1) out += std::to_string(ci);
    out += 'z';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

const detail::ArithTables* Field::tables() const noexcept {
  return impl_->tabulated ? &impl_->tables : nullptr;
}

bool operator==(const Field& lhs, const Field& rhs) noexcept {
  if (lhs.impl_ == rhs.impl_) return true;
  return lhs.impl_->p == rhs.impl_->p && lhs.impl_->modulus == rhs.impl_->modulus;
}

std::vector<FieldElement> enumerate_field(const Field& field, std::uint64_t bound) {
  if (field.size() > bound) {
    throw Error(ErrorKind::EnumerationTooLarge,
                "field of size " + std::to_string(field.size()) + " exceeds bound " +
                    std::to_string(bound));
  }
  std::vector<FieldElement> out;
  out.reserve(field.size());
  for (std::uint32_t i = 0; i < field.size(); ++i) out.emplace_back(i);
  return out;
}

}  // namespace stacky
