#pragma once

// Test-only brute-force references. None of these call into the enumeration
// kernels or the Euclidean routines they are used to check.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stacky/stacky.hpp"

namespace stacky::oracle {

// Embedding of F_q = F_p[z]/(m) into a larger field of the same
// characteristic, found by searching the big field for a root of m.
class Embedding {
 public:
  Embedding(const Field& small, const Field& big) : small_(small), big_(big) {
    const auto& m = small.modulus();
    for (const auto x : enumerate_field(big)) {
      FieldElement acc = big.zero();
      for (std::size_t i = m.size(); i-- > 0;) {
        acc = big.add(big.mul(acc, x), big.from_integer(m[i]));
      }
      if (acc.is_zero()) {
        root_ = x;
        return;
      }
    }
    throw std::logic_error("no embedding");
  }

  FieldElement operator()(FieldElement x) const {
    const auto c = small_.coeffs(x);
    FieldElement acc = big_.zero();
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = big_.add(big_.mul(acc, root_), big_.from_integer(c[i]));
    }
    return acc;
  }

 private:
  Field small_;
  Field big_;
  FieldElement root_;
};

// Horner evaluation of u at x, mapping coefficients through the embedding.
inline FieldElement evaluate_in(const Polynomial& u, const Embedding& embed, const Field& big,
                                FieldElement x) {
  FieldElement acc = big.zero();
  const auto c = u.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, x), embed(c[i]));
  return acc;
}

// Decides "common root in the algebraic closure" for nonzero u, v over F_q
// with min(deg) <= 2 by searching F_{q^2}: any shared irreducible factor then
// has degree <= 2 and splits there.
class QuadraticRootOracle {
 public:
  explicit QuadraticRootOracle(const Field& small)
      : big_(make_field(small.characteristic(), small.degree() * 2)), embed_(small, big_) {}

  bool common_root(const Polynomial& u, const Polynomial& v) const {
    for (const auto x : enumerate_field(big_)) {
      if (evaluate_in(u, embed_, big_, x).is_zero() && evaluate_in(v, embed_, big_, x).is_zero()) {
        return true;
      }
    }
    return false;
  }

 private:
  Field big_;
  Embedding embed_;
};

inline bool has_root(const Polynomial& u) {
  for (const auto x : enumerate_field(u.field())) {
    if (u.evaluate(x).is_zero()) return true;
  }
  return false;
}

// Monic polynomial of exact degree d with the given packed free coefficients.
inline Polynomial monic_from_index(const Field& f, std::size_t d, std::uint64_t index) {
  std::vector<FieldElement> c(d + 1, f.zero());
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = FieldElement{static_cast<std::uint32_t>(index % f.size())};
    index /= f.size();
  }
  c[d] = f.one();
  return Polynomial(f, std::move(c));
}

// Arbitrary polynomial with len coefficient slots.
inline Polynomial poly_from_index(const Field& f, std::size_t len, std::uint64_t index) {
  std::vector<FieldElement> c(len, f.zero());
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = FieldElement{static_cast<std::uint32_t>(index % f.size())};
    index /= f.size();
  }
  return Polynomial(f, std::move(c));
}

inline Polynomial random_poly(const Field& f, std::size_t max_degree, std::mt19937_64& rng,
                              bool nonzero = true) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<std::uint32_t> elem(0, f.size() - 1);
  std::uniform_int_distribution<std::uint32_t> unit(1, f.size() - 1);
  const std::size_t d = deg(rng);
  std::vector<FieldElement> c(d + 1);
  for (auto& x : c) x = FieldElement{elem(rng)};
  if (nonzero) c[d] = FieldElement{unit(rng)};
  return Polynomial(f, std::move(c));
}

// |Poly_1^(d1,d2)| by resultant: independent of gcd and the kernels.
inline std::uint64_t poly1_by_resultant(std::size_t d1, std::size_t d2, const Field& f) {
  std::uint64_t u_space = 1, v_space = 1;
  for (std::size_t i = 0; i < d1; ++i) u_space *= f.size();
  for (std::size_t i = 0; i < d2; ++i) v_space *= f.size();
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < u_space; ++i) {
    const Polynomial u = monic_from_index(f, d1, i);
    for (std::uint64_t j = 0; j < v_space; ++j) {
      const Polynomial v = monic_from_index(f, d2, j);
      if (!resultant_sylvester(u, v).is_zero()) ++hits;
    }
  }
  return hits;
}

// Points of T by Sylvester resultant on Polynomial objects.
inline std::uint64_t t_by_resultant(const StackParams& params, const Field& f) {
  const std::size_t an = params.an();
  const std::size_t bn = params.bn();
  std::uint64_t u_space = 1, v_space = 1;
  for (std::size_t i = 0; i <= an; ++i) u_space *= f.size();
  for (std::size_t i = 0; i <= bn; ++i) v_space *= f.size();
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < u_space; ++i) {
    const Polynomial u = poly_from_index(f, an + 1, i);
    if (u.is_zero()) continue;
    for (std::uint64_t j = 0; j < v_space; ++j) {
      const Polynomial v = poly_from_index(f, bn + 1, j);
      if (v.is_zero()) continue;
      const bool degrees = u.degree() == Degree::of(an) || v.degree() == Degree::of(bn);
      if (degrees && !resultant_sylvester(u, v).is_zero()) ++hits;
    }
  }
  return hits;
}

}  // namespace stacky::oracle
