#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "stacky/bignum.hpp"
#include "stacky/counting.hpp"

namespace stacky {

enum class CohomologyKind { Compact, Ordinary };

std::string to_string(CohomologyKind kind);

// One cohomological degree. Each weight w stands for a one-dimensional Tate
// twist Q_l(-w), on which geometric Frobenius acts by q^w.
struct CohomologyEntry {
  std::int64_t degree = 0;
  std::vector<std::int64_t> weights;

  friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

// Tate-type cohomology of a smooth stack of dimension dim. Entries are sorted
// by degree, degrees are distinct and lie in [0, 2 dim], weights lie in
// [0, dim] and are kept sorted; empty entries are dropped.
class CohomologyTable {
 public:
  // Throws InvalidArgument when the invariants above cannot be met.
  CohomologyTable(CohomologyKind kind, std::int64_t dim, std::vector<CohomologyEntry> entries);

  CohomologyKind kind() const noexcept { return kind_; }
  std::int64_t dim() const noexcept { return dim_; }
  const std::vector<CohomologyEntry>& entries() const noexcept { return entries_; }
  // Empty when nothing sits in degree i.
  std::vector<std::int64_t> weights_at(std::int64_t degree) const;
  std::uint64_t total_dimension() const noexcept;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;

 private:
  CohomologyKind kind_;
  std::int64_t dim_;
  std::vector<CohomologyEntry> entries_;
};

struct WeightClassification {
  bool pure = true;
  bool tate = true;
  // (degree, weight) pairs with 2 w != i.
  std::vector<std::pair<std::int64_t, std::int64_t>> mixed_degrees;
};

// Compact: Q_l(-(s+1)) in degree 2s+2 and Q_l(-(s-1)) in degree 2s-1, with
// s = (a+b)n and dim = s+1. Ordinary: Q_l(0) in degree 0 and Q_l(-2) in
// degree 3.
CohomologyTable hom_stack_table(const StackParams& params, CohomologyKind kind);

// Coprime monic pairs of degrees (d1, d2), both positive. Compact:
// Q_l(-(d1+d2)) in degree 2(d1+d2), Q_l(-(d1+d2-1)) in degree 2(d1+d2)-1.
// Throws OutOfTableRange if either degree is 0.
CohomologyTable poly_space_table(std::uint64_t d1, std::uint64_t d2, CohomologyKind kind);

// P(a,b): Q_l(0) in degree 0 and Q_l(-1) in degree 2. The stack is proper,
// so both kinds carry the same entries.
CohomologyTable projective_stack_table(CohomologyKind kind);

// sum_i (-1)^i sum_w q^w over a compact table. Throws WrongTableKind.
BigInt trace_sum(const CohomologyTable& table, const BigInt& q);

// (i, w) -> (2d - i, d - w), flipping the kind. An involution.
CohomologyTable poincare_dual(const CohomologyTable& table);

WeightClassification classify_weights(const CohomologyTable& table);

// b_i = number of weights in degree i, up to the top occupied degree.
// Throws WrongTableKind for compact tables.
std::vector<std::uint64_t> betti_numbers(const CohomologyTable& table);

// {"kind": "compact"|"ordinary", "dim": d, "entries": [{"i": i, "weights": [w]}]}
nlohmann::ordered_json to_json(const CohomologyTable& table);
CohomologyTable table_from_json(const nlohmann::ordered_json& json);

}  // namespace stacky
