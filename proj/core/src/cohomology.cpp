#include "stacky/cohomology.hpp"

#include <algorithm>
#include <set>

#include "stacky/error.hpp"

namespace stacky {

std::string to_string(CohomologyKind kind) {
  return kind == CohomologyKind::Compact ? "compact" : "ordinary";
}

CohomologyTable::CohomologyTable(CohomologyKind kind, std::int64_t dim,
                                 std::vector<CohomologyEntry> entries)
    : kind_(kind), dim_(dim) {
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "negative stack dimension");
  std::set<std::int64_t> seen;
  for (auto& entry : entries) {
    if (entry.weights.empty()) continue;
    if (entry.degree < 0 || entry.degree > 2 * dim) {
      throw Error(ErrorKind::InvalidArgument,
                  "degree " + std::to_string(entry.degree) + " outside [0, 2d]");
    }
    if (!seen.insert(entry.degree).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate degree " + std::to_string(entry.degree));
    }
    for (const auto w : entry.weights) {
      if (w < 0 || w > dim) {
        throw Error(ErrorKind::InvalidArgument, "weight " + std::to_string(w) + " outside [0, d]");
      }
    }
    std::sort(entry.weights.begin(), entry.weights.end());
    entries_.push_back(std::move(entry));
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& x, const auto& y) { return x.degree < y.degree; });
}

std::vector<std::int64_t> CohomologyTable::weights_at(std::int64_t degree) const {
  for (const auto& entry : entries_) {
    if (entry.degree == degree) return entry.weights;
  }
  return {};
}

std::uint64_t CohomologyTable::total_dimension() const noexcept {
  std::uint64_t total = 0;
  for (const auto& entry : entries_) total += entry.weights.size();
  return total;
}

CohomologyTable hom_stack_table(const StackParams& params, CohomologyKind kind) {
  const auto s = static_cast<std::int64_t>(params.s());
  const CohomologyTable compact(CohomologyKind::Compact, s + 1,
                                {{2 * s + 2, {s + 1}}, {2 * s - 1, {s - 1}}});
  return kind == CohomologyKind::Compact ? compact : poincare_dual(compact);
}

CohomologyTable poly_space_table(std::uint64_t d1, std::uint64_t d2, CohomologyKind kind) {
  if (d1 == 0 || d2 == 0) {
    throw Error(ErrorKind::OutOfTableRange, "table is only known for positive degrees");
  }
  const auto d = static_cast<std::int64_t>(d1 + d2);
  const CohomologyTable compact(CohomologyKind::Compact, d, {{2 * d, {d}}, {2 * d - 1, {d - 1}}});
  return kind == CohomologyKind::Compact ? compact : poincare_dual(compact);
}

CohomologyTable projective_stack_table(CohomologyKind kind) {
  return CohomologyTable(kind, 1, {{0, {0}}, {2, {1}}});
}

BigInt trace_sum(const CohomologyTable& table, const BigInt& q) {
  if (table.kind() != CohomologyKind::Compact) {
    throw Error(ErrorKind::WrongTableKind, "trace formula needs compactly supported cohomology");
  }
  BigInt total = 0;
  for (const auto& entry : table.entries()) {
    BigInt traces = 0;
    for (const auto w : entry.weights) traces += big_pow(q, static_cast<unsigned long>(w));
    if (entry.degree % 2 == 0) {
      total += traces;
    } else {
      total -= traces;
    }
  }
  return total;
}

CohomologyTable poincare_dual(const CohomologyTable& table) {
  const std::int64_t d = table.dim();
  std::vector<CohomologyEntry> dual;
  dual.reserve(table.entries().size());
  for (const auto& entry : table.entries()) {
    CohomologyEntry flipped{2 * d - entry.degree, {}};
    for (const auto w : entry.weights) flipped.weights.push_back(d - w);
    dual.push_back(std::move(flipped));
  }
  const auto kind = table.kind() == CohomologyKind::Compact ? CohomologyKind::Ordinary
                                                            : CohomologyKind::Compact;
  return CohomologyTable(kind, d, std::move(dual));
}

WeightClassification classify_weights(const CohomologyTable& table) {
  WeightClassification out;
  for (const auto& entry : table.entries()) {
    for (const auto w : entry.weights) {
      if (2 * w != entry.degree) out.mixed_degrees.emplace_back(entry.degree, w);
    }
  }
  out.pure = out.mixed_degrees.empty();
  // Integer weights only, so every table here is Tate.
  out.tate = true;
  return out;
}

std::vector<std::uint64_t> betti_numbers(const CohomologyTable& table) {
  if (table.kind() != CohomologyKind::Ordinary) {
    throw Error(ErrorKind::WrongTableKind, "Betti numbers are read from ordinary cohomology");
  }
  if (table.entries().empty()) return {};
  std::vector<std::uint64_t> betti(static_cast<std::size_t>(table.entries().back().degree) + 1, 0);
  for (const auto& entry : table.entries()) {
    betti[static_cast<std::size_t>(entry.degree)] = entry.weights.size();
  }
  return betti;
}

nlohmann::ordered_json to_json(const CohomologyTable& table) {
  nlohmann::ordered_json out;
  out["kind"] = to_string(table.kind());
  out["dim"] = table.dim();
  out["entries"] = nlohmann::ordered_json::array();
  for (const auto& entry : table.entries()) {
    nlohmann::ordered_json e;
    e["i"] = entry.degree;
    e["weights"] = entry.weights;
    out["entries"].push_back(std::move(e));
  }
  return out;
}

CohomologyTable table_from_json(const nlohmann::ordered_json& json) {
  try {
    const std::string kind_name = json.at("kind").get<std::string>();
    CohomologyKind kind;
    if (kind_name == "compact") {
      kind = CohomologyKind::Compact;
    } else if (kind_name == "ordinary") {
      kind = CohomologyKind::Ordinary;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown table kind '" + kind_name + "'");
    }
    std::vector<CohomologyEntry> entries;
    for (const auto& e : json.at("entries")) {
      entries.push_back({e.at("i").get<std::int64_t>(), e.at("weights").get<std::vector<std::int64_t>>()});
    }
    return CohomologyTable(kind, json.at("dim").get<std::int64_t>(), std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed table JSON: ") + e.what());
  }
}

}  // namespace stacky
