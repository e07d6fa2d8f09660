#include "stacky_cli/suites.hpp"

#include <numeric>
#include <random>
#include <set>

#include "stacky/cohomology.hpp"
#include "stacky/poly.hpp"
#include "stacky/zeta.hpp"

namespace stacky::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kSweepSpace = 100'000'000;
constexpr std::uint64_t kDeskEnumerationSpace = 10'000'000;

const std::vector<FieldChoice> kSweepFields = {{2, 1}, {3, 1}, {5, 1}, {7, 1}};
const std::vector<FieldChoice> kPoly1Fields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
const std::vector<FieldChoice> kTraceFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {5, 2}};

ordered_json stack_inputs(const StackParams& p, const FieldChoice& f) {
  return ordered_json{{"a", p.a()}, {"b", p.b()}, {"n", p.n()}, {"p", f.p}, {"k", f.k}, {"q", f.q()}};
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ',';
    out += s;
  }
  return out;
}

std::string join_series(const PowerSeries& series) {
  std::vector<std::string> parts;
  for (const auto& c : series.coeffs()) parts.push_back(decimal(c));
  return join(parts);
}

// Sweep instances where the hypothesis holds and the coefficient space fits.
std::vector<std::pair<StackParams, FieldChoice>> sweep_instances() {
  std::vector<std::pair<StackParams, FieldChoice>> out;
  for (const auto& params : sweep_presets()) {
    for (const auto& f : kSweepFields) {
      if (!hypothesis_holds(params, f.p)) continue;
      const std::uint64_t space = checked_power(f.q(), params.s() + 2);
      if (space == 0 || space > kSweepSpace) continue;
      out.emplace_back(params, f);
    }
  }
  return out;
}

EnumerationOptions enumeration(const SuiteOptions& o) { return {o.budget, o.threads}; }

std::vector<VerificationRecord> criterion_poly1(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  for (const auto& fc : kPoly1Fields) {
    const Field f = make_field(fc.p, fc.k);
    for (std::uint64_t d1 = 0; d1 <= 6; ++d1) {
      for (std::uint64_t d2 = 0; d1 + d2 <= 6; ++d2) {
        Stopwatch sw;
        const BigInt observed = count_poly1_enumerate(d1, d2, f, enumeration(o));
        const BigInt expected = count_poly1_formula(d1, d2, f.cardinality());
        out.push_back(make_record("poly1.enumerate", {{"d1", d1}, {"d2", d2}, {"q", fc.q()}}, decimal(expected),
                                  decimal(observed), true, sw.elapsed_ms()));
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> criterion_cover(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  for (const auto& [params, fc] : sweep_instances()) {
    Stopwatch sw;
    const Field f = make_field(fc.p, fc.k);
    const BigInt q = f.cardinality();
    const BigInt t = count_T_enumerate(params, f, enumeration(o));
    const BigInt expected = big_pow(q, params.s() + 1) - big_pow(q, params.s() - 1);
    out.push_back(make_record("T.quotient", stack_inputs(params, fc), decimal(expected),
                              decimal(make_rational(t, q - 1)), true, sw.elapsed_ms()));
  }
  return out;
}

std::vector<VerificationRecord> criterion_strata(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  for (const auto& [params, fc] : sweep_instances()) {
    Stopwatch sw;
    const Field f = make_field(fc.p, fc.k);
    const BigInt t = count_T_enumerate(params, f, enumeration(o));
    out.push_back(make_record("T.strata", stack_inputs(params, fc), decimal(count_T_strata(params, f.cardinality())),
                              decimal(t), true, sw.elapsed_ms()));
  }
  return out;
}

std::vector<VerificationRecord> criterion_fibers(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  for (const auto& [params, fc] : sweep_instances()) {
    const Field f = make_field(fc.p, fc.k);
    const BigInt q = f.cardinality();
    const BigInt expected = count_poly1_formula(params.an(), params.bn(), q);
    for (auto point : {FiberPoint::Generic, FiberPoint::ZeroOne, FiberPoint::OneZero}) {
      Stopwatch sw;
      auto inputs = stack_inputs(params, fc);
      inputs["point"] = to_string(point);
      const BigInt observed = fiber_count(point, params, f, enumeration(o));
      out.push_back(make_record("fiber.count", std::move(inputs), decimal(expected), decimal(observed), true,
                                sw.elapsed_ms()));
    }
    Stopwatch sw;
    BigInt strata = 0;
    for (std::uint64_t k = 1; k <= params.an(); ++k) {
      strata += (q - 1) * count_poly1_formula(params.an() - k, params.bn(), q);
    }
    out.push_back(make_record("fiber.stratification", stack_inputs(params, fc),
                              decimal(BigInt(big_pow(q, params.s()) - big_pow(q, params.s() - 1))), decimal(strata), true,
                              sw.elapsed_ms()));
  }
  return out;
}

std::vector<VerificationRecord> criterion_orbits(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  for (const auto& [params, fc] : sweep_instances()) {
    Stopwatch sw;
    const Field f = make_field(fc.p, fc.k);
    const BigInt q = f.cardinality();
    const OrbitReport report = weighted_count_from_orbits(params, f, enumeration(o));
    const BigInt t = count_T_enumerate(params, f, enumeration(o));
    const auto elapsed = sw.elapsed_ms();
    out.push_back(make_record("orbit.weighted_total", stack_inputs(params, fc), decimal(make_rational(t, q - 1)),
                              decimal(report.weighted_total), true, elapsed));
    std::vector<std::string> orders;
    for (const auto& [order, count] : report.stabilizer_histogram) orders.push_back(std::to_string(order));
    const std::uint64_t g = std::gcd(std::gcd<std::uint64_t>(params.a(), params.b()), fc.q() - 1);
    out.push_back(make_record("orbit.stabilizers", stack_inputs(params, fc), std::to_string(g), join(orders), true, 0));
  }
  return out;
}

std::vector<VerificationRecord> criterion_trace(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  for (const auto& params : all_presets()) {
    const auto table = hom_stack_table(params, CohomologyKind::Compact);
    for (const auto& fc : kTraceFields) {
      if (!hypothesis_holds(params, fc.p)) continue;
      Stopwatch sw;
      const BigInt q = big_from_u64(fc.q());
      const BigInt trace = trace_sum(table, q);
      out.push_back(make_record("trace.hom_formula", stack_inputs(params, fc),
                                decimal(weighted_hom_count_formula(params, q)), decimal(trace), true,
                                sw.elapsed_ms()));
      const std::uint64_t space = checked_power(fc.q(), params.s() + 2);
      if (space != 0 && space <= kDeskEnumerationSpace) {
        Stopwatch enum_sw;
        const BigInt t = count_T_enumerate(params, make_field(fc.p, fc.k), enumeration(o));
        out.push_back(make_record("trace.hom_enumerate", stack_inputs(params, fc), decimal(trace),
                                  decimal(make_rational(t, q - 1)), true, enum_sw.elapsed_ms()));
      }
    }
  }
  for (const auto& fc : kTraceFields) {
    const BigInt q = big_from_u64(fc.q());
    for (std::uint64_t d1 = 1; d1 <= 5; ++d1) {
      for (std::uint64_t d2 = 1; d1 + d2 <= 6; ++d2) {
        Stopwatch sw;
        const BigInt trace = trace_sum(poly_space_table(d1, d2, CohomologyKind::Compact), q);
        out.push_back(make_record("trace.poly1", {{"d1", d1}, {"d2", d2}, {"q", fc.q()}},
                                  decimal(count_poly1_formula(d1, d2, q)), decimal(trace), true, sw.elapsed_ms()));
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> criterion_zeta(const SuiteOptions&) {
  std::vector<VerificationRecord> out;
  constexpr std::size_t kOrder = kDefaultZetaOrder;
  for (const auto& params : all_presets()) {
    for (const auto& fc : kTraceFields) {
      if (!hypothesis_holds(params, fc.p)) continue;
      const BigInt q = big_from_u64(fc.q());
      auto inputs = stack_inputs(params, fc);
      inputs["order"] = kOrder;
      Stopwatch sw;
      const ZetaCheck check = verify_zeta(params, q, kOrder);
      out.push_back(make_record("zeta.series", inputs, join_series(check.from_function),
                                join_series(check.from_counts), true, sw.elapsed_ms()));
      if (params.a() == 4 && params.b() == 6) {
        const std::uint64_t e = 10 * params.n();
        const RationalFunction stated({BigRational(1), BigRational(-big_pow(q, e - 1))},
                                      {BigRational(1), BigRational(-big_pow(q, e + 1))});
        out.push_back(make_record("zeta.function", inputs, stated.format(), check.function.format(), true, 0));
      }
      Stopwatch fit_sw;
      const EigenvalueFit fit = fit_two_eigenvalues(hom_stack_counts(params, q, kOrder));
      std::string observed = decimal(fit.alpha) + "," + decimal(fit.beta);
      if (!fit.consistent()) observed += ",inconsistent";
      out.push_back(make_record("zeta.eigenvalues", inputs,
                                decimal(big_pow(q, params.s() - 1)) + "," + decimal(big_pow(q, params.s() + 1)),
                                observed, true, fit_sw.elapsed_ms()));
    }
  }
  return out;
}

CohomologyTable random_table(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dim_dist(0, 12);
  const std::int64_t d = dim_dist(rng);
  const auto kind = rng() % 2 == 0 ? CohomologyKind::Compact : CohomologyKind::Ordinary;
  std::uniform_int_distribution<std::int64_t> degree_dist(0, 2 * d);
  std::uniform_int_distribution<std::int64_t> weight_dist(0, d);
  std::uniform_int_distribution<int> count_dist(0, 4);
  std::set<std::int64_t> degrees;
  const int entries = count_dist(rng);
  for (int i = 0; i < entries; ++i) degrees.insert(degree_dist(rng));
  std::vector<CohomologyEntry> out;
  for (std::int64_t i : degrees) {
    std::vector<std::int64_t> weights(1 + rng() % 3);
    for (auto& w : weights) w = weight_dist(rng);
    std::sort(weights.begin(), weights.end());
    out.push_back({i, std::move(weights)});
  }
  return CohomologyTable(kind, d, std::move(out));
}

std::string classification_text(const CohomologyTable& table) {
  const auto c = classify_weights(table);
  return std::string(c.pure ? "pure" : "mixed") + "," + (c.tate ? "tate" : "non-tate");
}

std::vector<VerificationRecord> criterion_duality(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  constexpr int kTables = 1000;
  {
    Stopwatch sw;
    std::mt19937_64 rng(o.seed);
    int ok = 0;
    for (int i = 0; i < kTables; ++i) {
      const auto t = random_table(rng);
      const auto dual = poincare_dual(t);
      if (poincare_dual(dual) == t && dual.kind() != t.kind() && dual.total_dimension() == t.total_dimension()) ++ok;
    }
    out.push_back(make_record("dual.involution", {{"tables", kTables}, {"seed", o.seed}}, std::to_string(kTables),
                              std::to_string(ok), true, sw.elapsed_ms()));
  }
  for (const auto& params : all_presets()) {
    const ordered_json inputs{{"a", params.a()}, {"b", params.b()}, {"n", params.n()}};
    std::vector<std::string> betti;
    for (auto v : betti_numbers(hom_stack_table(params, CohomologyKind::Ordinary))) betti.push_back(std::to_string(v));
    out.push_back(make_record("betti.hom_ordinary", inputs, "1,0,0,1", join(betti), true, 0));
    for (auto kind : {CohomologyKind::Compact, CohomologyKind::Ordinary}) {
      auto with_kind = inputs;
      with_kind["kind"] = to_string(kind);
      out.push_back(make_record("classify.hom", with_kind, "mixed,tate",
                                classification_text(hom_stack_table(params, kind)), true, 0));
    }
  }
  for (auto kind : {CohomologyKind::Compact, CohomologyKind::Ordinary}) {
    out.push_back(make_record("classify.projective", {{"kind", to_string(kind)}}, "pure,tate",
                              classification_text(projective_stack_table(kind)), true, 0));
  }
  return out;
}

std::vector<VerificationRecord> criterion_out_of_hypothesis(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  for (const auto& params : {StackParams(2, 3, 1), StackParams(4, 6, 1)}) {
    const FieldChoice fc{2, 1};
    Stopwatch sw;
    const Field f = make_field(fc.p, fc.k);
    const OrbitReport report = weighted_count_from_orbits(params, f, enumeration(o));
    out.push_back(make_record("hom.weighted_orbits", stack_inputs(params, fc),
                              decimal(weighted_hom_count_formula(params, f.cardinality())),
                              decimal(report.weighted_total), hypothesis_holds(params, fc.p), sw.elapsed_ms()));
  }
  return out;
}

std::vector<VerificationRecord> resultant_cross_check(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  constexpr int kPairs = 1000;
  constexpr std::size_t kMaxDegree = 6;
  std::mt19937_64 rng(o.seed);
  for (const auto& fc : std::vector<FieldChoice>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    Stopwatch sw;
    const Field f = make_field(fc.p, fc.k);
    std::uniform_int_distribution<std::size_t> deg(0, kMaxDegree);
    std::uniform_int_distribution<std::uint32_t> elem(0, f.size() - 1);
    std::uniform_int_distribution<std::uint32_t> unit(1, f.size() - 1);
    auto draw = [&] {
      std::vector<FieldElement> c(deg(rng) + 1);
      for (auto& x : c) x = FieldElement{elem(rng)};
      c.back() = FieldElement{unit(rng)};
      return Polynomial(f, std::move(c));
    };
    int agree = 0;
    for (int i = 0; i < kPairs; ++i) {
      const Polynomial u = draw();
      const Polynomial v = draw();
      const FieldElement rs = resultant_sylvester(u, v);
      const FieldElement re = resultant_euclid(u, v);
      const bool coprime_by_gcd = gcd(u, v).degree() == Degree::of(0);
      if (rs == re && (!rs.is_zero()) == coprime_by_gcd && is_coprime(u, v) == coprime_by_gcd) ++agree;
    }
    out.push_back(make_record("resultant.cross_check", {{"q", fc.q()}, {"pairs", kPairs}, {"seed", o.seed}},
                              std::to_string(kPairs), std::to_string(agree), true, sw.elapsed_ms()));
  }
  return out;
}

std::vector<VerificationRecord> criterion_headline(const SuiteOptions& o) {
  std::vector<VerificationRecord> out;
  const StackParams params(4, 6, 1);
  const FieldChoice fc{5, 1};
  const Field f = make_field(fc.p, fc.k);
  const BigInt q = f.cardinality();
  {
    Stopwatch sw;
    const BigInt t = count_T_enumerate(params, f, enumeration(o));
    out.push_back(make_record("T.enumerate", stack_inputs(params, fc), decimal(count_T_strata(params, q)), decimal(t),
                              true, sw.elapsed_ms()));
  }
  {
    Stopwatch sw;
    const OrbitReport report = weighted_count_from_orbits(params, f, enumeration(o));
    out.push_back(make_record("hom.weighted_orbits", stack_inputs(params, fc),
                              decimal(weighted_hom_count_formula(params, q)), decimal(report.weighted_total), true,
                              sw.elapsed_ms()));
  }
  return out;
}

}  // namespace

std::uint64_t FieldChoice::q() const { return checked_power(p, k); }

const std::vector<StackParams>& sweep_presets() {
  static const std::vector<StackParams> presets = {StackParams(1, 1, 1), StackParams(1, 1, 2), StackParams(1, 2, 1),
                                                   StackParams(2, 3, 1)};
  return presets;
}

const std::vector<StackParams>& all_presets() {
  static const std::vector<StackParams> presets = {StackParams(1, 1, 1), StackParams(1, 1, 2),
                                                   StackParams(1, 2, 1), StackParams(2, 3, 1),
                                                   StackParams(4, 6, 1), StackParams(4, 6, 2)};
  return presets;
}

std::vector<CheckGroup> desk_suite() {
  return {
      {1, "coprime pair counts match the closed form", criterion_poly1},
      {2, "cover count over q-1 matches the weighted formula", criterion_cover},
      {4, "strata sum equals enumeration", criterion_strata},
      {5, "evaluation fibers are constant", criterion_fibers},
      {6, "orbit weights and stabilizers", criterion_orbits},
      {7, "trace sums of the cohomology tables", criterion_trace},
      {8, "zeta series against the rational function", criterion_zeta},
      {9, "duality, Betti numbers and weight classes", criterion_duality},
      {10, "characteristic dividing a or b is reported", criterion_out_of_hypothesis},
      {0, "Sylvester and Euclidean resultants agree", resultant_cross_check},
  };
}

std::vector<CheckGroup> stretch_suite() {
  return {{3, "(4,6,1) over F_5: 5^12 coefficient tuples", criterion_headline}};
}

}  // namespace stacky::cli
