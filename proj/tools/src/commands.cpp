#include "stacky_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "stacky/cohomology.hpp"
#include "stacky/error.hpp"
#include "stacky_cli/suites.hpp"

namespace stacky::cli {

namespace {

using nlohmann::ordered_json;

ordered_json config_inputs(const RunConfig& c) {
  return ordered_json{{"a", c.a}, {"b", c.b}, {"n", c.n}, {"p", c.p}, {"k", c.k}, {"q", checked_power(c.p, c.k)}};
}

std::string join_series(const PowerSeries& series) {
  std::string out;
  for (const auto& c : series.coeffs()) {
    if (!out.empty()) out += ',';
    out += decimal(c);
  }
  return out;
}

void emit_json(std::ostream& out, const ordered_json& json) { out << json.dump(2) << '\n'; }

bool any_fail(const std::vector<VerificationRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.status == Status::Fail; });
}

std::string weights_text(const std::vector<std::int64_t>& weights) {
  std::string out = "[";
  for (std::size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + std::to_string(weights[i]);
  return out + "]";
}

std::string classification_text(const WeightClassification& c) {
  return std::string(c.pure ? "pure" : "mixed") + (c.tate ? " Tate" : " non-Tate");
}

ordered_json classification_json(const WeightClassification& c) {
  return ordered_json{{"pure", c.pure}, {"tate", c.tate}, {"mixed_degrees", c.mixed_degrees}};
}

}  // namespace

std::vector<VerificationRecord> cmd_count(const RunConfig& config) {
  const StackParams params = config.params();
  const Field field = config.field();
  const BigInt q = field.cardinality();
  const EnumerationOptions opts = config.enumeration();
  const bool hypothesis = hypothesis_holds(params, config.p);
  const ordered_json inputs = config_inputs(config);
  std::vector<VerificationRecord> out;

  {
    Stopwatch sw;
    const BigInt observed = count_poly1_enumerate(params.an(), params.bn(), field, opts);
    auto in = inputs;
    in["d1"] = params.an();
    in["d2"] = params.bn();
    out.push_back(make_record("poly1.enumerate", in, decimal(count_poly1_formula(params.an(), params.bn(), q)),
                              decimal(observed), hypothesis, sw.elapsed_ms()));
  }
  Stopwatch t_sw;
  const BigInt t = count_T_enumerate(params, field, opts);
  const auto t_ms = t_sw.elapsed_ms();
  out.push_back(make_record("T.strata", inputs, decimal(count_T_strata(params, q)), decimal(t), hypothesis, t_ms));
  out.push_back(make_record("T.quotient", inputs, decimal(weighted_hom_count_formula(params, q)),
                            decimal(make_rational(t, q - 1)), hypothesis, 0));
  {
    Stopwatch sw;
    const OrbitReport report = weighted_count_from_orbits(params, field, opts);
    out.push_back(make_record("hom.weighted_orbits", inputs, decimal(weighted_hom_count_formula(params, q)),
                              decimal(report.weighted_total), hypothesis, sw.elapsed_ms()));
  }
  const BigInt fiber_expected = count_poly1_formula(params.an(), params.bn(), q);
  for (auto point : {FiberPoint::Generic, FiberPoint::ZeroOne, FiberPoint::OneZero}) {
    Stopwatch sw;
    auto in = inputs;
    in["point"] = to_string(point);
    const BigInt observed = fiber_count(point, params, field, opts);
    out.push_back(make_record("fiber.count", in, decimal(fiber_expected), decimal(observed), hypothesis,
                              sw.elapsed_ms()));
  }
  return out;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const SuiteOptions options{config.threads, config.budget, config.seed};
  auto groups = desk_suite();
  if (config.suite == Suite::Stretch) {
    for (auto& g : stretch_suite()) groups.push_back(std::move(g));
  }
  std::vector<VerificationRecord> all;
  std::vector<std::vector<std::string>> summary;
  for (const auto& group : groups) {
    Stopwatch sw;
    const auto records = group.run(options);
    std::map<Status, int> tally;
    for (const auto& r : records) ++tally[r.status];
    summary.push_back({group.criterion > 0 ? std::to_string(group.criterion) : "-", group.title,
                       std::to_string(records.size()), std::to_string(tally[Status::Pass]),
                       std::to_string(tally[Status::Fail]), std::to_string(tally[Status::Report]),
                       std::to_string(sw.elapsed_ms())});
    all.insert(all.end(), records.begin(), records.end());
  }
  const bool failed = any_fail(all);
  if (config.format == OutputFormat::Json) {
    emit_json(out, to_json(all));
  } else {
    print_records(out, all);
    out << '\n';
    print_table(out, {"criterion", "title", "checks", "pass", "fail", "report", "ms"}, summary);
    out << '\n' << "verify " << (config.suite == Suite::Desk ? "desk" : "stretch") << ": "
        << (failed ? "FAIL" : "PASS") << '\n';
  }
  return failed ? kExitFailure : kExitOk;
}

VerificationRecord cmd_zeta(const RunConfig& config, std::ostream& out) {
  const StackParams params = config.params();
  const BigInt q = config.field().cardinality();
  auto inputs = config_inputs(config);
  inputs["order"] = config.order;
  const bool hypothesis = hypothesis_holds(params, config.p);

  Stopwatch sw;
  const RationalFunction function = zeta_rational_from_table(hom_stack_table(params, CohomologyKind::Compact), q);
  const PowerSeries from_function = expand_rational(function, config.order);
  const PowerSeries from_counts =
      zeta_series_from_counts(hom_stack_counts(params, q, config.order), config.order);
  const EigenvalueFit fit = fit_two_eigenvalues(hom_stack_counts(params, q, std::max<std::size_t>(config.order, 2)));
  VerificationRecord record = make_record("zeta.series", inputs, join_series(from_function), join_series(from_counts),
                                          hypothesis, sw.elapsed_ms());
  if (!fit.consistent() && record.status == Status::Pass) record.status = Status::Fail;

  if (config.format == OutputFormat::Json) {
    ordered_json j;
    j["record"] = to_json(record);
    j["function"] = to_json(function);
    j["series_from_counts"] = to_json(from_counts);
    j["series_from_function"] = to_json(from_function);
    j["eigenvalues"] = {{"alpha", decimal(fit.alpha)}, {"beta", decimal(fit.beta)}, {"consistent", fit.consistent()}};
    emit_json(out, j);
  } else {
    out << "Z(t) = " << function.format() << '\n';
    out << "series from counts:   " << join_series(from_counts) << '\n';
    out << "series from function: " << join_series(from_function) << '\n';
    out << "eigenvalues: " << decimal(fit.alpha) << ", " << decimal(fit.beta)
        << (fit.consistent() ? "" : " (inconsistent)") << '\n';
    out << "status: " << to_string(record.status) << '\n';
  }
  return record;
}

void cmd_table(const RunConfig& config, std::ostream& out) {
  const StackParams params = config.params();
  const auto compact = hom_stack_table(params, CohomologyKind::Compact);
  const auto ordinary = hom_stack_table(params, CohomologyKind::Ordinary);
  const auto betti = betti_numbers(ordinary);
  if (config.format == OutputFormat::Json) {
    ordered_json j;
    j["compact"] = to_json(compact);
    j["ordinary"] = to_json(ordinary);
    j["betti"] = betti;
    j["classification"] = {{"compact", classification_json(classify_weights(compact))},
                           {"ordinary", classification_json(classify_weights(ordinary))}};
    emit_json(out, j);
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto* table : {&compact, &ordinary}) {
    for (const auto& e : table->entries()) {
      rows.push_back({to_string(table->kind()), std::to_string(e.degree), weights_text(e.weights)});
    }
  }
  out << "Hom_" << params.n() << "(P^1, P(" << params.a() << "," << params.b() << ")), dim " << compact.dim() << '\n';
  print_table(out, {"kind", "i", "weights"}, rows);
  out << "betti:";
  for (auto v : betti) out << ' ' << v;
  out << '\n';
  out << "compact: " << classification_text(classify_weights(compact)) << '\n';
  out << "ordinary: " << classification_text(classify_weights(ordinary)) << '\n';
}

void cmd_bench(const RunConfig& config, std::ostream& out) {
  const StackParams params = config.params();
  const Field field = config.field();
  const EnumerationOptions opts = config.enumeration();
  struct Row {
    std::string kernel;
    std::uint64_t tuples;
    std::int64_t ms;
    std::string result;
  };
  std::vector<Row> rows;
  {
    Stopwatch sw;
    const BigInt r = count_poly1_enumerate(params.an(), params.bn(), field, opts);
    rows.push_back({"poly1.enumerate", checked_power(field.size(), params.s()), sw.elapsed_ms(), decimal(r)});
  }
  {
    Stopwatch sw;
    const BigInt r = count_T_enumerate(params, field, opts);
    rows.push_back({"T.enumerate", checked_power(field.size(), params.s() + 2), sw.elapsed_ms(), decimal(r)});
  }
  {
    Stopwatch sw;
    const OrbitReport r = weighted_count_from_orbits(params, field, opts);
    rows.push_back({"orbits", checked_power(field.size(), params.s() + 2), sw.elapsed_ms(), decimal(r.weighted_total)});
  }
  auto ns_per_tuple = [](const Row& r) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(1) << (r.tuples ? 1e6 * static_cast<double>(r.ms) / r.tuples : 0.0);
    return s.str();
  };
  if (config.format == OutputFormat::Json) {
    auto array = ordered_json::array();
    for (const auto& r : rows) {
      array.push_back({{"kernel", r.kernel}, {"inputs", config_inputs(config)}, {"threads", config.threads},
                       {"tuples", r.tuples}, {"elapsed_ms", r.ms}, {"result", r.result}});
    }
    emit_json(out, array);
    return;
  }
  std::vector<std::vector<std::string>> text;
  for (const auto& r : rows) {
    text.push_back({r.kernel, std::to_string(r.tuples), std::to_string(r.ms), ns_per_tuple(r), r.result});
  }
  out << "threads: " << config.threads << '\n';
  print_table(out, {"kernel", "tuples", "ms", "ns/tuple", "result"}, text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* threads_env) {
  CLI::App app{"Exact point counts, cohomology tables and zeta functions of Hom stacks", "stacky"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<unsigned> threads_flag;
  unsigned threads_value = 0;

  const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json}, {"table", OutputFormat::Table}};
  const std::map<std::string, Suite> suites{{"desk", Suite::Desk}, {"stretch", Suite::Stretch}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--a", config.a, "weight a")->capture_default_str();
    sub->add_option("--b", config.b, "weight b")->capture_default_str();
    sub->add_option("--n", config.n, "degree n")->capture_default_str();
    sub->add_option("--p", config.p, "field characteristic")->capture_default_str();
    sub->add_option("--k", config.k, "field degree, q = p^k")->capture_default_str();
    sub->add_option("--order", config.order, "zeta truncation order N")->capture_default_str();
    sub->add_option("--threads", threads_value, "worker threads (overrides STACKY_THREADS)");
    sub->add_option("--budget", config.budget, "largest enumeration allowed")->capture_default_str();
    sub->add_option("--format", config.format, "json or table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--suite", config.suite, "desk or stretch")
        ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case));
    sub->add_option("--seed", config.seed, "seed for randomized checks")->capture_default_str();
  };
  const std::vector<std::pair<Subcommand, std::string>> names{
      {Subcommand::Count, "enumerate and compare counts for one instance"},
      {Subcommand::Verify, "run a verification suite"},
      {Subcommand::Zeta, "zeta function from counts and from the cohomology table"},
      {Subcommand::Table, "cohomology tables, Betti numbers and weight classes"},
      {Subcommand::Bench, "time the enumeration kernels"}};
  std::vector<std::pair<Subcommand, CLI::App*>> subs;
  for (const auto& [sub, help] : names) {
    CLI::App* s = app.add_subcommand(to_string(sub), help);
    add_common(s);
    subs.emplace_back(sub, s);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    for (const auto& [sub, s] : subs) {
      if (s->parsed()) {
        config.subcommand = sub;
        if (s->count("--threads") > 0) threads_flag = threads_value;
      }
    }
    config.threads = resolve_threads(threads_flag, threads_env);
    validate(config);

    switch (config.subcommand) {
      case Subcommand::Count: {
        const auto records = cmd_count(config);
        if (config.format == OutputFormat::Json) {
          emit_json(out, to_json(records));
        } else {
          print_records(out, records);
        }
        return any_fail(records) ? kExitFailure : kExitOk;
      }
      case Subcommand::Verify:
        return cmd_verify(config, out);
      case Subcommand::Zeta:
        return cmd_zeta(config, out).status == Status::Fail ? kExitFailure : kExitOk;
      case Subcommand::Table:
        cmd_table(config, out);
        return kExitOk;
      case Subcommand::Bench:
        cmd_bench(config, out);
        return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ZetaMismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::EnumerationTooLarge: return kExitBudget;
      case ErrorKind::CompositeCharacteristic:
      case ErrorKind::InvalidDegree:
      case ErrorKind::InvalidArgument:
      case ErrorKind::OutOfTableRange: return kExitUsage;
      default: return kExitFailure;
    }
  }
  return kExitFailure;
}

}  // namespace stacky::cli
