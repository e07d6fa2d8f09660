#include "stacky/zeta.hpp"

#include "stacky/error.hpp"

namespace stacky {

namespace {

void trim(std::vector<BigRational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::vector<BigRational> multiply(const std::vector<BigRational>& a,
                                  const std::vector<BigRational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigRational> out(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::string format_t_polynomial(const std::vector<BigRational>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const BigRational& c = coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRational magnitude = negative ? BigRational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || magnitude != 1) out += decimal(magnitude);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

nlohmann::ordered_json coeff_pairs(const std::vector<BigRational>& coeffs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : coeffs) {
    out.push_back({decimal(BigInt(c.get_num())), decimal(BigInt(c.get_den()))});
  }
  return out;
}

std::vector<BigRational> coeffs_from_pairs(const nlohmann::ordered_json& json) {
  std::vector<BigRational> out;
  for (const auto& pair : json) {
    const BigInt num(pair.at(0).get<std::string>(), 10);
    const BigInt den(pair.at(1).get<std::string>(), 10);
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in coefficient");
    out.push_back(make_rational(num, den));
  }
  return out;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least c_0");
  for (auto& c : coeffs_) c.canonicalize();
}

RationalFunction::RationalFunction(std::vector<BigRational> numerator,
                                   std::vector<BigRational> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  trim(numerator_);
  trim(denominator_);
  if (denominator_.empty() || denominator_.front() == 0) {
    throw Error(ErrorKind::NotExpandable, "denominator has zero constant term");
  }
  const BigRational lead = denominator_.front();
  for (auto& c : numerator_) c /= lead;
  for (auto& c : denominator_) c /= lead;
}

std::string RationalFunction::format() const {
  return "(" + format_t_polynomial(numerator_) + ")/(" + format_t_polynomial(denominator_) + ")";
}

CountSequence hom_stack_counts(const StackParams& params, const BigInt& q, std::size_t m) {
  CountSequence counts{q, {}};
  counts.values.reserve(m);
  for (std::size_t nu = 1; nu <= m; ++nu) {
    counts.values.emplace_back(weighted_hom_count_formula(params, big_pow(q, nu)));
  }
  return counts;
}

PowerSeries zeta_series_from_counts(const CountSequence& counts, std::size_t order) {
  if (counts.values.size() < order) {
    throw Error(ErrorKind::InsufficientCounts,
                std::to_string(counts.values.size()) + " counts for order " + std::to_string(order));
  }
  // Z' = (sum N_k t^{k-1}) Z, so n c_n = sum_{k=1}^{n} N_k c_{n-k}.
  std::vector<BigRational> c(order + 1, BigRational(0));
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += counts.values[k - 1] * c[n - k];
    c[n] = acc / BigRational(static_cast<unsigned long>(n));
  }
  return PowerSeries(std::move(c));
}

PowerSeries formal_log(const PowerSeries& series) {
  const auto& c = series.coeffs();
  if (c.front() != 1) throw Error(ErrorKind::InvalidArgument, "log needs constant term 1");
  // n N_n / n = n c_n - sum_{k=1}^{n-1} N_k c_{n-k}, with N_k = k L_k.
  std::vector<BigRational> counts(c.size(), BigRational(0));
  std::vector<BigRational> log(c.size(), BigRational(0));
  for (std::size_t n = 1; n < c.size(); ++n) {
    BigRational acc = BigRational(static_cast<unsigned long>(n)) * c[n];
    for (std::size_t k = 1; k < n; ++k) acc -= counts[k] * c[n - k];
    counts[n] = acc;
    log[n] = acc / BigRational(static_cast<unsigned long>(n));
  }
  return PowerSeries(std::move(log));
}

PowerSeries expand_rational(const RationalFunction& function, std::size_t order) {
  const auto& num = function.numerator();
  const auto& den = function.denominator();
  if (den.empty() || den.front() == 0) {
    throw Error(ErrorKind::NotExpandable, "denominator has zero constant term");
  }
  std::vector<BigRational> s(order + 1, BigRational(0));
  for (std::size_t n = 0; n <= order; ++n) {
    BigRational acc = n < num.size() ? num[n] : BigRational(0);
    for (std::size_t k = 1; k <= n && k < den.size(); ++k) acc -= den[k] * s[n - k];
    s[n] = acc / den.front();
  }
  return PowerSeries(std::move(s));
}

RationalFunction zeta_rational_from_table(const CohomologyTable& table, const BigInt& q) {
  if (table.kind() != CohomologyKind::Compact) {
    throw Error(ErrorKind::WrongTableKind, "zeta is read from the compact table");
  }
  std::vector<BigRational> num{BigRational(1)};
  std::vector<BigRational> den{BigRational(1)};
  for (const auto& entry : table.entries()) {
    for (const auto w : entry.weights) {
      const std::vector<BigRational> factor{BigRational(1),
                                            BigRational(-big_pow(q, static_cast<unsigned long>(w)))};
      if (entry.degree % 2 != 0) {
        num = multiply(num, factor);
      } else {
        den = multiply(den, factor);
      }
    }
  }
  return RationalFunction(std::move(num), std::move(den));
}

EigenvalueFit fit_two_eigenvalues(const CountSequence& counts) {
  const auto& values = counts.values;
  if (values.size() < 2) throw Error(ErrorKind::InsufficientCounts, "need N_1 and N_2");
  for (const auto& v : values) {
    if (v.get_den() != 1) throw Error(ErrorKind::ModelMismatch, "non-integral count");
  }
  const BigInt n1 = values[0].get_num();
  const BigInt n2 = values[1].get_num();
  if (n1 == 0) throw Error(ErrorKind::ModelMismatch, "N_1 = 0");
  // beta - alpha = N_1, beta + alpha = N_2 / N_1.
  if (n2 % n1 != 0) throw Error(ErrorKind::ModelMismatch, "N_2 / N_1 is not an integer");
  const BigInt sum = n2 / n1;
  const BigInt twice_beta = sum + n1;
  if (twice_beta % 2 != 0) throw Error(ErrorKind::ModelMismatch, "eigenvalues are not integers");

  EigenvalueFit fit;
  fit.beta = twice_beta / 2;
  fit.alpha = sum - fit.beta;
  for (std::size_t nu = 3; nu <= values.size(); ++nu) {
    const BigInt predicted = big_pow(fit.beta, nu) - big_pow(fit.alpha, nu);
    if (predicted != values[nu - 1].get_num()) fit.mismatched_orders.push_back(nu);
  }
  return fit;
}

ZetaCheck verify_zeta(const StackParams& params, const BigInt& q, std::size_t order) {
  if (order < 1 || order > kMaxZetaOrder) {
    throw Error(ErrorKind::InvalidArgument,
                "zeta order must lie in [1, " + std::to_string(kMaxZetaOrder) + "]");
  }
  ZetaCheck check{
      zeta_rational_from_table(hom_stack_table(params, CohomologyKind::Compact), q),
      zeta_series_from_counts(hom_stack_counts(params, q, order), order),
      PowerSeries({BigRational(1)})};
  check.from_function = expand_rational(check.function, order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (check.from_counts.coeffs()[i] != check.from_function.coeffs()[i]) {
      throw ZetaMismatchError(i, "zeta coefficients differ at t^" + std::to_string(i));
    }
  }
  return check;
}

nlohmann::ordered_json to_json(const PowerSeries& series) {
  nlohmann::ordered_json out;
  out["order"] = series.order();
  out["coeffs"] = coeff_pairs(series.coeffs());
  return out;
}

nlohmann::ordered_json to_json(const RationalFunction& function) {
  nlohmann::ordered_json out;
  out["numerator"] = coeff_pairs(function.numerator());
  out["denominator"] = coeff_pairs(function.denominator());
  return out;
}

PowerSeries series_from_json(const nlohmann::ordered_json& json) {
  try {
    return PowerSeries(coeffs_from_pairs(json.at("coeffs")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed series JSON: ") + e.what());
  }
}

RationalFunction rational_from_json(const nlohmann::ordered_json& json) {
  try {
    return RationalFunction(coeffs_from_pairs(json.at("numerator")),
                            coeffs_from_pairs(json.at("denominator")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed rational JSON: ") + e.what());
  }
}

}  // namespace stacky
