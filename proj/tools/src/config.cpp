#include "stacky_cli/config.hpp"

#include <charconv>
#include <string_view>
#include <thread>

namespace stacky::cli {

Field RunConfig::field() const { return make_field(p, k); }

unsigned resolve_threads(std::optional<unsigned> flag, const char* env) {
  if (flag) {
    if (*flag == 0) throw UsageError("--threads must be at least 1");
    return *flag;
  }
  if (env != nullptr && *env != '\0') {
    const std::string_view text(env);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
      throw UsageError("STACKY_THREADS must be a positive integer, got '" + std::string(text) + "'");
    }
    return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void validate(const RunConfig& config) {
  if (config.a == 0 || config.b == 0 || config.n == 0) throw UsageError("--a, --b and --n must be at least 1");
  if (!is_prime(config.p)) throw UsageError("--p must be prime, got " + std::to_string(config.p));
  if (config.k == 0) throw UsageError("--k must be at least 1");
  if (checked_power(config.p, config.k) == 0 || checked_power(config.p, config.k) > kDefaultFieldBound) {
    throw UsageError("field size p^k exceeds " + std::to_string(kDefaultFieldBound));
  }
  if (config.order == 0 || config.order > kMaxZetaOrder) {
    throw UsageError("--order must lie in [1, " + std::to_string(kMaxZetaOrder) + "]");
  }
  if (config.threads == 0) throw UsageError("thread count must be at least 1");
  if (config.budget == 0) throw UsageError("--budget must be at least 1");
}

std::string to_string(Subcommand subcommand) {
  switch (subcommand) {
    case Subcommand::Count: return "count";
    case Subcommand::Verify: return "verify";
    case Subcommand::Zeta: return "zeta";
    case Subcommand::Table: return "table";
    case Subcommand::Bench: return "bench";
  }
  return "?";
}

}  // namespace stacky::cli
