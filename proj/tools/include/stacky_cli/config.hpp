#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "stacky/counting.hpp"
#include "stacky/zeta.hpp"

namespace stacky::cli {

enum class Subcommand { Count, Verify, Zeta, Table, Bench };
enum class OutputFormat { Json, Table };
enum class Suite { Desk, Stretch };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::Count;
  std::uint32_t a = 1;
  std::uint32_t b = 1;
  std::uint32_t n = 1;
  std::uint64_t p = 2;
  std::uint32_t k = 1;
  std::size_t order = kDefaultZetaOrder;
  unsigned threads = 1;
  OutputFormat format = OutputFormat::Table;
  std::uint64_t budget = kDefaultEnumerationBudget;
  Suite suite = Suite::Desk;
  std::uint64_t seed = 0;

  StackParams params() const { return StackParams(a, b, n); }
  // Recomputed from (p, k) on every call.
  Field field() const;
  EnumerationOptions enumeration() const { return {budget, threads}; }
};

// Flag value wins, then the environment value, then hardware concurrency.
unsigned resolve_threads(std::optional<unsigned> flag, const char* env);

// Throws UsageError on any invalid combination.
void validate(const RunConfig& config);

std::string to_string(Subcommand subcommand);

}  // namespace stacky::cli
