#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stacky/counting.hpp"
#include "stacky_cli/record.hpp"

namespace stacky::cli {

struct SuiteOptions {
  unsigned threads = 1;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t seed = 0;
};

struct CheckGroup {
  int criterion = 0;  // 0 for groups outside the numbered list
  std::string title;
  std::function<std::vector<VerificationRecord>(const SuiteOptions&)> run;
};

struct FieldChoice {
  std::uint64_t p;
  std::uint32_t k;
  std::uint64_t q() const;
};

const std::vector<StackParams>& sweep_presets();
const std::vector<StackParams>& all_presets();

std::vector<CheckGroup> desk_suite();
std::vector<CheckGroup> stretch_suite();

// Literal values for the 5^12 instance.
inline constexpr std::uint64_t kStretchTCount = 187500000;
inline constexpr std::uint64_t kStretchWeightedCount = 46875000;

}  // namespace stacky::cli
