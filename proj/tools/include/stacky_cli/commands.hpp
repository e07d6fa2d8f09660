#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stacky_cli/config.hpp"
#include "stacky_cli/record.hpp"

namespace stacky::cli {

std::vector<VerificationRecord> cmd_count(const RunConfig& config);
int cmd_verify(const RunConfig& config, std::ostream& out);
VerificationRecord cmd_zeta(const RunConfig& config, std::ostream& out);
void cmd_table(const RunConfig& config, std::ostream& out);
void cmd_bench(const RunConfig& config, std::ostream& out);

// Parses arguments (without the program name), dispatches and maps errors to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* threads_env = nullptr);

}  // namespace stacky::cli
