#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace stacky::cli {

enum class Status { Pass, Fail, Report };

std::string to_string(Status status);
Status status_from_string(const std::string& text);

struct VerificationRecord {
  std::string check;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::string expected;
  std::string observed;
  Status status = Status::Pass;
  std::int64_t elapsed_ms = 0;

  // Equality ignores elapsed_ms.
  bool same_result(const VerificationRecord& other) const;
};

// REPORT when the hypothesis fails, otherwise PASS iff the strings agree.
VerificationRecord make_record(std::string check, nlohmann::ordered_json inputs, std::string expected,
                               std::string observed, bool hypothesis, std::int64_t elapsed_ms);

nlohmann::ordered_json to_json(const VerificationRecord& record);
VerificationRecord record_from_json(const nlohmann::ordered_json& json);
nlohmann::ordered_json to_json(const std::vector<VerificationRecord>& records);

// Cells longer than 40 characters are elided in the middle.
void print_records(std::ostream& out, const std::vector<VerificationRecord>& records);

// Aligned text table; every row must have header.size() cells.
void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace stacky::cli
