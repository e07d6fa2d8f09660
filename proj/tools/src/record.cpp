#include "stacky_cli/record.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace stacky::cli {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Report: return "REPORT";
  }
  return "?";
}

Status status_from_string(const std::string& text) {
  if (text == "PASS") return Status::Pass;
  if (text == "FAIL") return Status::Fail;
  if (text == "REPORT") return Status::Report;
  throw std::invalid_argument("unknown status '" + text + "'");
}

bool VerificationRecord::same_result(const VerificationRecord& other) const {
  return check == other.check && inputs == other.inputs && expected == other.expected &&
         observed == other.observed && status == other.status;
}

VerificationRecord make_record(std::string check, nlohmann::ordered_json inputs, std::string expected,
                               std::string observed, bool hypothesis, std::int64_t elapsed_ms) {
  VerificationRecord r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.status = !hypothesis ? Status::Report : (expected == observed ? Status::Pass : Status::Fail);
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  r.elapsed_ms = elapsed_ms;
  return r;
}

nlohmann::ordered_json to_json(const VerificationRecord& record) {
  nlohmann::ordered_json j;
  j["check"] = record.check;
  j["inputs"] = record.inputs;
  j["expected"] = record.expected;
  j["observed"] = record.observed;
  j["status"] = to_string(record.status);
  j["elapsed_ms"] = record.elapsed_ms;
  return j;
}

VerificationRecord record_from_json(const nlohmann::ordered_json& json) {
  VerificationRecord r;
  r.check = json.at("check").get<std::string>();
  r.inputs = json.at("inputs");
  if (!r.inputs.is_object()) throw std::invalid_argument("record inputs must be an object");
  r.expected = json.at("expected").get<std::string>();
  r.observed = json.at("observed").get<std::string>();
  r.status = status_from_string(json.at("status").get<std::string>());
  r.elapsed_ms = json.at("elapsed_ms").get<std::int64_t>();
  return r;
}

nlohmann::ordered_json to_json(const std::vector<VerificationRecord>& records) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& r : records) array.push_back(to_json(r));
  return array;
}

namespace {

std::string inputs_text(const nlohmann::ordered_json& inputs) {
  std::string out;
  for (const auto& [key, value] : inputs.items()) {
    if (!out.empty()) out += ' ';
    out += key + '=' + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

constexpr std::size_t kCellWidth = 40;

std::string elide(const std::string& cell) {
  if (cell.size() <= kCellWidth) return cell;
  const std::size_t keep = (kCellWidth - 3) / 2;
  return cell.substr(0, keep) + "..." + cell.substr(cell.size() - keep);
}

}  // namespace

void print_records(std::ostream& out, const std::vector<VerificationRecord>& records) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    rows.push_back({r.check, inputs_text(r.inputs), elide(r.expected), elide(r.observed), to_string(r.status),
                    std::to_string(r.elapsed_ms)});
  }
  print_table(out, {"check", "inputs", "expected", "observed", "status", "ms"}, rows);
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = c < cells.size() ? cells[c] : std::string();
      if (c + 1 == width.size()) {
        out << cell;
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << cell << "  ";
      }
    }
    out << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (std::size_t w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

}  // namespace stacky::cli
