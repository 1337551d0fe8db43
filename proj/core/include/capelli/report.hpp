#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// Outcome of one executable check. A failed check is a report, not an error;
/// passed is true iff first_discrepancy is absent.
struct CheckReport {
  std::string check_id;
  nlohmann::json params = nlohmann::json::object();
  bool passed = false;
  long lhs_terms = 0;
  long rhs_terms = 0;
  std::optional<std::pair<std::string, std::string>> first_discrepancy;
  long wall_time_ms = 0;
  /// Suite-specific payload (eigenvalue tables, sub-check breakdown, ...).
  nlohmann::json details = nlohmann::json::object();
};

nlohmann::json to_json(const CheckReport& r);

/// Serialize reports as a JSON array; every record carries
/// "schema": "capelli-report/1".
std::string reports_to_json(const std::vector<CheckReport>& reports);

/// Stopwatch helper: milliseconds since construction.
class WallClock {
 public:
  WallClock();
  long elapsed_ms() const;

 private:
  long long start_ns_;
};

}  // namespace capelli
