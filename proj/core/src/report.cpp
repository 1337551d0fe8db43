#include "capelli/report.hpp"

#include <chrono>

namespace capelli {

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["schema"] = "capelli-report/1";
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["passed"] = r.passed;
  j["lhs_terms"] = r.lhs_terms;
  j["rhs_terms"] = r.rhs_terms;
  if (r.first_discrepancy)
    j["first_discrepancy"] = {{"lhs", r.first_discrepancy->first},
                              {"rhs", r.first_discrepancy->second}};
  else
    j["first_discrepancy"] = nullptr;
  j["wall_time_ms"] = r.wall_time_ms;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

WallClock::WallClock()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

long WallClock::elapsed_ms() const {
  const long long now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::steady_clock::now().time_since_epoch())
                            .count();
  return static_cast<long>((now - start_ns_) / 1000000);
}

}  // namespace capelli
