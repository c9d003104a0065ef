#include "beurling/report.hpp"

#include <cmath>
#include <iomanip>

namespace beurling {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPassed: return "passed";
    case CheckStatus::kFailed: return "failed";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

namespace {

nlohmann::json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

nlohmann::json map_json(const std::map<std::string, double>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : m) j[k] = number_or_string(v);
  return j;
}

}  // namespace

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"check_name", r.check_name},
                     {"inputs", r.inputs},
                     {"measured", map_json(r.measured)},
                     {"bound", map_json(r.bound)},
                     {"margin", number_or_string(r.margin)},
                     {"error_budget", number_or_string(r.error_budget)},
                     {"status", to_string(r.status)},
                     {"passed", r.passed()}};
  if (!r.note.empty()) j["note"] = r.note;
}

void write_summary_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "check_name,margin,error_budget,passed\n";
  os << std::setprecision(17);
  for (const auto& r : reports) {
    os << r.check_name << ',' << r.margin << ',' << r.error_budget << ','
       << (r.skipped() ? "skipped" : (r.passed() ? "true" : "false")) << '\n';
  }
}

}  // namespace beurling
