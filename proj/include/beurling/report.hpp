#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace beurling {

enum class CheckStatus { kPassed, kFailed, kSkipped };

std::string to_string(CheckStatus s);

/// Outcome of one check.  `margin` is oriented so that larger is better;
/// a check passes iff margin + error_budget >= 0.
struct VerificationReport {
  std::string check_name;
  nlohmann::json inputs = nlohmann::json::object();
  std::map<std::string, double> measured;
  std::map<std::string, double> bound;
  double margin = 0.0;
  double error_budget = 0.0;
  CheckStatus status = CheckStatus::kFailed;
  std::string note;

  bool passed() const { return status == CheckStatus::kPassed; }
  bool skipped() const { return status == CheckStatus::kSkipped; }

  /// Sets margin/budget and derives the pass flag from them.
  void finalize(double margin_value, double budget) {
    margin = margin_value;
    error_budget = budget;
    status = margin + error_budget >= 0.0 ? CheckStatus::kPassed : CheckStatus::kFailed;
  }

  void skip(std::string reason) {
    status = CheckStatus::kSkipped;
    note = std::move(reason);
  }
};

void to_json(nlohmann::json& j, const VerificationReport& r);

/// CSV summary with header "check_name,margin,error_budget,passed".
void write_summary_csv(std::ostream& os, const std::vector<VerificationReport>& reports);

}  // namespace beurling
