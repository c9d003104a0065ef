#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "beurling/report.hpp"

namespace beurling {

/// "rho,c2,c3" rows from `constants` reports.
void write_constants_csv(std::ostream& os, const std::vector<VerificationReport>& reports);

/// "a,ratio_lower_bound,theorem_bound" rows from `extremal` reports.
void write_extremal_csv(std::ostream& os, const std::vector<VerificationReport>& reports);

/// "rho,inv_cos_rho,measured_ratio" rows from non-skipped `theorem3` reports.
void write_ratio_csv(std::ostream& os, const std::vector<VerificationReport>& reports);

/// Writes constants.csv, extremal.csv and theorem3_ratios.csv into `dir`.
/// Each file gets its header even when no report matches.
void emit_plot_data(const std::vector<VerificationReport>& reports, const std::filesystem::path& dir);

}  // namespace beurling
