#include "beurling/plot_data.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace beurling {

namespace {

double get(const std::map<std::string, double>& m, const char* key) {
  const auto it = m.find(key);
  return it == m.end() ? std::nan("") : it->second;
}

}  // namespace

void write_constants_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "rho,c2,c3\n" << std::setprecision(17);
  for (const auto& r : reports) {
    if (r.check_name != "constants") continue;
    os << r.inputs.value("rho", 0.0) << ',' << get(r.bound, "c2") << ',' << get(r.measured, "c3") << '\n';
  }
}

void write_extremal_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "a,ratio_lower_bound,theorem_bound\n" << std::setprecision(17);
  for (const auto& r : reports) {
    if (r.check_name != "extremal") continue;
    os << get(r.measured, "spacing") << ',' << get(r.measured, "ratio_lower_bound") << ','
       << get(r.bound, "theorem_bound") << '\n';
  }
}

void write_ratio_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "rho,inv_cos_rho,measured_ratio\n" << std::setprecision(17);
  for (const auto& r : reports) {
    if (r.check_name != "theorem3" || r.skipped()) continue;
    os << get(r.measured, "rho_cert") << ',' << get(r.bound, "constant") << ',' << get(r.measured, "ratio") << '\n';
  }
}

void emit_plot_data(const std::vector<VerificationReport>& reports, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name);
    if (!f) throw std::runtime_error(std::string("cannot write ") + (dir / name).string());
    return f;
  };
  {
    auto f = open("constants.csv");
    write_constants_csv(f, reports);
  }
  {
    auto f = open("extremal.csv");
    write_extremal_csv(f, reports);
  }
  {
    auto f = open("theorem3_ratios.csv");
    write_ratio_csv(f, reports);
  }
}

}  // namespace beurling
