#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "beurling/bandlimited.hpp"
#include "beurling/convex_body.hpp"
#include "beurling/report.hpp"
#include "beurling/sampling_set.hpp"

namespace beurling {

/// Invalid scenario: parse error, unknown field value, failed invariant.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DensityParams {
  std::vector<double> radii{5.0, 10.0, 15.0};
  std::size_t center_samples = 64;
};

struct ExtremalParams {
  double sigma = 1.0;
  std::vector<double> spacings{2.0, 2.5, 2.9, 3.1};
  std::size_t points_per_period = 20;
  std::size_t polygon_sides = 32;
};

struct CounterexampleParams {
  std::optional<Vector> direction;
  std::optional<double> sheet_step;
  std::size_t probe_points = 10000;
};

struct Lemma1Params {
  std::size_t count = 1000;
  double tau = 1.0;
  double step = 1e-3;
  std::size_t max_terms = 8;
};

struct RoucheParams {
  std::size_t count = 20;
  double eps = 0.1;
  int N = 10;
  std::size_t max_terms = 6;
};

struct ConstantsParams {
  std::size_t count = 157;
  double step = 0.01;
};

struct LandauParams {
  double sigma = 1.0;
  std::vector<double> spacings{4.0, 2.0};
  std::vector<double> half_widths{10.0, 20.0, 40.0};
};

struct GeneratorParams {
  std::size_t count = 1;
  std::size_t max_terms = 10;
  double coef_scale = 1.0;
  std::optional<std::uint64_t> seed;
};

struct Scenario {
  std::string name = "scenario";
  std::uint64_t seed = 42;
  std::optional<ConvexBody> body;
  std::optional<SamplingSet> set;
  std::optional<BandlimitedFunction> function;
  GeneratorParams generator;
  std::optional<Window> window;
  double grid_step = 0.05;
  double probe_step = 0.05;
  std::vector<std::string> checks;

  DensityParams density;
  ExtremalParams extremal;
  CounterexampleParams counterexample;
  Lemma1Params lemma1;
  RoucheParams rouche;
  ConstantsParams constants;
  LandauParams landau;

  std::string json_output = "reports.json";
  std::string csv_output = "summary.csv";
  bool plot_data = true;
};

/// Known check names, in the order the CLI lists them.
const std::vector<std::string>& known_checks();

/// Validates every field before anything runs; errors name the field path.
Scenario parse_scenario(const nlohmann::json& j);

/// Reads and parses a JSON scenario file.  Syntax errors carry the byte
/// position reported by the parser.
Scenario load_scenario(const std::filesystem::path& path);

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  double cap = kDefaultPointCap;
};

struct RunOutcome {
  std::vector<VerificationReport> reports;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  /// 0 when everything passed or was skipped, 1 otherwise.
  int exit_code() const { return failed == 0 ? 0 : 1; }
};

/// Runs the listed checks in declaration order.  Deterministic for a fixed
/// scenario and seed regardless of `jobs`.
RunOutcome run_scenario(const Scenario& s, const RunOptions& options = {});

/// Writes the JSON report array, CSV summary, plot CSVs and a separate
/// metadata.json (the only file carrying a timestamp).
void write_outputs(const Scenario& s, const RunOutcome& outcome, const std::filesystem::path& out_dir,
                   const RunOptions& options = {});

/// Point cap: BEURLING_KIT_CAP if set and valid, else the default.
double point_cap_from_env();

}  // namespace beurling
