#include "beurling/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <future>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

#include "beurling/plot_data.hpp"
#include "beurling/verification.hpp"

namespace beurling {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"theorem3", "cover",  "density",   "extremal", "counterexample",
                                              "lemma1",   "rouche", "constants", "landau"};
  return names;
}

namespace {

/// Typed field reader that reports failures with the full field path.
class Reader {
 public:
  Reader(const nlohmann::json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError("field '" + path_ + "' must be an object");
  }

  bool has(const char* key) const { return j_.contains(key); }
  std::string where(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  template <class T>
  T get(const char* key, T fallback) const {
    if (!j_.contains(key)) return fallback;
    return require<T>(key);
  }

  template <class T>
  T require(const char* key) const {
    if (!j_.contains(key)) throw ConfigError("missing field '" + where(key) + "'");
    try {
      return j_.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("field '" + where(key) + "' has the wrong type: " + e.what());
    }
  }

  double positive(const char* key, double fallback) const {
    const double v = get<double>(key, fallback);
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("field '" + where(key) + "' must be positive");
    return v;
  }

  std::size_t count(const char* key, std::size_t fallback) const {
    if (!j_.contains(key)) return fallback;
    const auto& v = j_.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw ConfigError("field '" + where(key) + "' must be a nonnegative integer");
    }
    return v.get<std::size_t>();
  }

  const nlohmann::json& raw(const char* key) const { return j_.at(key); }

 private:
  const nlohmann::json& j_;
  std::string path_;
};

template <class Fn>
auto wrap(const char* field, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    std::string msg = e.what();
    // Body/function parsers already name their fields.
    if (msg.find("field '") != std::string::npos) throw ConfigError(msg);
    throw ConfigError("field '" + std::string(field) + "': " + msg);
  }
}

Window parse_window(const nlohmann::json& j, std::optional<std::size_t> dim) {
  Reader r(j, "window");
  if (r.has("half_width")) {
    if (!dim) throw ConfigError("field 'window.half_width' needs a body or set to fix the dimension");
    return Window::cube(*dim, r.positive("half_width", 1.0));
  }
  Window w{r.require<Vector>("lo"), r.require<Vector>("hi")};
  if (!w.valid()) throw ConfigError("field 'window' must have lo <= hi of equal nonzero length");
  if (dim && w.dim() != *dim) throw ConfigError("field 'window' dimension does not match body/set");
  return w;
}

std::vector<double> positive_list(const Reader& r, const char* key, std::vector<double> fallback) {
  auto v = r.get<std::vector<double>>(key, std::move(fallback));
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError("field '" + r.where(key) + "' must hold positive numbers");
  }
  return v;
}

std::uint64_t derive_seed(std::uint64_t seed, std::size_t check_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(check_index)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

Scenario parse_scenario(const nlohmann::json& j) {
  Reader top(j, "");
  Scenario s;
  s.name = top.get<std::string>("name", s.name);
  s.seed = top.get<std::uint64_t>("seed", s.seed);
  if (top.has("body")) s.body = wrap("body", [&] { return body_from_json(top.raw("body")); });
  if (top.has("set")) s.set = wrap("set", [&] { return set_from_json(top.raw("set")); });
  if (top.has("function")) s.function = wrap("function", [&] { return function_from_json(top.raw("function")); });
  if (top.has("generator")) {
    Reader g(top.raw("generator"), "generator");
    s.generator.count = g.count("count", 1);
    s.generator.max_terms = g.count("max_terms", 10);
    if (s.generator.max_terms == 0) throw ConfigError("field 'generator.max_terms' must be positive");
    s.generator.coef_scale = g.positive("coef_scale", 1.0);
    if (g.has("seed")) s.generator.seed = g.require<std::uint64_t>("seed");
  }

  std::optional<std::size_t> dim;
  if (s.body) dim = s.body->dim();
  if (s.set) {
    if (dim && *dim != s.set->dim()) throw ConfigError("field 'set' dimension does not match 'body'");
    dim = s.set->dim();
  }
  if (s.function && dim && s.function->dim() != *dim) {
    throw ConfigError("field 'function' dimension does not match 'body'");
  }
  if (top.has("window")) s.window = parse_window(top.raw("window"), dim);
  s.grid_step = top.positive("grid_step", s.grid_step);
  s.probe_step = top.positive("probe_step", s.probe_step);

  s.checks = top.require<std::vector<std::string>>("checks");
  if (s.checks.empty()) throw ConfigError("field 'checks' must list at least one check");
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    const auto& c = s.checks[i];
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
      throw ConfigError("field 'checks[" + std::to_string(i) + "]': unknown check '" + c + "'");
    }
    const bool needs_body = c == "theorem3" || c == "cover" || c == "counterexample";
    const bool needs_set = c == "cover" || c == "density" || (c == "theorem3" && s.function);
    if (needs_body && !s.body) throw ConfigError("check '" + c + "' needs field 'body'");
    if (needs_set && !s.set) throw ConfigError("check '" + c + "' needs field 'set'");
    if ((c == "theorem3" && s.function) || c == "cover") {
      if (!s.window) throw ConfigError("check '" + c + "' needs field 'window'");
    }
  }

  const nlohmann::json params = top.get<nlohmann::json>("params", nlohmann::json::object());
  Reader p(params, "params");
  if (p.has("density")) {
    Reader r(p.raw("density"), "params.density");
    s.density.radii = positive_list(r, "radii", s.density.radii);
    s.density.center_samples = r.count("center_samples", s.density.center_samples);
  }
  if (p.has("extremal")) {
    Reader r(p.raw("extremal"), "params.extremal");
    s.extremal.sigma = r.positive("sigma", s.extremal.sigma);
    s.extremal.spacings = positive_list(r, "spacings", s.extremal.spacings);
    s.extremal.points_per_period = r.count("points_per_period", s.extremal.points_per_period);
    s.extremal.polygon_sides = r.count("polygon_sides", s.extremal.polygon_sides);
    if (s.extremal.polygon_sides < 3) throw ConfigError("field 'params.extremal.polygon_sides' must be >= 3");
  }
  if (p.has("counterexample")) {
    Reader r(p.raw("counterexample"), "params.counterexample");
    if (r.has("direction")) s.counterexample.direction = r.require<Vector>("direction");
    if (r.has("sheet_step")) s.counterexample.sheet_step = r.positive("sheet_step", 0.05);
    s.counterexample.probe_points = r.count("probe_points", s.counterexample.probe_points);
    if (s.counterexample.direction && dim && s.counterexample.direction->size() != *dim) {
      throw ConfigError("field 'params.counterexample.direction' dimension does not match 'body'");
    }
  }
  if (p.has("lemma1")) {
    Reader r(p.raw("lemma1"), "params.lemma1");
    s.lemma1.count = r.count("count", s.lemma1.count);
    s.lemma1.tau = r.positive("tau", s.lemma1.tau);
    s.lemma1.step = r.positive("step", s.lemma1.step);
    s.lemma1.max_terms = std::max<std::size_t>(1, r.count("max_terms", s.lemma1.max_terms));
  }
  if (p.has("rouche")) {
    Reader r(p.raw("rouche"), "params.rouche");
    s.rouche.count = r.count("count", s.rouche.count);
    s.rouche.eps = r.positive("eps", s.rouche.eps);
    if (!(s.rouche.eps < 1.0)) throw ConfigError("field 'params.rouche.eps' must lie in (0, 1)");
    s.rouche.N = static_cast<int>(r.count("N", static_cast<std::size_t>(s.rouche.N)));
    if (s.rouche.N < 1) throw ConfigError("field 'params.rouche.N' must be positive");
    s.rouche.max_terms = std::max<std::size_t>(1, r.count("max_terms", s.rouche.max_terms));
  }
  if (p.has("constants")) {
    Reader r(p.raw("constants"), "params.constants");
    s.constants.count = r.count("count", s.constants.count);
    s.constants.step = r.positive("step", s.constants.step);
    if (static_cast<double>(s.constants.count - 1) * s.constants.step >= std::numbers::pi / 2) {
      throw ConfigError("field 'params.constants': sweep reaches pi/2");
    }
  }
  if (p.has("landau")) {
    Reader r(p.raw("landau"), "params.landau");
    s.landau.sigma = r.positive("sigma", s.landau.sigma);
    s.landau.spacings = positive_list(r, "spacings", s.landau.spacings);
    s.landau.half_widths = positive_list(r, "half_widths", s.landau.half_widths);
  }

  if (top.has("outputs")) {
    Reader o(top.raw("outputs"), "outputs");
    s.json_output = o.get<std::string>("json", s.json_output);
    s.csv_output = o.get<std::string>("csv", s.csv_output);
    s.plot_data = o.get<bool>("plot_data", s.plot_data);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path.string() + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_scenario(j);
}

namespace {

void run_check(const Scenario& s, const std::string& check, std::uint64_t seed, const RunOptions& opt,
               std::vector<VerificationReport>& out) {
  std::mt19937_64 rng(seed);
  if (check == "theorem3") {
    Theorem3Options t3;
    t3.probe_step = s.probe_step;
    t3.cap = opt.cap;
    t3.seed = seed;
    if (s.function) {
      try {
        out.push_back(check_theorem3(*s.function, *s.set, *s.body, *s.window, s.grid_step, t3));
      } catch (const HypothesisViolation& e) {
        VerificationReport r;
        r.check_name = "theorem3";
        r.inputs = {{"seed", seed}};
        r.skip(e.what());
        out.push_back(std::move(r));
      }
      return;
    }
    if (s.generator.seed) rng.seed(*s.generator.seed);
    std::vector<Theorem3Instance> inst;
    for (std::size_t i = 0; i < s.generator.count; ++i) {
      auto x = random_theorem3_instance(*s.body, rng, s.generator.max_terms, s.generator.coef_scale);
      if (s.set) {
        x.set = *s.set;
        x.probe_step = s.probe_step;
      }
      if (s.window) {
        x.window = *s.window;
        x.grid_step = s.grid_step;
      }
      inst.push_back(std::move(x));
    }
    std::vector<VerificationReport> reports(inst.size());
    auto one = [&](std::size_t i) {
      Theorem3Options o = t3;
      o.probe_step = inst[i].probe_step;
      try {
        reports[i] = check_theorem3(inst[i].f, inst[i].set, inst[i].body, inst[i].window, inst[i].grid_step, o);
      } catch (const HypothesisViolation& e) {
        reports[i].check_name = "theorem3";
        reports[i].inputs = {{"seed", seed}};
        reports[i].skip(e.what());
      }
      reports[i].inputs["instance"] = i;
    };
    const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < inst.size(); i += jobs) one(i);
      }));
    }
    for (auto& w : workers) w.get();
    for (auto& r : reports) out.push_back(std::move(r));
    return;
  }
  if (check == "cover") {
    const auto cov = covering_radius(*s.set, *s.body, *s.window, s.probe_step, opt.cap);
    VerificationReport r;
    r.check_name = "cover";
    r.inputs = {{"body", *s.body}, {"set", *s.set}, {"probe_step", s.probe_step}};
    r.measured["rho_estimate"] = cov.rho_estimate;
    r.measured["rho_cert"] = cov.rho_upper_certificate;
    r.measured["probe_nodes"] = cov.probe_nodes;
    r.measured["points"] = static_cast<double>(cov.points);
    r.bound["half_pi"] = std::numbers::pi / 2;
    r.finalize(0.0, 0.0);
    r.note = cov.rho_upper_certificate < std::numbers::pi / 2 ? "covering hypothesis certified"
                                                              : "covering radius not certified below pi/2";
    out.push_back(std::move(r));
    return;
  }
  if (check == "density") {
    const auto est = lower_uniform_density(*s.set, s.density.radii, s.density.center_samples, seed, s.window, opt.cap);
    VerificationReport r;
    r.check_name = "density";
    r.inputs = {{"set", *s.set}, {"radii", s.density.radii}, {"center_samples", s.density.center_samples},
                {"seed", seed}};
    for (const auto& e : est) {
      std::ostringstream key;
      key << "density_r" << e.r;
      r.measured[key.str()] = e.density;
    }
    r.finalize(0.0, 0.0);
    r.note = "upper estimate of D^- from sampled centers";
    out.push_back(std::move(r));
    return;
  }
  if (check == "extremal") {
    AdversarialOptions ao;
    ao.polygon_sides = s.extremal.polygon_sides;
    ao.cap = opt.cap;
    double previous = 0.0;
    for (double a : s.extremal.spacings) {
      const auto pt = extremal_periodic_1d(s.extremal.sigma, a, s.extremal.points_per_period, ao);
      VerificationReport r;
      r.check_name = "extremal";
      r.inputs = {{"sigma", s.extremal.sigma}, {"spacing", a}, {"points_per_period", s.extremal.points_per_period},
                  {"polygon_sides", s.extremal.polygon_sides}};
      r.measured["spacing"] = a;
      r.measured["ratio_lower_bound"] = pt.ratio_lower_bound;
      r.measured["previous_ratio"] = previous;
      r.bound["theorem_bound"] = pt.theorem_bound;
      r.note = std::string("lp status: ") + std::string(lp::to_string(pt.status));
      if (std::isfinite(pt.theorem_bound)) {
        r.finalize(std::min(pt.theorem_bound + 1e-6 - pt.ratio_lower_bound, pt.ratio_lower_bound - previous + 1e-9), 0.0);
      } else {
        r.finalize(std::min(0.0, pt.ratio_lower_bound - previous + 1e-9), 0.0);
      }
      previous = pt.ratio_lower_bound;
      out.push_back(std::move(r));
    }
    return;
  }
  if (check == "counterexample") {
    Proposition1Options po;
    po.window = s.window;
    po.sheet_step = s.counterexample.sheet_step;
    po.probe_points = s.counterexample.probe_points;
    po.seed = seed;
    po.cap = opt.cap;
    Vector u = s.counterexample.direction.value_or(Vector(s.body->dim(), 0.0));
    if (!s.counterexample.direction) u[0] = 1.0;
    out.push_back(build_proposition1(*s.body, u, po).report);
    return;
  }
  if (check == "lemma1") {
    const auto grid = lemma1_grid(s.lemma1.tau, s.lemma1.step);
    for (std::size_t i = 0; i < s.lemma1.count; ++i) {
      auto r = check_lemma1(CosineSum::random(s.lemma1.tau, s.lemma1.max_terms, rng), s.lemma1.tau, grid);
      r.inputs["seed"] = seed;
      r.inputs["instance"] = i;
      out.push_back(std::move(r));
    }
    return;
  }
  if (check == "rouche") {
    for (std::size_t i = 0; i < s.rouche.count; ++i) {
      auto r = check_rouche_mechanics(random_real_unit_function(s.rouche.max_terms, rng), s.rouche.eps, s.rouche.N);
      r.inputs["seed"] = seed;
      r.inputs["instance"] = i;
      out.push_back(std::move(r));
    }
    return;
  }
  if (check == "constants") {
    for (std::size_t k = 0; k < s.constants.count; ++k) {
      out.push_back(constants_report(static_cast<double>(k) * s.constants.step));
    }
    return;
  }
  if (check == "landau") {
    for (double a : s.landau.spacings) out.push_back(landau_necessity_demo(s.landau.sigma, a, s.landau.half_widths));
    return;
  }
}

}  // namespace

RunOutcome run_scenario(const Scenario& s, const RunOptions& options) {
  RunOutcome outcome;
  const std::uint64_t seed = options.seed.value_or(s.seed);
  for (std::size_t i = 0; i < s.checks.size(); ++i) {
    run_check(s, s.checks[i], derive_seed(seed, i), options, outcome.reports);
  }
  for (const auto& r : outcome.reports) {
    if (r.skipped()) ++outcome.skipped;
    else if (!r.passed()) ++outcome.failed;
  }
  return outcome;
}

void write_outputs(const Scenario& s, const RunOutcome& outcome, const std::filesystem::path& out_dir,
                   const RunOptions& options) {
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream f(out_dir / s.json_output);
    if (!f) throw std::runtime_error("cannot write " + (out_dir / s.json_output).string());
    f << nlohmann::json(outcome.reports).dump(2) << '\n';
  }
  {
    std::ofstream f(out_dir / s.csv_output);
    if (!f) throw std::runtime_error("cannot write " + (out_dir / s.csv_output).string());
    write_summary_csv(f, outcome.reports);
  }
  if (s.plot_data) emit_plot_data(outcome.reports, out_dir);
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream ts;
  ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  nlohmann::json meta{{"scenario", s.name},
                      {"seed", options.seed.value_or(s.seed)},
                      {"jobs", options.jobs},
                      {"reports", outcome.reports.size()},
                      {"failed", outcome.failed},
                      {"skipped", outcome.skipped},
                      {"generated_at", ts.str()}};
  std::ofstream(out_dir / "metadata.json") << meta.dump(2) << '\n';
}

double point_cap_from_env() {
  if (const char* v = std::getenv("BEURLING_KIT_CAP")) {
    char* end = nullptr;
    const double cap = std::strtod(v, &end);
    if (end != v && *end == '\0' && cap > 0.0) return cap;
  }
  return kDefaultPointCap;
}

}  // namespace beurling
