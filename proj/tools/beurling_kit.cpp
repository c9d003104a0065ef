// beurling_kit: command-line front end for the sampling-inequality checks.
//
//   beurling_kit run --config scenario.json --out results/
//   beurling_kit verify --dim 2 --body ball --count 500
//   beurling_kit constants --out results/
//
// Exit status: 0 all passed or skipped, 1 a check failed, 2 config error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beurling/errors.hpp"
#include "beurling/scenario.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string config;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out = "beurling_out";
  std::size_t jobs = 1;
  double cap = 0.0;
};

struct Quick {
  std::size_t dim = 2;
  std::string body = "ball";
  double spacing = 1.0;
  double window = 0.0;
  double probe_step = 0.05;
  std::size_t count = 0;
};

json body_json(const Quick& q) {
  json b{{"kind", q.body}, {"dim", q.dim}};
  if (q.body == "box") b["params"] = {{"half_widths", std::vector<double>(q.dim, 1.0)}};
  if (q.body == "polytope") {
    std::vector<std::vector<double>> v;
    for (std::size_t i = 0; i < q.dim; ++i) {
      std::vector<double> e(q.dim, 0.0);
      e[i] = 1.0;
      v.push_back(e);
      e[i] = -1.0;
      v.push_back(e);
    }
    b["params"] = {{"vertices", v}};
  }
  return b;
}

json default_scenario(const std::string& check, const Quick& q) {
  json s{{"name", check}, {"checks", {check}}};
  const double half = q.window > 0.0 ? q.window : (q.dim <= 2 ? 20.0 : 8.0);
  if (check == "theorem3") {
    s["body"] = body_json(q);
    s["generator"] = {{"count", q.count ? q.count : 500}, {"max_terms", 10}};
  } else if (check == "cover") {
    s["body"] = body_json(q);
    s["set"] = {{"kind", "lattice"}, {"dim", q.dim}, {"spacing", q.spacing}};
    s["window"] = {{"half_width", q.window > 0.0 ? q.window : 2.0}};
    s["probe_step"] = q.probe_step;
  } else if (check == "density") {
    s["set"] = {{"kind", "lattice"}, {"dim", q.dim}, {"spacing", q.spacing}};
    s["window"] = {{"half_width", half}};
    s["params"]["density"] = {{"radii", {0.25 * half, 0.5 * half, 0.75 * half}}};
  } else if (check == "counterexample") {
    s["body"] = body_json(q);
  } else if (check == "lemma1" && q.count) {
    s["params"]["lemma1"] = {{"count", q.count}};
  } else if (check == "rouche" && q.count) {
    s["params"]["rouche"] = {{"count", q.count}};
  }
  return s;
}

int execute(const std::string& check, const Common& c, const Quick& q) {
  try {
    beurling::Scenario scenario;
    if (!c.config.empty()) {
      scenario = beurling::load_scenario(c.config);
      if (!check.empty()) scenario.checks = {check};
    } else {
      scenario = beurling::parse_scenario(default_scenario(check, q));
    }
    beurling::RunOptions opt;
    if (c.seed_set) opt.seed = c.seed;
    opt.jobs = c.jobs;
    opt.cap = c.cap > 0.0 ? c.cap : beurling::point_cap_from_env();
    const auto outcome = beurling::run_scenario(scenario, opt);
    beurling::write_outputs(scenario, outcome, c.out, opt);
    std::cout << "scenario " << scenario.name << ": " << outcome.reports.size() << " reports, " << outcome.failed
              << " failed, " << outcome.skipped << " skipped -> " << c.out << '\n';
    return outcome.exit_code();
  } catch (const beurling::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
  } catch (const beurling::ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << '\n';
  } catch (const beurling::ProbeWindowError& e) {
    std::cerr << "probe window error: " << e.what() << '\n';
  }
  return 2;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "Scenario file (JSON)");
  app->add_option_function<std::uint64_t>(
      "--seed", [&c](std::uint64_t v) {
        c.seed = v;
        c.seed_set = true;
      }, "Override the scenario seed");
  app->add_option("--out", c.out, "Output directory")->capture_default_str();
  app->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--cap-points", c.cap, "Point/grid-node cap (default 5e6 or $BEURLING_KIT_CAP)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sampling-inequality verification kit for band-limited functions"};
  app.require_subcommand(1);
  Common common;
  Quick quick;

  struct Sub {
    const char* name;
    const char* check;
    const char* help;
  };
  const Sub subs[] = {
      {"run", "", "Run every check listed in --config"},
      {"verify", "theorem3", "Randomized sampling-inequality suite"},
      {"cover", "cover", "Covering radius of a set in the polar gauge"},
      {"density", "density", "Lower uniform density estimates"},
      {"extremal", "extremal", "Adversarial LP search for the sampling constant"},
      {"counterexample", "counterexample", "Sharpness construction at rho = pi/2"},
      {"lemma1", "lemma1", "Cosine minorant suite"},
      {"rouche", "rouche", "Zero counting for cos z - f_eps(z)"},
      {"constants", "constants", "Compare 1/(1 - sin rho) with 1/cos rho"},
      {"demo-landau", "landau", "Ratio trends below and above the critical density"},
  };
  std::string chosen;
  std::string chosen_check;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, common);
    if (std::string(s.name) == "run") {
      sub->get_option("--config")->required();
    } else {
      sub->add_option("--dim", quick.dim, "Dimension")->check(CLI::Range(1, 3));
      sub->add_option("--body", quick.body, "ball | box | polytope")
          ->check(CLI::IsMember({"ball", "box", "polytope"}));
      sub->add_option("--spacing", quick.spacing, "Lattice spacing")->check(CLI::PositiveNumber);
      sub->add_option("--window", quick.window, "Window half-width")->check(CLI::PositiveNumber);
      sub->add_option("--probe-step", quick.probe_step, "Probe grid step")->check(CLI::PositiveNumber);
      sub->add_option("--count", quick.count, "Number of random instances");
    }
    sub->callback([&chosen, &chosen_check, s] {
      chosen = s.name;
      chosen_check = s.check;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return execute(chosen_check, common, quick);
}
