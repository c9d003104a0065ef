// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "beurling/verification.hpp"

using namespace beurling;

namespace {

const double kPi = std::acos(-1.0);

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome sampling_suite() {
  const std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto reports = run_theorem3_suite(500, 20240101, jobs);
  std::size_t evaluated = 0, violations = 0;
  double worst = INFINITY;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::kSkipped) continue;
    ++evaluated;
    const double slack = r.margin + r.error_budget;
    worst = std::min(worst, slack);
    if (!(slack >= 0.0)) ++violations;
  }
  return {evaluated == 500 && violations == 0,
          fmt("%.0f evaluated, %.0f violations, min margin+budget %.3g", static_cast<double>(evaluated),
              static_cast<double>(violations), worst)};
}

Outcome cosine_minorant() {
  std::mt19937_64 rng(1);
  const auto grid = lemma1_grid(1.0, 1e-3, 1e-3);
  double worst = INFINITY;
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const auto g = CosineSum::random(1.0, 8, rng);
    const auto r = check_lemma1(g, 1.0, grid);
    const double m = r.measured.at("min_margin");
    worst = std::min(worst, m);
    ok = ok && m >= -1e-9;
  }
  return {ok, fmt("1000 instances, min |g(u)| - g(0)cos u = %.3g", worst)};
}

Outcome sharpness() {
  struct Case {
    ConvexBody K;
    Vector u;
  };
  const std::vector<Case> cases{{ConvexBody::ball(2), {1, 0}},
                                {ConvexBody::ball(3), {0.3, -0.5, 0.8}},
                                {ConvexBody::box({1, 1}), {1, 0.5}}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    Proposition1Options opt;
    opt.probe_points = 10000;
    const auto p = build_proposition1(c.K, c.u, opt);
    const auto& m = p.report.measured;
    const bool this_ok = m.at("lambda_points") >= 1e4 && m.at("max_abs_on_lambda") <= 1e-12 &&
                         m.at("sup_estimate") >= 1 - 1e-6 && m.at("covered_fraction") == 1.0;
    ok = ok && this_ok;
    detail += fmt("[%.0f pts, max %.1e, sup %.9f] ", m.at("lambda_points"), m.at("max_abs_on_lambda"),
                  m.at("sup_estimate"));
  }
  return {ok, detail};
}

Outcome constants_sweep() {
  bool ok = true;
  double min_gap = INFINITY;
  for (int k = 0; k <= 156; ++k) {
    const double rho = 0.01 * k;
    const double c2 = 1.0 / (1.0 - std::sin(rho));
    const double c3 = 1.0 / std::cos(rho);
    const auto lib = constants_compare(rho);
    ok = ok && std::abs(lib.c2 - c2) <= 1e-12 * c2 && std::abs(lib.c3 - c3) <= 1e-12 * c3;
    if (k == 0) {
      ok = ok && lib.c2 == lib.c3;
    } else {
      ok = ok && lib.c2 - lib.c3 > 1e-12;
      min_gap = std::min(min_gap, lib.c2 - lib.c3);
    }
  }
  return {ok, fmt("157 values, min gap for rho > 0: %.3g", min_gap)};
}

Outcome adversarial() {
  bool ok = true;
  double prev = 0;
  std::string detail;
  for (double a : {2.0, 2.5, 2.9}) {
    const auto p = extremal_periodic_1d(1.0, a, 20);
    const double bound = 1.0 / std::cos(a / 2);
    ok = ok && p.status == lp::Status::kOptimal && p.ratio_lower_bound <= bound + 1e-6 && p.ratio_lower_bound >= prev;
    prev = p.ratio_lower_bound;
    detail += fmt("a=%.1f: %.5f <= %.4f; ", a, p.ratio_lower_bound, bound);
  }
  return {ok, detail};
}

Outcome zero_counting() {
  std::mt19937_64 rng(6);
  bool ok = true;
  double growth = 0;
  for (int i = 0; i < 20; ++i) {
    const auto r = check_rouche_mechanics(random_real_unit_function(6, rng), 0.1, 10);
    ok = ok && r.passed() && r.measured.at("sign_changes") == 20 && r.measured.at("alternation_failures") == 0;
    growth = std::max(growth, r.measured.at("growth_ratio_max"));
  }
  return {ok, fmt("20 instances, max |f_eps(z)| / bound on contour = %.3g", growth)};
}

Outcome geometry() {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0, 3);
  bool ok = true;
  double worst_axiom = 0;
  for (std::size_t n : {2u, 3u}) {
    Vector h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = 0.5 + 0.5 * static_cast<double>(i);
    for (const auto& K : {ConvexBody::ball(n), ConvexBody::box(h), ConvexBody::random_polytope(n, 4, rng)}) {
      std::vector<std::pair<Vector, Vector>> pairs;
      for (int i = 0; i < 1000; ++i) {
        Vector x(n), y(n);
        for (auto& c : x) c = g(rng);
        for (auto& c : y) c = g(rng);
        pairs.emplace_back(x, y);
      }
      const auto r = gauge_norm_axioms_check(K, pairs, 1e-10);
      ok = ok && r.passed();
      worst_axiom = std::max(worst_axiom, r.measured.at("homogeneity_violation"));
    }
  }
  // a/2 for aZ with K = [-1,1]; a sqrt(n)/2 for aZ^n with the unit ball.
  int brackets = 0, total = 0;
  auto bracket = [&](const SamplingSet& L, const ConvexBody& K, double truth, double step) {
    const auto c = covering_radius(L, K, default_window(K.dim()), step);
    ++total;
    if (c.rho_estimate <= truth + 1e-12 && truth <= c.rho_upper_certificate) ++brackets;
  };
  for (double a : {0.8, 1.7}) {
    for (double step : {a / 25, a / 50}) {
      bracket(SamplingSet::cubic(1, a), ConvexBody::box({1.0}), a / 2, step);
      for (std::size_t n : {1u, 2u, 3u})
        bracket(SamplingSet::cubic(n, a), ConvexBody::ball(n), a * std::sqrt(static_cast<double>(n)) / 2, step);
    }
  }
  ok = ok && brackets == total;
  return {ok, fmt("axioms on 6 bodies (max homogeneity error %.2g), %.0f/%.0f covering brackets", worst_axiom,
                  brackets, total)};
}

Outcome density() {
  const auto d1 = lower_uniform_density(SamplingSet::cubic(1, 0.5), {5, 10, 15}, 64, 3);
  const double e1 = d1.back().density;
  const auto d2 = lower_uniform_density(SamplingSet::cubic(2, 1.0), {5, 10, 15}, 64, 3);
  const double e2 = d2.back().density;
  const bool ok = std::abs(e1 - 2.0) <= 0.02 * 2.0 && std::abs(e2 - 1.0) <= 0.02;
  return {ok, fmt("0.5Z at r=15: %.4f (2); Z^2 at r=15: %.4f (1)", e1, e2)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 sampling inequality, 500 instances", sampling_suite},
      {"2 cosine minorant, 1000 instances", cosine_minorant},
      {"3 sharpness at rho = pi/2", sharpness},
      {"4 constant comparison", constants_sweep},
      {"5 adversarial consistency", adversarial},
      {"6 zero counting", zero_counting},
      {"7 geometry oracles", geometry},
      {"8 lower density", density},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-40s %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
