#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <doctest.h>

#include "beurling/sampling_set.hpp"

using namespace beurling;

namespace {

const double kPi = std::acos(-1.0);

std::set<std::vector<long>> rounded(const std::vector<Vector>& pts, double unit) {
  std::set<std::vector<long>> out;
  for (const auto& p : pts) {
    std::vector<long> k;
    for (double c : p) k.push_back(std::lround(c / unit));
    out.insert(k);
  }
  return out;
}

// Covering radius of the unit triangular lattice by direct search over one
// fundamental parallelogram against a 7x7 patch of lattice points.
double brute_hex_covering(int steps) {
  const double h = std::sqrt(3.0) / 2.0;
  double worst = 0;
  for (int a = 0; a <= steps; ++a) {
    for (int b = 0; b <= steps; ++b) {
      const double u = static_cast<double>(a) / steps, v = static_cast<double>(b) / steps;
      const double px = u + 0.5 * v, py = h * v;
      double best = INFINITY;
      for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) best = std::min(best, std::hypot(px - (i + 0.5 * j), py - h * j));
      worst = std::max(worst, best);
    }
  }
  return worst;
}

std::size_t count_in_ball(const std::vector<Vector>& pts, const Vector& c, double r) {
  return static_cast<std::size_t>(std::count_if(pts.begin(), pts.end(), [&](const Vector& p) { return norm2(p - c) <= r; }));
}

}  // namespace

TEST_CASE("materialize") {
  auto pts = SamplingSet::cubic(1, 1.0).materialize(Window::cube(1, 2.0));
  CHECK(rounded(pts, 1.0) == std::set<std::vector<long>>{{-2}, {-1}, {0}, {1}, {2}});
  CHECK(SamplingSet::cubic(2, 1.0).materialize(Window::cube(2, 1.0)).size() == 9);
  CHECK(SamplingSet::cubic(2, 1.0).materialize(Window::cube(2, 1.0), 9).size() == 9);
  CHECK_THROWS_AS(SamplingSet::cubic(2, 1.0).materialize(Window::cube(2, 100.0), 1000), ResourceError);
  CHECK_THROWS_AS(SamplingSet::cubic(2, 1.0).materialize(Window::cube(3, 1.0)), DimensionMismatch);
}

TEST_CASE("hyperplane sheets") {
  const auto pts = SamplingSet::hyperplane({1, 0}, 0.5).materialize(Window::cube(2, 4.0));
  // Oracle: sheets x1 = k pi with |k pi| <= 4, x2 on 0.5 Z within [-4, 4].
  std::set<std::pair<long, long>> expect;
  for (int k = -2; k <= 2; ++k) {
    if (std::abs(k * kPi) > 4.0) continue;
    for (int j = -8; j <= 8; ++j) expect.insert({k, j});
  }
  std::set<std::pair<long, long>> got;
  for (const auto& p : pts) {
    CHECK(std::abs(p[0] / kPi - std::round(p[0] / kPi)) <= 1e-12);
    got.insert({std::lround(p[0] / kPi), std::lround(p[1] / 0.5)});
  }
  CHECK(got == expect);
  CHECK(pts.size() == 51);
}

TEST_CASE("perturbed lattice jitter is bounded and reproducible") {
  Lattice base{{{1, 0}, {0, 1}}, {0, 0}};
  const auto a = SamplingSet::perturbed(base, 0.2, 5).materialize(Window::cube(2, 5.0));
  const auto b = SamplingSet::perturbed(base, 0.2, 5).materialize(Window::cube(2, 5.0));
  CHECK(a == b);
  for (const auto& p : a) {
    CHECK(std::abs(p[0] - std::round(p[0])) <= 0.2);
    CHECK(std::abs(p[1] - std::round(p[1])) <= 0.2);
  }
  CHECK(SamplingSet::perturbed(base, 0.2, 6).materialize(Window::cube(2, 5.0)) != a);
}

TEST_CASE("covering radius of cubic lattices") {
  SUBCASE("Z with K = [-1,1]") {
    const auto r = covering_radius(SamplingSet::cubic(1, 1.0), ConvexBody::box({1.0}), Window::cube(1, 5.0), 0.01);
    CHECK(r.rho_estimate <= 0.5 + 1e-12);
    CHECK(r.rho_upper_certificate >= 0.5);
    CHECK(r.rho_upper_certificate - r.rho_estimate <= 0.011);
  }
  SUBCASE("Z^2 with the unit ball") {
    const auto r = covering_radius(SamplingSet::cubic(2, 1.0), ConvexBody::ball(2), Window::cube(2, 5.0), 0.01);
    CHECK(r.rho_estimate <= std::sqrt(0.5) + 1e-12);
    CHECK(r.rho_upper_certificate >= std::sqrt(0.5));
  }
  SUBCASE("a Z^n brackets a sqrt(n)/2 at two probe steps") {
    for (std::size_t n : {1u, 2u, 3u}) {
      for (double a : {0.7, 1.5}) {
        const double truth = a * std::sqrt(static_cast<double>(n)) / 2;
        double prev_gap = INFINITY;
        for (double step : {a / 10, a / 20}) {
          const auto r = covering_radius(SamplingSet::cubic(n, a), ConvexBody::ball(n), default_window(n), step);
          CHECK(r.rho_estimate <= truth + 1e-12);
          CHECK(r.rho_upper_certificate >= truth);
          CHECK(r.rho_upper_certificate - r.rho_estimate <= prev_gap);
          prev_gap = r.rho_upper_certificate - r.rho_estimate;
        }
      }
    }
  }
}

TEST_CASE("hexagonal covering radius") {
  const double oracle = brute_hex_covering(300);
  CHECK(oracle == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-4));
  const auto r = covering_radius(SamplingSet::hexagonal(1.0), ConvexBody::ball(2), Window::cube(2, 5.0), 0.005);
  CHECK(r.rho_estimate <= 1.0 / std::sqrt(3.0) + 1e-12);
  CHECK(r.rho_upper_certificate >= 1.0 / std::sqrt(3.0));
  CHECK(std::abs(r.rho_estimate - oracle) <= 0.01);
}

TEST_CASE("covering radius scales and is monotone under inclusion") {
  std::vector<Vector> pts;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-8, 8);
  for (int i = 0; i < 300; ++i) pts.push_back({u(rng), u(rng)});
  const auto K = ConvexBody::ball(2);
  const Window probe = Window::cube(2, 3.0);
  const auto base = covering_radius(SamplingSet::explicit_list(pts, 5.0), K, probe, 0.02);
  for (double a : {0.5, 2.0}) {
    const auto s = covering_radius(SamplingSet::explicit_list(pts, 5.0).scaled(a), K, probe.scaled(a), 0.02 * a);
    CHECK(s.rho_estimate == doctest::Approx(a * base.rho_estimate).epsilon(1e-9));
  }
  auto more = pts;
  for (int i = 0; i < 100; ++i) more.push_back({u(rng), u(rng)});
  const auto bigger = covering_radius(SamplingSet::explicit_list(more, 5.0), K, probe, 0.02);
  CHECK(bigger.rho_estimate <= base.rho_estimate);

  const auto lat = covering_radius(SamplingSet::hexagonal(1.0), K, probe, 0.01);
  const auto lat2 = covering_radius(SamplingSet::hexagonal(1.0).scaled(2.0), K, probe, 0.02);
  CHECK(lat2.rho_estimate == doctest::Approx(2 * lat.rho_estimate).epsilon(1e-9));
}

TEST_CASE("probe window too close to the materialized set") {
  std::vector<Vector> pts;
  for (int i = -3; i <= 3; ++i) pts.push_back({static_cast<double>(i)});
  CHECK_THROWS_AS(covering_radius(SamplingSet::explicit_list(pts, 0.1), ConvexBody::box({1.0}), Window::cube(1, 3.0), 0.01),
                  ProbeWindowError);
}

TEST_CASE("lower uniform density") {
  SUBCASE("0.5 Z") {
    const auto d = lower_uniform_density(SamplingSet::cubic(1, 0.5), {200.0}, 32, 1, Window::cube(1, 300.0));
    CHECK(d[0].density == doctest::Approx(2.0).epsilon(0.02));
  }
  SUBCASE("Z^2 against direct counting") {
    const Window w = Window::cube(2, 60.0);
    const auto set = SamplingSet::cubic(2, 1.0);
    const auto d = lower_uniform_density(set, {50.0}, 16, 3, w);
    CHECK(d[0].density == doctest::Approx(1.0).epsilon(0.02));
    const auto pts = set.materialize(w);
    const double direct = count_in_ball(pts, d[0].worst_center, 50.0) / ball_volume(2, 50.0);
    CHECK(direct == doctest::Approx(d[0].density).epsilon(1e-12));
    CHECK(count_in_ball(pts, d[0].worst_center, 50.0) == d[0].min_count);
  }
  SUBCASE("a hole gives zero") {
    std::vector<Vector> pts;
    for (int i = -20; i <= 20; ++i)
      for (int j = -20; j <= 20; ++j)
        if (std::hypot(i, j) > 8) pts.push_back({static_cast<double>(i), static_cast<double>(j)});
    const auto d = lower_uniform_density(SamplingSet::explicit_list(pts), {5.0}, 64, 7, Window::cube(2, 20.0));
    CHECK(d[0].density == 0.0);
  }
  CHECK_THROWS_AS(lower_uniform_density(SamplingSet::cubic(2, 1.0), {30.0}, 8, 1, Window::cube(2, 10.0)),
                  std::invalid_argument);
  CHECK(ball_volume(3, 2.0) == doctest::Approx(4.0 / 3.0 * kPi * 8.0));
}

TEST_CASE("Nyquist verdicts") {
  CHECK(nyquist_check_1d(1.0, 0.5).sampling_predicted);
  CHECK_FALSE(nyquist_check_1d(1.0, 0.25).sampling_predicted);
  CHECK_FALSE(nyquist_check_1d(1.0, 1.0 / kPi).sampling_predicted);
  CHECK(nyquist_check_1d(1.0, 0.25).critical_density == doctest::Approx(1.0 / kPi));
}

TEST_CASE("orthonormal complement") {
  const auto b = orthonormal_complement({0, 0, 1});
  REQUIRE(b.size() == 2);
  CHECK(b[0] == Vector{1, 0, 0});
  CHECK(b[1] == Vector{0, 1, 0});
  const Vector n{1, 2, 3};
  for (const auto& v : orthonormal_complement(n)) {
    CHECK(std::abs(dot(v, n)) <= 1e-14);
    CHECK(norm2(v) == doctest::Approx(1.0));
  }
}

TEST_CASE("JSON and CSV") {
  for (const auto& s : {SamplingSet::cubic(2, 0.7), SamplingSet::hexagonal(1.2), SamplingSet::hyperplane({1, 1}, 0.3),
                        SamplingSet::perturbed({{{1, 0}, {0, 1}}, {0, 0}}, 0.1, 9)}) {
    const auto back = set_from_json(nlohmann::json(s));
    CHECK(back.materialize(Window::cube(2, 4.0)) == s.materialize(Window::cube(2, 4.0)));
  }
  std::istringstream csv("# points\n1,2\n\n3.5,-4\n");
  const auto pts = read_points_csv(csv);
  CHECK(pts == std::vector<Vector>{{1, 2}, {3.5, -4}});
  std::istringstream bad("1,2\n3\n");
  CHECK_THROWS(read_points_csv(bad));
  CHECK_THROWS(set_from_json(nlohmann::json::parse(R"({"kind":"quasicrystal"})")));
}
