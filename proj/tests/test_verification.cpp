#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "beurling/verification.hpp"

using namespace beurling;

namespace {

const double kPi = std::acos(-1.0);

BandlimitedFunction sine(const ConvexBody& K, const Vector& t0) {
  return BandlimitedFunction(K, {{Complex(0, -0.5), t0}, {Complex(0, 0.5), -t0}});
}

}  // namespace

TEST_CASE("constants") {
  const auto c0 = constants_compare(0.0);
  CHECK(c0.c2 == 1.0);
  CHECK(c0.c3 == 1.0);
  const auto c = constants_compare(kPi / 4);
  CHECK(c.c2 == doctest::Approx(1.0 / (1.0 - std::sqrt(0.5))).epsilon(1e-12));
  CHECK(c.c3 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  const auto near = constants_compare(1.5);
  CHECK(near.c2 == doctest::Approx(1.0 / (1.0 - std::sin(1.5))));
  CHECK(near.c2 > near.c3);
  // (1 - sin r) < cos r on (0, pi/2): the gap is positive for every sample.
  for (int k = 1; k <= 156; ++k) CHECK(constants_report(0.01 * k).passed());
  CHECK_THROWS_AS(constants_compare(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(constants_compare(kPi / 2), std::invalid_argument);
}

TEST_CASE("sampling inequality, hand-built instances") {
  const auto K = ConvexBody::box({1.0});
  SUBCASE("sin on (pi/2) Z") {
    const auto r = check_theorem3(sine(K, {1.0}), SamplingSet::cubic(1, kPi / 2), K, Window::cube(1, 20.0), 1e-3,
                                  {.probe_step = 1e-3});
    CHECK(r.passed());
    CHECK(r.measured.at("rho_estimate") == doctest::Approx(kPi / 4).epsilon(1e-3));
    CHECK(r.measured.at("sample_max") == doctest::Approx(1.0));
  }
  SUBCASE("cos on 2Z") {
    BandlimitedFunction cosine(K, {{0.5, {1.0}}, {0.5, {-1.0}}});
    const auto r = check_theorem3(cosine, SamplingSet::cubic(1, 2.0), K, Window::cube(1, 20.0), 1e-3,
                                  {.probe_step = 1e-3});
    CHECK(r.passed());
    CHECK(r.bound.at("constant") == doctest::Approx(1.0 / std::cos(1.0)).epsilon(2e-3));
  }
  SUBCASE("rho at or above pi/2") {
    CHECK_THROWS_AS(check_theorem3(sine(K, {1.0}), SamplingSet::cubic(1, 4.0), K, Window::cube(1, 20.0), 1e-2),
                    HypothesisViolation);
  }
}

TEST_CASE("sampling inequality, 60 random jittered 2D instances") {
  std::mt19937_64 rng(2024);
  const auto K = ConvexBody::ball(2);
  int failed = 0;
  for (int i = 0; i < 60; ++i) {
    const auto inst = random_theorem3_instance(K, rng, 6);
    const auto r = check_theorem3(inst.f, inst.set, inst.body, inst.window, inst.grid_step,
                                  {.probe_step = inst.probe_step});
    if (r.status == CheckStatus::kFailed) ++failed;
  }
  CHECK(failed == 0);
}

TEST_CASE("suite is independent of the worker count") {
  const auto a = run_theorem3_suite(9, 77, 1);
  const auto b = run_theorem3_suite(9, 77, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(nlohmann::json(a[i]).dump() == nlohmann::json(b[i]).dump());
}

TEST_CASE("adversarial LP") {
  const auto K = ConvexBody::box({1.0});
  SUBCASE("a single point cannot control f") {
    const auto r = adversarial_ratio(K, SamplingSet::explicit_list({{0.0}}), {kPi / 2}, {{1.0}, {-1.0}},
                                     Window::cube(1, 2.0));
    CHECK(r.status == lp::Status::kUnbounded);
    CHECK(std::isinf(r.ratio_lower_bound));
  }
  SUBCASE("supercritical lattices stay under 1/cos") {
    double prev = 0;
    for (double a : {2.0, 2.5, 2.9}) {
      const auto p = extremal_periodic_1d(1.0, a, 20);
      REQUIRE(p.status == lp::Status::kOptimal);
      CHECK(p.ratio_lower_bound <= 1.0 / std::cos(a / 2) + 1e-6);
      CHECK(p.ratio_lower_bound >= 1.0);
      CHECK(p.ratio_lower_bound >= prev - 1e-9);
      prev = p.ratio_lower_bound;
    }
  }
  SUBCASE("witness satisfies the polygon-relaxed constraints") {
    const double P = 20.0;
    const auto grid = periodic_frequency_grid(1.0, P);
    for (const auto& t : grid) CHECK(std::abs(t[0]) <= 1.0 + 1e-15);
    const auto r = adversarial_ratio(K, SamplingSet::cubic(1, 2.0), {1.0}, grid, Window({0.0}, {P - 1.0}));
    REQUIRE(r.status == lp::Status::kOptimal);
    REQUIRE(r.certificate.has_value());
    CHECK(r.constraint_max <= 1.0 / std::cos(kPi / 32) + 1e-9);
    double on_set = 0;
    for (int k = -20; k <= 20; ++k) on_set = std::max(on_set, std::abs((*r.certificate)({2.0 * k})));
    CHECK(std::abs((*r.certificate)({1.0})) / on_set == doctest::Approx(r.ratio_lower_bound).epsilon(1e-9));
  }
}

TEST_CASE("counterexample construction") {
  SUBCASE("ball, 2D") {
    const auto K = ConvexBody::ball(2);
    const auto p = build_proposition1(K, {1, 0});
    CHECK(p.t0 == Vector{1, 0});
    CHECK(p.x0[0] == doctest::Approx(kPi / 2));
    CHECK(p.x0[1] == 0.0);
    CHECK(p.report.passed());
    CHECK(p.report.measured.at("lambda_points") >= 1e4);
    CHECK(p.report.measured.at("max_abs_on_lambda") <= 1e-12);
    CHECK(p.report.measured.at("covered_fraction") == 1.0);
    CHECK(polar_gauge(K, p.x0) == doctest::Approx(kPi / 2));
  }
  SUBCASE("box, diagonal direction") {
    const auto K = ConvexBody::box({1, 1});
    const auto p = build_proposition1(K, {1, 1});
    CHECK(p.t0 == Vector{1, 1});
    CHECK(p.x0[0] == doctest::Approx(kPi / 4));
    CHECK(p.x0[1] == doctest::Approx(kPi / 4));
    CHECK(p.report.passed());
  }
  SUBCASE("polytope tie is broken deterministically") {
    const auto K = ConvexBody::polytope({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    const auto p = build_proposition1(K, {1, 1});
    CHECK(p.tie_broken);
    CHECK(p.t0 == Vector{0, 1});
    CHECK(p.report.passed());
  }
  CHECK_THROWS(build_proposition1(ConvexBody::ball(2), {0, 0}));
}

TEST_CASE("cosine minorant") {
  const auto grid = lemma1_grid(1.0, 1e-3);
  CHECK(grid.front() > -kPi / 2);
  CHECK(grid.back() < kPi / 2);
  SUBCASE("equality case") {
    const auto r = check_lemma1({{1.0}, {1.0}}, 1.0, grid);
    CHECK(r.passed());
    CHECK(std::abs(r.measured.at("min_margin")) <= 1e-12);
  }
  SUBCASE("constant is strictly above") {
    const auto r = check_lemma1({{1.0}, {0.0}}, 1.0, grid);
    CHECK(r.passed());
    CHECK(r.measured.at("min_margin") > 0.0);
  }
  SUBCASE("random family") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
      const auto g = CosineSum::random(1.0, 8, rng);
      CHECK(g.at_zero() == doctest::Approx(g(0.0)).epsilon(1e-14));
      CHECK(check_lemma1(g, 1.0, grid).passed());
    }
  }
  CHECK_THROWS_AS(check_lemma1({{1.0}, {1.5}}, 1.0, grid), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma1({{-1.0}, {0.5}}, 1.0, grid), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma1({{1.0}, {0.5}}, 1.0, {2.0}), std::invalid_argument);
}

TEST_CASE("zero counting") {
  SUBCASE("f = 0") {
    const auto r = check_rouche_mechanics(ExponentialSum1D({{0.0, 0.0}}), 0.1, 10);
    CHECK(r.passed());
    CHECK(r.measured.at("sign_changes") == 20);
  }
  SUBCASE("0.9 cos(t/2) against a direct sign scan") {
    const ExponentialSum1D f({{0.45, 0.5}, {0.45, -0.5}});
    const auto r = check_rouche_mechanics(f, 0.1, 10);
    CHECK(r.passed());
    int changes = 0;
    double prev = NAN;
    for (long k = 0; k <= 2000000; ++k) {
      const double t = -10 * kPi + k * (20 * kPi / 2000000);
      const double w = 0.1 * t;
      const double s = w == 0 ? 1.0 : std::sin(w) / w;
      const double v = std::cos(t) - 0.9 * s * 0.9 * std::cos(0.45 * t);
      if (!std::isnan(prev) && (prev < 0) != (v < 0) && v != 0) ++changes;
      if (v != 0) prev = v;
    }
    CHECK(changes == 20);
    CHECK(r.measured.at("sign_changes") == changes);
  }
  SUBCASE("random unit functions, N = 5") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) CHECK(check_rouche_mechanics(random_real_unit_function(6, rng), 0.1, 5).passed());
  }
  CHECK_THROWS(check_rouche_mechanics(ExponentialSum1D({{Complex(0, 0.5), 0.5}}), 0.1, 5));
  CHECK_THROWS(check_rouche_mechanics(ExponentialSum1D({{1.5, 0.0}}), 0.1, 5));
}

TEST_CASE("density necessity demonstration") {
  const auto sub = landau_necessity_demo(1.0, 4.0);
  CHECK(sub.passed());
  const auto super = landau_necessity_demo(1.0, 2.0);
  CHECK(super.passed());
  for (const char* key : {"ratio_W10", "ratio_W20", "ratio_W40"})
    CHECK(super.measured.at(key) <= 1.0 / std::cos(1.0) + 1e-6);
  CHECK(std::isinf(sub.measured.at("ratio_W40")));
  CHECK(landau_necessity_demo(1.0, kPi).status == CheckStatus::kSkipped);
}
