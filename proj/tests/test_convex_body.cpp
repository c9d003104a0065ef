#include <cmath>
#include <random>

#include <doctest.h>

#include "beurling/convex_body.hpp"

using namespace beurling;

namespace {

std::vector<Vector> cross_polytope_2d() { return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}; }

Vector random_vector(std::size_t n, std::mt19937_64& rng, double scale = 3.0) {
  std::normal_distribution<double> g(0.0, scale);
  Vector v(n);
  for (auto& c : v) c = g(rng);
  return v;
}

// Brute-force sup of t.x over points on every segment between two vertices
// (this includes all edges, so the sup over K is attained).
double segment_sampled_support(const std::vector<Vector>& verts, const Vector& x) {
  double best = -INFINITY;
  for (const auto& a : verts) {
    for (const auto& b : verts) {
      for (int s = 0; s <= 100; ++s) {
        const double w = s / 100.0;
        double v = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) v += ((1 - w) * a[i] + w * b[i]) * x[i];
        best = std::max(best, v);
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("support function closed forms") {
  CHECK(support_function(ConvexBody::ball(2), {3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(support_function(ConvexBody::box({1, 1}), {1, 2}) == 3.0);
  CHECK(support_function(ConvexBody::polytope(cross_polytope_2d()), {1, 2}) == 2.0);
  CHECK(support_function(ConvexBody::ball(3, 2.0), {0, 0, 0}) == 0.0);
  CHECK_THROWS_AS(support_function(ConvexBody::ball(2), {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("polar gauge examples") {
  const auto ball = ConvexBody::ball(2);
  CHECK(polar_gauge(ball, {3, 4}) == doctest::Approx(5.0));
  CHECK(polar_gauge(ball, {0, 0}) == 0.0);
  CHECK(polar_gauge(ConvexBody::box({1, 1}), {0.5, 0.5}) == 1.0);
  CHECK_THROWS_AS(polar_gauge(ball, {1.0}), DimensionMismatch);
}

TEST_CASE("gauge equals support function and Euclidean norm for the unit ball") {
  std::mt19937_64 rng(7);
  const auto ball = ConvexBody::ball(3);
  for (int i = 0; i < 10000; ++i) {
    const auto x = random_vector(3, rng);
    const double euclid = std::hypot(x[0], x[1], x[2]);
    CHECK(std::abs(polar_gauge(ball, x) - euclid) <= 1e-14 * std::max(1.0, euclid));
    CHECK(polar_gauge(ball, x) == support_function(ball, x));
  }
}

TEST_CASE("gauge axioms") {
  std::mt19937_64 rng(11);
  SUBCASE("ball, 100 random pairs") {
    std::vector<std::pair<Vector, Vector>> pairs;
    for (int i = 0; i < 100; ++i) pairs.emplace_back(random_vector(2, rng), random_vector(2, rng));
    const auto r = gauge_norm_axioms_check(ConvexBody::ball(2), pairs, 1e-12);
    CHECK(r.passed());
    CHECK(r.measured.at("homogeneity_violation") <= 1e-12);
  }
  SUBCASE("cross-polytope triangle slack is exact") {
    const auto K = ConvexBody::polytope(cross_polytope_2d());
    // The gauge is the max-norm: |e1| + |e2| - |e1 + e2| = 1 + 1 - 1.
    auto r = gauge_norm_axioms_check(K, {{{1, 0}, {0, 1}}});
    CHECK(r.passed());
    CHECK(r.measured.at("min_triangle_slack") == 1.0);
    r = gauge_norm_axioms_check(K, {{{1, 0}, {2, 0}}});
    CHECK(r.passed());
    CHECK(r.measured.at("min_triangle_slack") == 0.0);
  }
  SUBCASE("random polytope, 1000 pairs, checked against boundary sampling") {
    const auto K = ConvexBody::random_polytope(2, 5, rng);
    std::vector<std::pair<Vector, Vector>> pairs;
    for (int i = 0; i < 1000; ++i) pairs.emplace_back(random_vector(2, rng), random_vector(2, rng));
    const auto r = gauge_norm_axioms_check(K, pairs, 1e-10);
    CHECK(r.passed());
    for (int i = 0; i < 50; ++i) {
      const auto x = pairs[static_cast<std::size_t>(i)].first;
      CHECK(std::abs(segment_sampled_support(K.vertices(), x) - polar_gauge(K, x)) <= 1e-10);
    }
  }
}

TEST_CASE("scaling and inclusion monotonicity") {
  std::mt19937_64 rng(3);
  const auto K = ConvexBody::random_polytope(3, 5, rng);
  const auto box = ConvexBody::box({0.5, 1.0, 2.0});
  for (double a : {0.5, 2.0, 3.7}) {
    for (int i = 0; i < 100; ++i) {
      const auto x = random_vector(3, rng);
      CHECK(std::abs(K.scaled(a).support(x) - a * K.support(x)) <= 1e-12 * std::max(1.0, a * K.support(x)));
      CHECK(std::abs(box.scaled(a).support(x) - a * box.support(x)) <= 1e-12 * std::max(1.0, a * box.support(x)));
    }
  }
  // K1's vertices are convex combinations of K2's, so K1 is inside K2.
  std::vector<Vector> inner;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i + 1 < K.vertices().size(); i += 2) {
    const double w = u(rng);
    const Vector v = w * K.vertices()[i] + (1 - w) * K.vertices()[(i + 2) % K.vertices().size()];
    inner.push_back(v);
    inner.push_back(-v);
  }
  inner.push_back(0.5 * K.vertices()[0] + 0.5 * K.vertices()[2]);
  inner.push_back(-inner.back());
  for (const auto& v : K.vertices()) {
    inner.push_back(0.9 * v);
  }
  const auto K1 = ConvexBody::polytope(inner);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_vector(3, rng);
    CHECK(K1.support(x) <= K.support(x) + 1e-12);
  }
}

TEST_CASE("polytope validation") {
  CHECK_THROWS_AS(ConvexBody::polytope({{1, 0}, {0, 1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ConvexBody::polytope({{1, 1}, {-1, -1}, {2, 2}, {-2, -2}}), std::invalid_argument);
  CHECK_THROWS_AS(ConvexBody::ball(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ConvexBody::box({1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("membership") {
  const auto cross = ConvexBody::polytope(cross_polytope_2d());
  CHECK(cross.contains({0.5, 0.5}));
  CHECK(cross.contains({0.25, -0.25}));
  CHECK_FALSE(cross.contains({0.6, 0.6}));
  CHECK(cross.contains({1.0, 0.0}));
  std::mt19937_64 rng(5);
  const auto K = ConvexBody::random_polytope(3, 6, rng);
  for (int i = 0; i < 200; ++i) CHECK(K.contains(K.sample_point(rng)));
  const auto ball = ConvexBody::ball(2, 2.0);
  for (int i = 0; i < 200; ++i) CHECK(ball.contains(ball.sample_point(rng)));
  CHECK_FALSE(ball.contains({2.0, 0.1}));
}

TEST_CASE("Lipschitz constant and inradius bound") {
  const auto cross = ConvexBody::polytope(cross_polytope_2d());
  CHECK(cross.lipschitz_constant() == 1.0);
  const double r_in = cross.inradius_lower_bound();
  CHECK(r_in <= 1.0 / std::sqrt(2.0));
  CHECK(r_in >= 1.0 / std::sqrt(2.0) - 2e-3);
  CHECK(ConvexBody::box({0.5, 2.0}).inradius_lower_bound() == 0.5);
  CHECK(ConvexBody::box({3.0, 4.0}).lipschitz_constant() == doctest::Approx(5.0));
}

TEST_CASE("support point and tie-break") {
  bool tie = true;
  auto t = ConvexBody::ball(2).support_point({3, 4}, &tie);
  CHECK_FALSE(tie);
  CHECK(t[0] == doctest::Approx(0.6));
  t = ConvexBody::box({1, 1}).support_point({1, 1}, &tie);
  CHECK(t == Vector{1, 1});
  const auto cross = ConvexBody::polytope(cross_polytope_2d());
  t = cross.support_point({1, 1}, &tie);
  CHECK(tie);
  CHECK(t == Vector{0, 1});
}

TEST_CASE("JSON") {
  std::mt19937_64 rng(9);
  for (const auto& K : {ConvexBody::ball(2, 1.5), ConvexBody::box({1, 2, 3}), ConvexBody::random_polytope(2, 4, rng)}) {
    const auto back = body_from_json(nlohmann::json(K));
    for (int i = 0; i < 20; ++i) {
      const auto x = random_vector(K.dim(), rng);
      CHECK(back.support(x) == K.support(x));
    }
  }
  try {
    body_from_json(nlohmann::json::parse(R"({"kind":"elipse","dim":2})"));
    FAIL("expected parse failure");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("body.kind") != std::string::npos);
  }
  CHECK_THROWS_AS(body_from_json(nlohmann::json::parse(R"({"kind":"box","dim":2,"params":{"half_widths":[1]}})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(body_from_json(nlohmann::json::parse(R"({"kind":"segment","dim":1})")), std::invalid_argument);
}
