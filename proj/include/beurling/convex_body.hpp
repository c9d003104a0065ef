#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <json.hpp>

#include "beurling/report.hpp"
#include "beurling/vector_ops.hpp"

namespace beurling {

/// Closed convex centrally symmetric body K in R^n, stored by shape kind.
///
/// Only the support function h_K is ever needed: the gauge of the polar body
/// K° coincides with h_K for symmetric K with 0 in its interior, so K° itself
/// is never built.
class ConvexBody {
 public:
  enum class Kind { kBall, kBox, kPolytope, kSegment };

  static ConvexBody ball(std::size_t dim, double radius = 1.0);
  static ConvexBody box(Vector half_widths);
  /// Vertex list must be closed under negation and span R^n.
  static ConvexBody polytope(std::vector<Vector> vertices);
  /// Degenerate body [-endpoint, endpoint].  Lower-dimensional, so it is
  /// only meant for the sharpness construction, never as a spectral body.
  static ConvexBody segment(Vector endpoint);

  /// Random symmetric polytope with `pairs` vertex pairs ±v.
  static ConvexBody random_polytope(std::size_t dim, std::size_t pairs, std::mt19937_64& rng);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  bool degenerate() const { return kind_ == Kind::kSegment; }
  double radius() const { return radius_; }
  const Vector& half_widths() const { return half_widths_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const Vector& segment_endpoint() const { return half_widths_; }

  /// h_K(x) = sup_{t in K} t.x
  double support(const Vector& x) const;

  /// max over Euclidean-unit u of h_K(u); Lipschitz constant of the gauge.
  double lipschitz_constant() const;

  /// Certified lower bound on min over unit u of h_K(u), i.e. on the
  /// inradius of K.  Exact for balls and boxes.
  double inradius_lower_bound() const;

  /// Membership with absolute tolerance `tol`.  Polytopes are tested by
  /// convex-combination feasibility.
  bool contains(const Vector& t, double tol = 1e-12) const;

  /// A maximizer of u.t over K.  Ties between polytope vertices resolve to
  /// the lexicographically smallest; `tie` reports whether one happened.
  Vector support_point(const Vector& u, bool* tie = nullptr) const;

  ConvexBody scaled(double a) const;

  /// Uniform-ish random point of K (not uniform in measure; convex
  /// combinations for polytopes).
  Vector sample_point(std::mt19937_64& rng) const;

 private:
  ConvexBody() = default;

  Kind kind_ = Kind::kBall;
  std::size_t dim_ = 0;
  double radius_ = 0.0;
  Vector half_widths_;
  std::vector<Vector> vertices_;
};

double support_function(const ConvexBody& K, const Vector& x);

/// ||x||_{K°} = inf{a > 0 : x in a K°}, which equals h_K(x).
double polar_gauge(const ConvexBody& K, const Vector& x);

/// Max violations of homogeneity, symmetry and the triangle inequality of
/// the polar gauge over the sample pairs.  Homogeneity is tested with the
/// scalar -2.5 and 0.3 per pair.
VerificationReport gauge_norm_axioms_check(const ConvexBody& K,
                                           const std::vector<std::pair<Vector, Vector>>& samples,
                                           double tol = 1e-10);

void to_json(nlohmann::json& j, const ConvexBody& K);
/// Parses {"kind": "ball"|"box"|"polytope", "dim": n, "params": {...}}.
/// Throws std::invalid_argument naming the offending field.
ConvexBody body_from_json(const nlohmann::json& j);

std::string to_string(ConvexBody::Kind k);

}  // namespace beurling
