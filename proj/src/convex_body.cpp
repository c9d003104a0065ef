#include "beurling/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "beurling/simplex.hpp"

namespace beurling {

std::string to_string(ConvexBody::Kind k) {
  switch (k) {
    case ConvexBody::Kind::kBall: return "ball";
    case ConvexBody::Kind::kBox: return "box";
    case ConvexBody::Kind::kPolytope: return "polytope";
    case ConvexBody::Kind::kSegment: return "segment";
  }
  return "unknown";
}

ConvexBody ConvexBody::ball(std::size_t dim, double radius) {
  if (dim == 0) throw std::invalid_argument("ball: dimension must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("ball: radius must be positive and finite");
  }
  ConvexBody k;
  k.kind_ = Kind::kBall;
  k.dim_ = dim;
  k.radius_ = radius;
  return k;
}

ConvexBody ConvexBody::box(Vector half_widths) {
  if (half_widths.empty()) throw std::invalid_argument("box: dimension must be positive");
  for (double h : half_widths) {
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw std::invalid_argument("box: half-widths must be positive and finite");
    }
  }
  ConvexBody k;
  k.kind_ = Kind::kBox;
  k.dim_ = half_widths.size();
  k.half_widths_ = std::move(half_widths);
  return k;
}

ConvexBody ConvexBody::polytope(std::vector<Vector> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polytope: empty vertex list");
  const std::size_t n = vertices.front().size();
  if (n == 0) throw std::invalid_argument("polytope: dimension must be positive");
  for (const auto& v : vertices) {
    require_same_dim(v.size(), n, "polytope vertex");
    if (!all_finite(v)) throw std::invalid_argument("polytope: non-finite vertex");
  }
  for (const auto& v : vertices) {
    const double tol = 1e-12 * std::max(1.0, norm_inf(v));
    const bool has_mirror = std::any_of(vertices.begin(), vertices.end(), [&](const Vector& w) {
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(v[i] + w[i]) > tol) return false;
      }
      return true;
    });
    if (!has_mirror) throw std::invalid_argument("polytope: vertex list is not centrally symmetric");
  }
  Eigen::MatrixXd m(n, vertices.size());
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vertices[j][i];
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  if (static_cast<std::size_t>(lu.rank()) < n) {
    throw std::invalid_argument("polytope: vertices do not span R^n (zero measure)");
  }
  ConvexBody k;
  k.kind_ = Kind::kPolytope;
  k.dim_ = n;
  k.vertices_ = std::move(vertices);
  return k;
}

ConvexBody ConvexBody::segment(Vector endpoint) {
  if (endpoint.empty()) throw std::invalid_argument("segment: dimension must be positive");
  if (!all_finite(endpoint) || norm2(endpoint) == 0.0) {
    throw std::invalid_argument("segment: endpoint must be finite and nonzero");
  }
  ConvexBody k;
  k.kind_ = Kind::kSegment;
  k.dim_ = endpoint.size();
  k.half_widths_ = std::move(endpoint);
  return k;
}

ConvexBody ConvexBody::random_polytope(std::size_t dim, std::size_t pairs, std::mt19937_64& rng) {
  if (pairs < dim) throw std::invalid_argument("random_polytope: need at least dim vertex pairs");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> radial(0.5, 1.5);
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vector> verts;
    verts.reserve(2 * pairs);
    for (std::size_t p = 0; p < pairs; ++p) {
      Vector v(dim);
      for (auto& c : v) c = gauss(rng);
      const double len = norm2(v);
      if (len == 0.0) continue;
      v = (radial(rng) / len) * v;
      verts.push_back(v);
      verts.push_back(-v);
    }
    try {
      return polytope(std::move(verts));
    } catch (const std::invalid_argument&) {
      // rank-deficient draw; retry
    }
  }
  throw std::runtime_error("random_polytope: could not draw a full-dimensional polytope");
}

double ConvexBody::support(const Vector& x) const {
  require_same_dim(x.size(), dim_, "support function");
  switch (kind_) {
    case Kind::kBall:
      return radius_ * norm2(x);
    case Kind::kBox: {
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) s += half_widths_[i] * std::abs(x[i]);
      return s;
    }
    case Kind::kPolytope: {
      double best = -INFINITY;
      for (const auto& v : vertices_) best = std::max(best, dot(v, x));
      return best;
    }
    case Kind::kSegment:
      return std::abs(dot(half_widths_, x));
  }
  return 0.0;
}

double ConvexBody::lipschitz_constant() const {
  switch (kind_) {
    case Kind::kBall: return radius_;
    case Kind::kBox: return norm2(half_widths_);
    case Kind::kPolytope: {
      double best = 0.0;
      for (const auto& v : vertices_) best = std::max(best, norm2(v));
      return best;
    }
    case Kind::kSegment: return norm2(half_widths_);
  }
  return 0.0;
}

double ConvexBody::inradius_lower_bound() const {
  switch (kind_) {
    case Kind::kBall: return radius_;
    case Kind::kBox: return *std::min_element(half_widths_.begin(), half_widths_.end());
    case Kind::kSegment: return 0.0;
    case Kind::kPolytope: break;
  }
  if (dim_ == 1) return std::min(support({1.0}), support({-1.0}));
  // Sample directions q/|q| for q on a grid over the surface of [-1,1]^n.
  // Every unit vector lies within step*sqrt(n-1)/2 of a sample, and h_K is
  // Lipschitz, so subtracting that slack gives a certified lower bound.
  const double step = dim_ == 2 ? 1e-3 : 1.0 / 64.0;
  const auto per_axis = static_cast<std::size_t>(std::llround(2.0 / step)) + 1;
  double best = INFINITY;
  Vector q(dim_);
  for (std::size_t face = 0; face < dim_; ++face) {
    for (double fs : {-1.0, 1.0}) {
      std::size_t total = 1;
      for (std::size_t i = 0; i + 1 < dim_; ++i) total *= per_axis;
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        for (std::size_t i = 0; i < dim_; ++i) {
          if (i == face) {
            q[i] = fs;
            continue;
          }
          q[i] = -1.0 + step * static_cast<double>(rem % per_axis);
          rem /= per_axis;
        }
        best = std::min(best, support(q) / norm2(q));
      }
    }
  }
  const double slack = lipschitz_constant() * step * std::sqrt(static_cast<double>(dim_ - 1)) / 2.0;
  return std::max(0.0, best - slack);
}

bool ConvexBody::contains(const Vector& t, double tol) const {
  require_same_dim(t.size(), dim_, "membership");
  switch (kind_) {
    case Kind::kBall:
      return norm2(t) <= radius_ + tol;
    case Kind::kBox:
      for (std::size_t i = 0; i < dim_; ++i) {
        if (std::abs(t[i]) > half_widths_[i] + tol) return false;
      }
      return true;
    case Kind::kSegment: {
      const double e2 = dot(half_widths_, half_widths_);
      const double s = dot(half_widths_, t) / e2;
      if (std::abs(s) > 1.0 + tol) return false;
      return norm2(t - s * half_widths_) <= tol;
    }
    case Kind::kPolytope:
      break;
  }
  // Cheap rejection: t.x > h_K(x) for some x certifies non-membership.
  if (dot(t, t) > support(t) + tol * norm2(t)) return false;
  for (const auto& v : vertices_) {
    if (norm_inf(t - v) <= tol) return true;
  }
  // Feasibility of t = sum l_j v_j, sum l_j = 1, l >= 0, with slack s
  // bounding |t - V l| componentwise; accept iff the minimal slack <= tol.
  const std::size_t m = vertices_.size();
  lp::Problem p;
  p.objective.assign(m + 1, 0.0);
  p.objective[m] = -1.0;  // minimize s
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<double> up(m + 1, 0.0);
    std::vector<double> dn(m + 1, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      up[j] = vertices_[j][i];
      dn[j] = -vertices_[j][i];
    }
    up[m] = -1.0;
    dn[m] = -1.0;
    p.ub_rows.push_back(up);
    p.ub_rhs.push_back(t[i]);
    p.ub_rows.push_back(dn);
    p.ub_rhs.push_back(-t[i]);
  }
  std::vector<double> sum(m + 1, 1.0);
  sum[m] = 0.0;
  p.eq_rows.push_back(sum);
  p.eq_rhs.push_back(1.0);
  const auto r = lp::solve(p);
  return r.status == lp::Status::kOptimal && -r.objective <= tol;
}

Vector ConvexBody::support_point(const Vector& u, bool* tie) const {
  require_same_dim(u.size(), dim_, "support point");
  if (tie) *tie = false;
  const double un = norm2(u);
  if (un == 0.0) throw std::invalid_argument("support_point: zero direction");
  switch (kind_) {
    case Kind::kBall:
      return (radius_ / un) * u;
    case Kind::kBox: {
      Vector t(dim_);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0.0) {
          if (tie) *tie = true;
          t[i] = -half_widths_[i];
        } else {
          t[i] = u[i] > 0 ? half_widths_[i] : -half_widths_[i];
        }
      }
      return t;
    }
    case Kind::kSegment:
      return dot(half_widths_, u) >= 0 ? half_widths_ : -half_widths_;
    case Kind::kPolytope:
      break;
  }
  const double h = support(u);
  const double tol = 1e-12 * std::max(1.0, std::abs(h));
  const Vector* best = nullptr;
  std::size_t hits = 0;
  for (const auto& v : vertices_) {
    if (dot(v, u) >= h - tol) {
      ++hits;
      if (!best || std::lexicographical_compare(v.begin(), v.end(), best->begin(), best->end())) best = &v;
    }
  }
  if (tie) *tie = hits > 1;
  return *best;
}

ConvexBody ConvexBody::scaled(double a) const {
  if (!(a > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
  ConvexBody k = *this;
  k.radius_ *= a;
  for (auto& h : k.half_widths_) h *= a;
  for (auto& v : k.vertices_) v = a * v;
  return k;
}

Vector ConvexBody::sample_point(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  switch (kind_) {
    case Kind::kBall: {
      Vector v(dim_);
      for (auto& c : v) c = gauss(rng);
      const double len = norm2(v);
      const double r = radius_ * std::pow(unit(rng), 1.0 / static_cast<double>(dim_));
      return len == 0.0 ? Vector(dim_, 0.0) : (r / len) * v;
    }
    case Kind::kBox: {
      Vector v(dim_);
      for (std::size_t i = 0; i < dim_; ++i) v[i] = half_widths_[i] * (2.0 * unit(rng) - 1.0);
      return v;
    }
    case Kind::kSegment:
      return (2.0 * unit(rng) - 1.0) * half_widths_;
    case Kind::kPolytope:
      break;
  }
  // Dirichlet(1) weights over the vertices.
  std::vector<double> w(vertices_.size());
  double s = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - unit(rng));
    s += x;
  }
  Vector t(dim_, 0.0);
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    for (std::size_t i = 0; i < dim_; ++i) t[i] += (w[j] / s) * vertices_[j][i];
  }
  return t;
}

double support_function(const ConvexBody& K, const Vector& x) { return K.support(x); }

double polar_gauge(const ConvexBody& K, const Vector& x) { return K.support(x); }

VerificationReport gauge_norm_axioms_check(const ConvexBody& K,
                                           const std::vector<std::pair<Vector, Vector>>& samples,
                                           double tol) {
  VerificationReport r;
  r.check_name = "gauge_norm_axioms";
  r.inputs = {{"body", K}, {"samples", samples.size()}, {"tolerance", tol}};
  double homog = 0.0;
  double symm = 0.0;
  double tri = 0.0;
  double min_slack = INFINITY;
  for (const auto& [x, y] : samples) {
    const double gx = polar_gauge(K, x);
    const double gy = polar_gauge(K, y);
    for (double a : {-2.5, 0.3}) {
      homog = std::max(homog, std::abs(polar_gauge(K, a * x) - std::abs(a) * gx));
    }
    symm = std::max(symm, std::abs(polar_gauge(K, -x) - gx));
    const double slack = gx + gy - polar_gauge(K, x + y);
    tri = std::max(tri, -slack);
    min_slack = std::min(min_slack, slack);
  }
  r.measured["homogeneity_violation"] = homog;
  r.measured["symmetry_violation"] = symm;
  r.measured["triangle_violation"] = std::max(0.0, tri);
  r.measured["min_triangle_slack"] = min_slack;
  r.bound["tolerance"] = tol;
  const double worst = std::max({homog, symm, std::max(0.0, tri)});
  r.finalize(tol - worst, 0.0);
  return r;
}

void to_json(nlohmann::json& j, const ConvexBody& K) {
  j = nlohmann::json{{"kind", to_string(K.kind())}, {"dim", K.dim()}};
  switch (K.kind()) {
    case ConvexBody::Kind::kBall: j["params"] = {{"radius", K.radius()}}; break;
    case ConvexBody::Kind::kBox: j["params"] = {{"half_widths", K.half_widths()}}; break;
    case ConvexBody::Kind::kPolytope: j["params"] = {{"vertices", K.vertices()}}; break;
    case ConvexBody::Kind::kSegment: j["params"] = {{"endpoint", K.segment_endpoint()}}; break;
  }
}

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument("missing field '" + path + key + "'");
  }
  return j.at(key);
}

}  // namespace

ConvexBody body_from_json(const nlohmann::json& j) {
  const auto& kind_j = field(j, "kind", "body.");
  if (!kind_j.is_string()) throw std::invalid_argument("field 'body.kind' must be a string");
  const auto kind = kind_j.get<std::string>();
  const auto& dim_j = field(j, "dim", "body.");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0) {
    throw std::invalid_argument("field 'body.dim' must be a positive integer");
  }
  const auto dim = dim_j.get<std::size_t>();
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  try {
    if (kind == "ball") {
      return ConvexBody::ball(dim, params.value("radius", 1.0));
    }
    if (kind == "box") {
      auto h = field(params, "half_widths", "body.params.").get<Vector>();
      require_same_dim(h.size(), dim, "body.params.half_widths");
      return ConvexBody::box(std::move(h));
    }
    if (kind == "polytope") {
      auto v = field(params, "vertices", "body.params.").get<std::vector<Vector>>();
      for (const auto& p : v) require_same_dim(p.size(), dim, "body.params.vertices");
      return ConvexBody::polytope(std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("field 'body.params' malformed: ") + e.what());
  }
  throw std::invalid_argument("field 'body.kind': unknown body kind '" + kind +
                              "' (expected ball, box or polytope)");
}

}  // namespace beurling
