#include "beurling/sampling_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace beurling {

namespace {

std::size_t generator_dim(const SamplingSet::Generator& g) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lattice>) {
          return v.offset.size();
        } else if constexpr (std::is_same_v<T, PerturbedLattice>) {
          return v.lattice.offset.size();
        } else if constexpr (std::is_same_v<T, HyperplaneLattice>) {
          return v.normal.size();
        } else {
          return v.points.empty() ? 0 : v.points.front().size();
        }
      },
      g);
}

Eigen::MatrixXd basis_matrix(const Lattice& l) {
  const auto n = static_cast<Eigen::Index>(l.offset.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = l.basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return a;
}

void validate_lattice(const Lattice& l) {
  const std::size_t n = l.offset.size();
  if (n == 0) throw std::invalid_argument("lattice: dimension must be positive");
  if (l.basis.size() != n) throw std::invalid_argument("lattice: basis must have n vectors");
  for (const auto& b : l.basis) {
    require_same_dim(b.size(), n, "lattice basis vector");
    if (!all_finite(b)) throw std::invalid_argument("lattice: non-finite basis vector");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_matrix(l));
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) throw std::invalid_argument("lattice: basis is singular");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Vector jitter_for(const std::vector<long long>& k, std::uint64_t seed, double bound) {
  std::uint64_t h = splitmix64(seed);
  for (long long c : k) h = splitmix64(h ^ static_cast<std::uint64_t>(c));
  Vector j(k.size());
  for (auto& c : j) {
    h = splitmix64(h);
    const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
    c = bound * (2.0 * u - 1.0);
  }
  return j;
}

void check_cap(double count, double cap, const char* what) {
  if (count > cap) {
    throw ResourceError(std::string(what) + ": " + std::to_string(count) + " points exceed cap " +
                        std::to_string(cap));
  }
}

/// Calls fn(k, x) for lattice points x = offset + A k whose jittered image
/// may fall in `w` (the caller filters).  Candidates are the lattice points
/// in the ball circumscribing the inflated window, enumerated level by level
/// on the triangular factor of A = QR.
template <class Fn>
void enumerate_lattice(const Lattice& l, const Window& w, double slack, double cap, Fn&& fn) {
  const std::size_t n = l.offset.size();
  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd a = basis_matrix(l);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  Eigen::VectorXd c(ni);
  double rho2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c(static_cast<Eigen::Index>(i)) = 0.5 * (w.lo[i] + w.hi[i]) - l.offset[i];
    const double h = 0.5 * (w.hi[i] - w.lo[i]) + slack;
    rho2 += h * h;
  }
  const double rho = std::sqrt(rho2) * (1.0 + 1e-9) + 1e-12;
  const Eigen::VectorXd y = qr.householderQ().transpose() * c;

  const double det = std::abs(r.diagonal().prod());
  const double ball = ball_volume(n, rho) / det;
  check_cap(ball, 8.0 * cap, "lattice enumeration");

  std::vector<long long> k(n, 0);
  std::vector<double> partial(n + 1, 0.0);  // residual^2 of levels > i
  Vector x(n);
  double visited = 0.0;
  auto recurse = [&](auto&& self, std::size_t level) -> void {
    const auto li = static_cast<Eigen::Index>(level);
    double shift = y(li);
    for (std::size_t j = level + 1; j < n; ++j) shift -= r(li, static_cast<Eigen::Index>(j)) * static_cast<double>(k[j]);
    const double room = rho * rho - partial[level + 1];
    if (room < 0.0) return;
    const double diag = r(li, li);
    const double t = std::sqrt(room);
    double lo = (shift - t) / diag, hi = (shift + t) / diag;
    if (lo > hi) std::swap(lo, hi);
    for (long long v = static_cast<long long>(std::ceil(lo)); v <= static_cast<long long>(std::floor(hi)); ++v) {
      k[level] = v;
      const double e = diag * static_cast<double>(v) - shift;
      partial[level] = partial[level + 1] + e * e;
      if (level > 0) {
        self(self, level - 1);
        continue;
      }
      if (++visited > 8.0 * cap) check_cap(visited, 8.0 * cap, "lattice enumeration");
      for (std::size_t i = 0; i < n; ++i) {
        double s = l.offset[i];
        for (std::size_t j = 0; j < n; ++j) s += l.basis[j][i] * static_cast<double>(k[j]);
        x[i] = s;
      }
      fn(static_cast<const std::vector<long long>&>(k), static_cast<const Vector&>(x));
    }
  };
  recurse(recurse, n - 1);
}

/// Uniform bucket grid over a box for nearest-point queries in a gauge.
class PointIndex {
 public:
  PointIndex(const std::vector<Vector>& pts, const Window& box) : pts_(pts), box_(box) {
    const std::size_t n = box.dim();
    double vol = 1.0;
    for (std::size_t i = 0; i < n; ++i) vol *= std::max(box.hi[i] - box.lo[i], 1e-12);
    cell_ = std::pow(2.0 * vol / static_cast<double>(std::max<std::size_t>(pts.size(), 1)), 1.0 / static_cast<double>(n));
    dims_.resize(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      dims_[i] = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((box.hi[i] - box.lo[i]) / cell_)));
      total *= dims_[i];
    }
    start_.assign(total + 1, 0);
    std::vector<std::size_t> cell_of(pts.size());
    for (std::size_t p = 0; p < pts.size(); ++p) {
      cell_of[p] = flat(cell_coords(pts[p]));
      ++start_[cell_of[p] + 1];
    }
    for (std::size_t c = 0; c < total; ++c) start_[c + 1] += start_[c];
    order_.resize(pts.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t p = 0; p < pts.size(); ++p) order_[fill[cell_of[p]]++] = p;
  }

  /// min over points of gauge(x - p), where gauge >= r_in * |.|.
  template <class Gauge>
  double nearest(const Vector& x, Gauge&& gauge, double r_in) const {
    const std::size_t n = dims_.size();
    const auto home = cell_coords(x);
    double best = std::numeric_limits<double>::infinity();
    std::size_t max_shell = 0;
    for (std::size_t i = 0; i < n; ++i) max_shell = std::max(max_shell, dims_[i]);
    std::vector<long long> off(n);
    Vector diff(n);
    for (std::size_t s = 0; s <= max_shell; ++s) {
      if (s > 0 && static_cast<double>(s - 1) * cell_ * r_in >= best) break;
      const long long ss = static_cast<long long>(s);
      std::fill(off.begin(), off.end(), -ss);
      while (true) {
        long long cheb = 0;
        bool inside = true;
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          cheb = std::max(cheb, std::llabs(off[i]));
          const long long ci = static_cast<long long>(home[i]) + off[i];
          if (ci < 0 || ci >= static_cast<long long>(dims_[i])) inside = false;
          else c[i] = static_cast<std::size_t>(ci);
        }
        if (inside && cheb == ss) {
          const std::size_t f = flat(c);
          for (std::size_t q = start_[f]; q < start_[f + 1]; ++q) {
            const Vector& p = pts_[order_[q]];
            for (std::size_t i = 0; i < n; ++i) diff[i] = x[i] - p[i];
            best = std::min(best, gauge(diff));
          }
        }
        std::size_t d = 0;
        while (d < n) {
          if (++off[d] <= ss) break;
          off[d] = -ss;
          ++d;
        }
        if (d == n) break;
      }
    }
    return best;
  }

 private:
  std::vector<std::size_t> cell_coords(const Vector& x) const {
    std::vector<std::size_t> c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double t = std::floor((x[i] - box_.lo[i]) / cell_);
      c[i] = static_cast<std::size_t>(std::clamp(t, 0.0, static_cast<double>(dims_[i] - 1)));
    }
    return c;
  }
  std::size_t flat(const std::vector<std::size_t>& c) const {
    std::size_t f = 0;
    for (std::size_t i = c.size(); i-- > 0;) f = f * dims_[i] + c[i];
    return f;
  }

  const std::vector<Vector>& pts_;
  Window box_;
  double cell_ = 1.0;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> order_;
};

}  // namespace

SamplingSet::SamplingSet(Generator gen, double window_margin)
    : gen_(std::move(gen)), margin_(window_margin), dim_(generator_dim(gen_)) {
  if (!(window_margin >= 0.0)) throw std::invalid_argument("sampling set: margin must be nonnegative");
  if (dim_ == 0) throw std::invalid_argument("sampling set: dimension must be positive");
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lattice>) {
          validate_lattice(v);
        } else if constexpr (std::is_same_v<T, PerturbedLattice>) {
          validate_lattice(v.lattice);
          if (!(v.jitter >= 0.0)) throw std::invalid_argument("perturbed lattice: jitter must be nonnegative");
        } else if constexpr (std::is_same_v<T, HyperplaneLattice>) {
          if (norm2(v.normal) == 0.0 || !all_finite(v.normal)) {
            throw std::invalid_argument("hyperplane lattice: normal must be finite and nonzero");
          }
          if (!(v.sheet_step > 0.0)) throw std::invalid_argument("hyperplane lattice: sheet_step must be positive");
        } else {
          for (const auto& p : v.points) {
            require_same_dim(p.size(), dim_, "explicit point");
            if (!all_finite(p)) throw std::invalid_argument("explicit list: non-finite point");
          }
        }
      },
      gen_);
}

SamplingSet SamplingSet::lattice(std::vector<Vector> basis, Vector offset, double margin) {
  return SamplingSet(Lattice{std::move(basis), std::move(offset)}, margin);
}

SamplingSet SamplingSet::cubic(std::size_t dim, double spacing) {
  if (!(spacing > 0.0)) throw std::invalid_argument("cubic lattice: spacing must be positive");
  std::vector<Vector> basis(dim, Vector(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i) basis[i][i] = spacing;
  return lattice(std::move(basis), Vector(dim, 0.0));
}

SamplingSet SamplingSet::hexagonal(double spacing) {
  return lattice({{spacing, 0.0}, {0.5 * spacing, 0.5 * std::sqrt(3.0) * spacing}}, {0.0, 0.0});
}

SamplingSet SamplingSet::perturbed(Lattice base, double jitter, std::uint64_t seed) {
  return SamplingSet(PerturbedLattice{std::move(base), jitter, seed});
}

SamplingSet SamplingSet::hyperplane(Vector normal, double sheet_step) {
  return SamplingSet(HyperplaneLattice{std::move(normal), sheet_step});
}

SamplingSet SamplingSet::explicit_list(std::vector<Vector> points, double margin) {
  if (points.empty()) throw std::invalid_argument("explicit list: no points");
  return SamplingSet(ExplicitList{std::move(points)}, margin);
}

SamplingSet SamplingSet::scaled(double a) const {
  if (!(a > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
  Generator g = std::visit(
      [a](const auto& v) -> Generator {
        using T = std::decay_t<decltype(v)>;
        T c = v;
        if constexpr (std::is_same_v<T, Lattice>) {
          for (auto& b : c.basis) b = a * b;
          c.offset = a * c.offset;
        } else if constexpr (std::is_same_v<T, PerturbedLattice>) {
          for (auto& b : c.lattice.basis) b = a * b;
          c.lattice.offset = a * c.lattice.offset;
          c.jitter *= a;
        } else if constexpr (std::is_same_v<T, HyperplaneLattice>) {
          // x.t in pi Z  <=>  (a x).(t/a) in pi Z
          c.normal = (1.0 / a) * c.normal;
          c.sheet_step *= a;
        } else {
          for (auto& p : c.points) p = a * p;
        }
        return c;
      },
      gen_);
  return SamplingSet(std::move(g), margin_ * a);
}

std::vector<Vector> orthonormal_complement(const Vector& normal) {
  const std::size_t n = normal.size();
  std::vector<Vector> frame{(1.0 / norm2(normal)) * normal};
  for (std::size_t e = 0; e < n && frame.size() < n; ++e) {
    Vector v(n, 0.0);
    v[e] = 1.0;
    for (const auto& f : frame) v = v - dot(f, v) * f;
    const double len = norm2(v);
    if (len < 1e-8) continue;
    frame.push_back((1.0 / len) * v);
  }
  frame.erase(frame.begin());
  return frame;
}

std::vector<Vector> SamplingSet::materialize(const Window& window, double cap) const {
  if (!window.valid()) throw std::invalid_argument("materialize: window must be bounded and nonempty");
  require_same_dim(window.dim(), dim_, "materialize");
  const Window w = window.inflated(margin_);
  std::vector<Vector> out;
  auto push = [&](const Vector& x) {
    if (!w.contains(x)) return;
    out.push_back(x);
    check_cap(static_cast<double>(out.size()), cap, "materialize");
  };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lattice>) {
          enumerate_lattice(v, w, 0.0, cap, [&](const auto&, const Vector& x) { push(x); });
        } else if constexpr (std::is_same_v<T, PerturbedLattice>) {
          enumerate_lattice(v.lattice, w, v.jitter, cap, [&](const std::vector<long long>& k, const Vector& x) {
            push(x + jitter_for(k, v.seed, v.jitter));
          });
        } else if constexpr (std::is_same_v<T, HyperplaneLattice>) {
          const double s2 = dot(v.normal, v.normal);
          double pmin = 0.0;
          double pmax = 0.0;
          for (std::size_t i = 0; i < dim_; ++i) {
            pmin += std::min(v.normal[i] * w.lo[i], v.normal[i] * w.hi[i]);
            pmax += std::max(v.normal[i] * w.lo[i], v.normal[i] * w.hi[i]);
          }
          const auto kmin = static_cast<long long>(std::ceil(pmin / std::numbers::pi));
          const auto kmax = static_cast<long long>(std::floor(pmax / std::numbers::pi));
          const auto frame = orthonormal_complement(v.normal);
          const std::size_t m = frame.size();
          for (long long k = kmin; k <= kmax; ++k) {
            const Vector anchor = (static_cast<double>(k) * std::numbers::pi / s2) * v.normal;
            double reach = 0.0;
            for (std::size_t i = 0; i < dim_; ++i) {
              const double d = std::max(std::abs(w.lo[i] - anchor[i]), std::abs(w.hi[i] - anchor[i]));
              reach += d * d;
            }
            const auto half = static_cast<long long>(std::ceil(std::sqrt(reach) / v.sheet_step));
            double per_sheet = 1.0;
            for (std::size_t i = 0; i < m; ++i) per_sheet *= static_cast<double>(2 * half + 1);
            check_cap(per_sheet, 8.0 * cap, "hyperplane sheet enumeration");
            std::vector<long long> idx(m, -half);
            while (true) {
              Vector x = anchor;
              for (std::size_t i = 0; i < m; ++i) {
                const double c = v.sheet_step * static_cast<double>(idx[i]);
                for (std::size_t j = 0; j < dim_; ++j) x[j] += c * frame[i][j];
              }
              push(x);
              std::size_t d = 0;
              while (d < m) {
                if (++idx[d] <= half) break;
                idx[d] = -half;
                ++d;
              }
              if (d == m) break;
            }
          }
        } else {
          for (const auto& p : v.points) push(p);
        }
      },
      gen_);
  return out;
}

std::optional<double> SamplingSet::covering_bound(const ConvexBody& K) const {
  require_same_dim(K.dim(), dim_, "covering_bound");
  const double n = static_cast<double>(dim_);
  return std::visit(
      [&](const auto& v) -> std::optional<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lattice>) {
          double s = 0.0;
          for (const auto& b : v.basis) s += K.support(b);
          return 0.5 * s;
        } else if constexpr (std::is_same_v<T, PerturbedLattice>) {
          double s = 0.0;
          for (const auto& b : v.lattice.basis) s += K.support(b);
          return 0.5 * s + K.lipschitz_constant() * v.jitter * std::sqrt(n);
        } else if constexpr (std::is_same_v<T, HyperplaneLattice>) {
          const double across = std::numbers::pi / (2.0 * norm2(v.normal));
          const double within = v.sheet_step * std::sqrt(n - 1.0) / 2.0;
          return K.lipschitz_constant() * std::hypot(across, within);
        } else {
          return std::nullopt;
        }
      },
      gen_);
}

CoveringResult covering_radius(const SamplingSet& L, const ConvexBody& K, const Window& window, double probe_step,
                               double cap) {
  require_same_dim(K.dim(), L.dim(), "covering_radius");
  if (!(probe_step > 0.0)) throw std::invalid_argument("covering_radius: probe_step must be positive");
  const std::size_t n = L.dim();
  const double r_in = K.inradius_lower_bound();
  if (!(r_in > 0.0)) throw std::invalid_argument("covering_radius: body has empty interior");
  const auto bound = L.covering_bound(K);

  CoveringResult res;
  res.lipschitz = K.lipschitz_constant();
  double margin = 0.0;
  if (const auto* lat = std::get_if<Lattice>(&L.generator())) {
    // The covering function is periodic; probe the bounding box of one cell.
    res.probe_window = Window{lat->offset, lat->offset};
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Vector corner = lat->offset;
      for (std::size_t j = 0; j < n; ++j) {
        if ((mask >> j) & 1U) corner = corner + lat->basis[j];
      }
      for (std::size_t i = 0; i < n; ++i) {
        res.probe_window.lo[i] = std::min(res.probe_window.lo[i], corner[i]);
        res.probe_window.hi[i] = std::max(res.probe_window.hi[i], corner[i]);
      }
    }
    margin = *bound / r_in * (1.0 + 1e-9) + 1e-12;
  } else {
    if (!window.valid()) throw std::invalid_argument("covering_radius: probe window malformed");
    require_same_dim(window.dim(), n, "covering_radius window");
    res.probe_window = window;
    margin = bound ? std::max(*bound / r_in * (1.0 + 1e-9), L.window_margin()) : L.window_margin();
  }

  const Window mat_window = res.probe_window.inflated(margin);
  const auto pts = SamplingSet(L.generator(), 0.0).materialize(mat_window, cap);
  if (pts.empty()) throw std::invalid_argument("covering_radius: empty materialization");
  res.points = pts.size();

  const Grid grid(res.probe_window, probe_step);
  if (grid.node_count() > cap) {
    throw ResourceError("covering_radius: probe grid of " + std::to_string(grid.node_count()) +
                        " nodes exceeds cap");
  }
  res.probe_nodes = grid.node_count();
  const PointIndex index(pts, mat_window);
  auto gauge = [&K](const Vector& d) { return K.support(d); };
  res.worst_probe = res.probe_window.lo;
  grid.for_each([&](const Vector& x) {
    const double g = index.nearest(x, gauge, r_in);
    if (g > res.rho_estimate) {
      res.rho_estimate = g;
      res.worst_probe = x;
    }
  });
  const double reach = std::max(1.0, std::sqrt(static_cast<double>(n)) / 2.0);
  res.rho_upper_certificate = res.rho_estimate + probe_step * reach * res.lipschitz;
  // Any point outside the materialization window is at gauge distance at
  // least r_in * margin from every probe point, so each probed distance up
  // to that level is exact.
  if (res.rho_estimate > r_in * margin) {
    throw ProbeWindowError("covering_radius: probed radius " + std::to_string(res.rho_estimate) +
                           " exceeds what margin " + std::to_string(margin) +
                           " can guarantee; enlarge the set's window margin");
  }
  return res;
}

Window default_window(std::size_t dim) { return Window::cube(dim, dim <= 2 ? 20.0 : 8.0); }

double ball_volume(std::size_t dim, double r) {
  const double n = static_cast<double>(dim);
  return std::pow(r, n) * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

std::vector<DensityEstimate> lower_uniform_density(const SamplingSet& L, const std::vector<double>& radii,
                                                   std::size_t center_samples, std::uint64_t seed,
                                                   std::optional<Window> window, double cap) {
  if (radii.empty()) throw std::invalid_argument("lower_uniform_density: no radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && radii[i] <= radii[i - 1])) {
      throw std::invalid_argument("lower_uniform_density: radii must be positive and increasing");
    }
  }
  const std::size_t n = L.dim();
  const Window w = window.value_or(default_window(n));
  require_same_dim(w.dim(), n, "lower_uniform_density window");
  const double rmax = radii.back();
  Window centers_box = w.inflated(-rmax);
  if (!centers_box.valid()) {
    throw std::invalid_argument("lower_uniform_density: window too small for largest radius " + std::to_string(rmax));
  }
  const auto pts = SamplingSet(L.generator(), 0.0).materialize(w, cap);

  std::vector<Vector> centers;
  std::mt19937_64 rng(seed);
  for (std::size_t c = 0; c < center_samples; ++c) {
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::uniform_real_distribution<double>(centers_box.lo[i], centers_box.hi[i])(rng);
    }
    centers.push_back(std::move(x));
  }
  std::size_t grid_count = 1;
  for (std::size_t i = 0; i < n; ++i) grid_count *= 3;
  for (std::size_t g = 0; g < grid_count; ++g) {
    Vector x(n);
    std::size_t rem = g;
    for (std::size_t i = 0; i < n; ++i, rem /= 3) {
      x[i] = centers_box.lo[i] + 0.5 * static_cast<double>(rem % 3) * (centers_box.hi[i] - centers_box.lo[i]);
    }
    centers.push_back(std::move(x));
  }

  std::vector<DensityEstimate> out;
  for (double r : radii) {
    DensityEstimate est;
    est.r = r;
    est.min_count = std::numeric_limits<std::size_t>::max();
    const double r2 = r * r;
    for (const auto& c : centers) {
      std::size_t count = 0;
      for (const auto& p : pts) {
        double d2 = 0.0;
        for (std::size_t i = 0; i < n && d2 <= r2; ++i) d2 += (p[i] - c[i]) * (p[i] - c[i]);
        if (d2 <= r2) ++count;
      }
      if (count < est.min_count) {
        est.min_count = count;
        est.worst_center = c;
      }
    }
    est.density = static_cast<double>(est.min_count) / ball_volume(n, r);
    out.push_back(std::move(est));
  }
  return out;
}

NyquistVerdict nyquist_check_1d(double sigma, double density) {
  if (!(sigma > 0.0)) throw std::invalid_argument("nyquist_check_1d: sigma must be positive");
  NyquistVerdict v;
  v.critical_density = (2.0 * sigma) / (2.0 * std::numbers::pi);
  v.margin = density - v.critical_density;
  v.sampling_predicted = density > v.critical_density;
  return v;
}

void to_json(nlohmann::json& j, const SamplingSet& s) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Lattice>) {
          j = {{"kind", "lattice"}, {"basis", v.basis}, {"offset", v.offset}};
        } else if constexpr (std::is_same_v<T, PerturbedLattice>) {
          j = {{"kind", "perturbed_lattice"},
               {"basis", v.lattice.basis},
               {"offset", v.lattice.offset},
               {"jitter", v.jitter},
               {"seed", v.seed}};
        } else if constexpr (std::is_same_v<T, HyperplaneLattice>) {
          j = {{"kind", "hyperplane_lattice"}, {"normal", v.normal}, {"sheet_step", v.sheet_step}};
        } else {
          j = {{"kind", "explicit"}, {"points", v.points}};
        }
      },
      s.generator());
  j["dim"] = s.dim();
  j["margin"] = s.window_margin();
}

namespace {

Lattice lattice_from_json(const nlohmann::json& j) {
  if (j.contains("basis")) {
    Lattice l{j.at("basis").get<std::vector<Vector>>(), {}};
    l.offset = j.value("offset", Vector(l.basis.size(), 0.0));
    return l;
  }
  if (!j.contains("spacing") || !j.contains("dim")) {
    throw std::invalid_argument("field 'set.basis' missing (or give 'set.dim' and 'set.spacing')");
  }
  const auto n = j.at("dim").get<std::size_t>();
  const auto a = j.at("spacing").get<double>();
  const auto cubic = SamplingSet::cubic(n, a);
  Lattice l = std::get<Lattice>(cubic.generator());
  if (j.contains("offset")) l.offset = j.at("offset").get<Vector>();
  return l;
}

}  // namespace

SamplingSet set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument("missing field 'set.kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  const double margin = j.value("margin", 0.0);
  try {
    if (kind == "lattice") return SamplingSet(lattice_from_json(j), margin);
    if (kind == "hexagonal") return SamplingSet::hexagonal(j.value("spacing", 1.0));
    if (kind == "perturbed_lattice") {
      return SamplingSet(PerturbedLattice{lattice_from_json(j), j.value("jitter", 0.0), j.value("seed", 42ULL)},
                         margin);
    }
    if (kind == "hyperplane_lattice") {
      if (!j.contains("normal")) throw std::invalid_argument("missing field 'set.normal'");
      return SamplingSet(HyperplaneLattice{j.at("normal").get<Vector>(), j.value("sheet_step", 0.5)}, margin);
    }
    if (kind == "explicit") {
      if (!j.contains("points")) throw std::invalid_argument("missing field 'set.points'");
      return SamplingSet::explicit_list(j.at("points").get<std::vector<Vector>>(), margin);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("field 'set' malformed: " + std::string(e.what()));
  }
  throw std::invalid_argument("field 'set.kind': unknown set kind '" + kind + "'");
}

std::vector<Vector> read_points_csv(std::istream& in) {
  std::vector<Vector> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Vector p;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        p.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw std::invalid_argument("points csv line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    if (!pts.empty() && p.size() != pts.front().size()) {
      throw std::invalid_argument("points csv line " + std::to_string(lineno) + ": inconsistent dimension");
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace beurling
