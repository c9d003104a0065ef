#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "beurling/errors.hpp"

namespace beurling {

/// Point or frequency in R^n.
using Vector = std::vector<double>;

inline double dot(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vector& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

inline double norm1(const Vector& a) {
  double s = 0.0;
  for (double v : a) s += std::abs(v);
  return s;
}

inline double norm_inf(const Vector& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

inline Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "vector add");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a.size(), b.size(), "vector sub");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Vector operator*(double s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline bool all_finite(const Vector& a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

/// Axis-aligned box [lo, hi] in R^n.
struct Window {
  Vector lo;
  Vector hi;

  static Window cube(std::size_t dim, double half_width) {
    return {Vector(dim, -half_width), Vector(dim, half_width)};
  }
  static Window centered(const Vector& center, double half_width) {
    Window w{center, center};
    for (std::size_t i = 0; i < center.size(); ++i) {
      w.lo[i] -= half_width;
      w.hi[i] += half_width;
    }
    return w;
  }

  std::size_t dim() const { return lo.size(); }

  bool valid() const {
    if (lo.size() != hi.size() || lo.empty()) return false;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!(lo[i] <= hi[i]) || !std::isfinite(lo[i]) || !std::isfinite(hi[i])) return false;
    }
    return true;
  }

  Window inflated(double margin) const {
    Window w = *this;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      w.lo[i] -= margin;
      w.hi[i] += margin;
    }
    return w;
  }

  Window scaled(double a) const {
    Window w = *this;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      w.lo[i] *= a;
      w.hi[i] *= a;
    }
    return w;
  }

  bool contains(const Vector& x, double tol = 0.0) const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (x[i] < lo[i] - tol || x[i] > hi[i] + tol) return false;
    }
    return true;
  }

  /// Euclidean distance from x (assumed inside) to the box boundary.
  double inner_distance(const Vector& x) const {
    double d = INFINITY;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      d = std::min(d, std::min(x[i] - lo[i], hi[i] - x[i]));
    }
    return d;
  }
};

/// Regular grid covering a window with per-axis spacing at most `step`.
/// Nodes include both endpoints of every axis.
class Grid {
 public:
  Grid(const Window& w, double step) : window_(w) {
    counts_.resize(w.dim());
    spacing_.resize(w.dim());
    total_ = 1;
    for (std::size_t i = 0; i < w.dim(); ++i) {
      double len = w.hi[i] - w.lo[i];
      std::size_t k = len <= 0.0 ? 1 : static_cast<std::size_t>(std::ceil(len / step - 1e-12)) + 1;
      counts_[i] = k;
      spacing_[i] = k > 1 ? len / static_cast<double>(k - 1) : 0.0;
      total_ = total_ * static_cast<double>(k);
    }
  }

  /// Node count as a double so callers can compare against caps before
  /// anything overflows.
  double node_count() const { return total_; }
  const std::vector<std::size_t>& counts() const { return counts_; }
  const Vector& spacing() const { return spacing_; }

  /// Largest Euclidean distance from a window point to its nearest node.
  double covering_distance() const {
    double s = 0.0;
    for (double h : spacing_) s += 0.25 * h * h;
    return std::sqrt(s);
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    const std::size_t n = counts_.size();
    std::vector<std::size_t> idx(n, 0);
    Vector x(window_.lo);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = idx[i] + 1 == counts_[i] && counts_[i] > 1 ? window_.hi[i]
                                                           : window_.lo[i] + spacing_[i] * static_cast<double>(idx[i]);
      }
      fn(static_cast<const Vector&>(x));
      std::size_t d = 0;
      while (d < n) {
        if (++idx[d] < counts_[d]) break;
        idx[d] = 0;
        ++d;
      }
      if (d == n) return;
    }
  }

 private:
  Window window_;
  std::vector<std::size_t> counts_;
  Vector spacing_;
  double total_ = 0.0;
};

}  // namespace beurling
