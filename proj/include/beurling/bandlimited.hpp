#pragma once

#include <complex>
#include <random>
#include <vector>

#include <json.hpp>

#include "beurling/convex_body.hpp"
#include "beurling/vector_ops.hpp"

namespace beurling {

using Complex = std::complex<double>;

struct Term {
  Complex coef;
  Vector freq;
};

/// Finite exponential sum f(x) = sum_j c_j exp(i t_j.x) whose frequencies
/// all lie in the declared spectral body K.  This is the constructive
/// subclass of the Bernstein space B_K used throughout the library.
class BandlimitedFunction {
 public:
  /// Throws if a frequency falls outside `body` by more than `tol`.
  BandlimitedFunction(ConvexBody body, std::vector<Term> terms, double tol = 1e-12);

  /// Random sum with 1..max_terms terms, frequencies sampled inside `body`
  /// and complex Gaussian coefficients of scale `coef_scale`.
  static BandlimitedFunction random(const ConvexBody& body, std::size_t max_terms, double coef_scale,
                                    std::mt19937_64& rng);

  const ConvexBody& body() const { return body_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t dim() const { return body_.dim(); }

  /// sum_j |c_j|; an upper bound for ||f||_inf.
  double coefficient_l1() const { return coef_l1_; }
  double max_frequency_norm() const { return max_freq_; }
  /// L = sum|c_j| * max|t_j|, a Lipschitz constant of f.
  double gradient_bound() const { return coef_l1_ * max_freq_; }

  Complex operator()(const Vector& x) const;

 private:
  ConvexBody body_;
  std::vector<Term> terms_;
  double coef_l1_ = 0.0;
  double max_freq_ = 0.0;
};

Complex evaluate(const BandlimitedFunction& f, const Vector& x);

struct SupEstimate {
  double estimate = 0.0;
  /// The true sup over the window lies in [estimate, estimate + error_bound].
  double error_bound = 0.0;
  double nodes = 0.0;
  Vector argmax;
};

/// Default node cap for grids and point sets.
inline constexpr double kDefaultPointCap = 5e6;

/// Max of |f| over a regular grid of spacing <= grid_step.  The bracket uses
/// error_bound = L * grid_step * sqrt(n) / 2.
SupEstimate sup_norm_on_window(const BandlimitedFunction& f, const Window& window, double grid_step,
                               double cap = kDefaultPointCap);

/// Entire function sum_k c_k exp(i w_k z) of one complex variable.
class ExponentialSum1D {
 public:
  struct Mode {
    Complex coef;
    double freq;
  };

  ExponentialSum1D() = default;
  explicit ExponentialSum1D(std::vector<Mode> modes);

  const std::vector<Mode>& modes() const { return modes_; }
  /// max_k |w_k|
  double band() const { return band_; }
  double coefficient_l1() const { return coef_l1_; }

  Complex operator()(Complex z) const;
  Complex operator()(double u) const { return (*this)(Complex(u, 0.0)); }

 private:
  std::vector<Mode> modes_;
  double band_ = 0.0;
  double coef_l1_ = 0.0;
};

/// g(u) = f(base + u * direction) together with its band half-width
/// tau = max_j |t_j.direction|, certified <= ||direction||_{K°}.
struct LineRestriction {
  Vector base;
  Vector direction;
  BandlimitedFunction parent;
  ExponentialSum1D g;
  double tau = 0.0;
  double gauge_of_direction = 0.0;

  Complex operator()(double u) const { return g(u); }
};

LineRestriction restrict_to_line(const BandlimitedFunction& f, const Vector& x0, const Vector& d);

/// f(x) * prod_i cos(eps * x_i / sqrt(n)).  The multiplier equals 1 at the
/// origin and has frequencies (eps/sqrt(n)) * s, s in {-1,1}^n, all of
/// Euclidean length eps.  The declared body of the result contains K + those
/// shifts and is contained in K + eps*B.
BandlimitedFunction mollify_nd(const BandlimitedFunction& f, double eps);

/// Band growth of a line restriction caused by mollify_nd:
/// max_s |(eps/sqrt(n)) s.d| = eps * ||d||_1 / sqrt(n).
double mollifier_band_inflation(double eps, const Vector& d);

/// sin(w)/w, by Taylor series for |w| < 1e-4.
Complex sinc(Complex w);

/// z -> (1 - eps) * sinc(eps z) * f((1 - eps) z).
class LemmaMollifier {
 public:
  LemmaMollifier(ExponentialSum1D f, double eps);

  double eps() const { return eps_; }
  const ExponentialSum1D& base() const { return f_; }
  Complex operator()(Complex z) const;
  Complex operator()(double t) const { return (*this)(Complex(t, 0.0)); }

 private:
  ExponentialSum1D f_;
  double eps_;
};

/// Requires 0 < eps < 1.
LemmaMollifier mollify_1d_lemma(const ExponentialSum1D& g, double eps);
LemmaMollifier mollify_1d_lemma(const LineRestriction& g, double eps);

void to_json(nlohmann::json& j, const BandlimitedFunction& f);
BandlimitedFunction function_from_json(const nlohmann::json& j);

}  // namespace beurling
