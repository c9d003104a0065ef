#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "beurling/bandlimited.hpp"
#include "beurling/convex_body.hpp"
#include "beurling/report.hpp"
#include "beurling/sampling_set.hpp"
#include "beurling/simplex.hpp"

namespace beurling {

// ---------------------------------------------------------------------------
// Sampling constants

struct SamplingConstants {
  double c2 = 1.0;  ///< 1 / (1 - sin rho)
  double c3 = 1.0;  ///< 1 / cos rho
};

/// Requires 0 <= rho < pi/2.  Throws std::logic_error if c3 > c2.
SamplingConstants constants_compare(double rho);

/// Report with margin c2 - c3; at rho > 0 it must be strictly positive.
VerificationReport constants_report(double rho);

// ---------------------------------------------------------------------------
// Sampling inequality

struct Theorem3Options {
  double probe_step = 0.05;
  double cap = kDefaultPointCap;
  std::optional<std::uint64_t> seed;
};

/// Checks sup|f| <= (1 / cos rho_cert) * max_Lambda |f| + grid error on
/// `window`, where rho_cert is the certified covering radius of L in the
/// gauge of K°.  Throws HypothesisViolation when rho_cert >= pi/2.
VerificationReport check_theorem3(const BandlimitedFunction& f, const SamplingSet& L, const ConvexBody& K,
                                  const Window& window, double grid_step, const Theorem3Options& options = {});

enum class BodyChoice { kBall, kBox, kPolytope };

struct Theorem3Instance {
  ConvexBody body;
  BandlimitedFunction f;
  SamplingSet set;
  Window window;
  double grid_step;
  double probe_step;
};

/// Random hypothesis-valid instance: f with <= max_terms terms, a lattice or
/// jittered lattice scaled so its covering bound in the K° gauge is below
/// 1.2.
Theorem3Instance random_theorem3_instance(std::size_t dim, BodyChoice body, std::mt19937_64& rng,
                                          std::size_t max_terms = 10);

/// Same, with a caller-chosen spectral body.
Theorem3Instance random_theorem3_instance(const ConvexBody& body, std::mt19937_64& rng, std::size_t max_terms = 10,
                                          double coef_scale = 1.0);

/// `count` instances cycling dim in {1,2,3} and body in {ball, box, polytope}.
/// Hypothesis violations become skipped reports.
std::vector<VerificationReport> run_theorem3_suite(std::size_t count, std::uint64_t seed, std::size_t jobs = 1);

// ---------------------------------------------------------------------------
// Adversarial search for the sampling constant

struct AdversarialOptions {
  std::size_t polygon_sides = 32;
  std::size_t max_frequencies = 200;
  std::size_t max_points = 2000;
  double cap = kDefaultPointCap;
};

struct AdversarialResult {
  lp::Status status = lp::Status::kInfeasible;
  /// |f(x*)| / max_Lambda |f|; +inf when the LP is unbounded.
  double ratio_lower_bound = 0.0;
  double relaxed_objective = 0.0;
  /// max |f(lambda)| of the LP solution before rescaling.
  double constraint_max = 0.0;
  std::size_t points = 0;
  std::optional<BandlimitedFunction> certificate;
};

/// maximize Re f(x*) over f = sum c_j exp(i t_j.x), t_j in freq_grid,
/// subject to |f(lambda)| <= 1 on the materialized set, with each modulus
/// constraint replaced by a circumscribed polygon.  The returned ratio is
/// recomputed from the exact witness, so it is a valid lower bound for the
/// materialized constraint set.
AdversarialResult adversarial_ratio(const ConvexBody& K, const SamplingSet& L, const Vector& x_star,
                                    const std::vector<Vector>& freq_grid, const Window& window,
                                    const AdversarialOptions& options = {});

/// Frequencies 2 pi k / period in [-sigma, sigma].  With a lattice whose
/// spacing divides the period, every such f is periodic along with the set,
/// so constraints on one period bind on all of Lambda.
std::vector<Vector> periodic_frequency_grid(double sigma, double period);

struct ExtremalPoint {
  double spacing = 0.0;
  double ratio_lower_bound = 0.0;
  double theorem_bound = 0.0;  ///< 1/cos(sigma a / 2); inf at or past pi/2
  lp::Status status = lp::Status::kInfeasible;
};

/// S = [-sigma, sigma], Lambda = aZ, one period of `points_per_period`
/// points, x* = a/2.
ExtremalPoint extremal_periodic_1d(double sigma, double spacing, std::size_t points_per_period,
                                   const AdversarialOptions& options = {});

// ---------------------------------------------------------------------------
// Sharpness construction at rho = pi/2

struct Proposition1Options {
  std::optional<Window> window;           ///< default_window(n)
  std::optional<double> sheet_step;       ///< 0.05 for n <= 2, 0.2 otherwise
  std::size_t probe_points = 10000;
  std::uint64_t seed = 42;
  double cap = kDefaultPointCap;
};

struct Proposition1Result {
  Vector t0;
  Vector x0;
  bool tie_broken = false;
  BandlimitedFunction f;
  SamplingSet set;
  ConvexBody segment;
  VerificationReport report;
};

/// t0 maximizes u.t over K, x0 = (pi / (2 h_K(u))) u so that
/// ||x0||_{K°} = pi/2, f = sin(x.t0), Lambda = {x : x.t0 in pi Z} and
/// S = [-x0, x0].  The report checks f = 0 on Lambda, sup|f| ~ 1 and
/// Lambda + S = R^n on random probes.
Proposition1Result build_proposition1(const ConvexBody& K, const Vector& u, const Proposition1Options& options = {});

// ---------------------------------------------------------------------------
// Cosine minorant

/// g(u) = sum_k a_k cos(w_k u) with a_k >= 0, so g(0) = sum a_k = ||g||_inf.
struct CosineSum {
  std::vector<double> amplitudes;
  std::vector<double> freqs;

  double operator()(double u) const;
  double at_zero() const;
  ExponentialSum1D as_exponential_sum() const;

  static CosineSum random(double tau, std::size_t max_terms, std::mt19937_64& rng);
};

/// Evenly spaced points of (-pi/(2 tau) + inset, pi/(2 tau) - inset).
std::vector<double> lemma1_grid(double tau, double step, double inset = 1e-3);

/// min over u_grid of |g(u)| - g(0) cos(tau u); passes iff >= -1e-9 g(0).
/// Throws std::invalid_argument if g is not a nonnegative cosine sum with
/// band <= tau or the grid leaves (-pi/(2 tau), pi/(2 tau)).
VerificationReport check_lemma1(const CosineSum& g, double tau, const std::vector<double>& u_grid);

// ---------------------------------------------------------------------------
// Zero counting for cos z - f_eps(z)

struct RoucheOptions {
  double scan_step = 1e-3;
  double bound_slack = 1e-9;
};

/// Real f = sum_k a_k cos(w_k t + p_k) with sum|a_k| <= 1 and |w_k| <= 1.
ExponentialSum1D random_real_unit_function(std::size_t max_terms, std::mt19937_64& rng);

/// With f_eps = mollify_1d_lemma(f, eps): checks the sign pattern of
/// cos(k pi) - f_eps(k pi), counts sign changes of cos t - f_eps(t) on
/// [-N pi, N pi] (expects 2N), and the growth bound
/// |f_eps(z)| <= e^{|y|} / (eps |z|) at 8 points of the contour
/// |x| = N pi, |y| = N.
VerificationReport check_rouche_mechanics(const ExponentialSum1D& f, double eps, int N,
                                          const RoucheOptions& options = {});

// ---------------------------------------------------------------------------
// Density necessity demonstration

/// Runs extremal_periodic_1d over periods covering [-W, W] for each W in
/// `half_widths`.  Below the critical density the ratio sequence should not
/// decrease; above it the ratios must stay under 1/cos(sigma a / 2).  The
/// critical spacing a = pi / sigma is reported as skipped.
VerificationReport landau_necessity_demo(double sigma, double a,
                                         const std::vector<double>& half_widths = {10.0, 20.0, 40.0},
                                         const AdversarialOptions& options = {});

}  // namespace beurling
