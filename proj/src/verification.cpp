#include "beurling/verification.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace beurling {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

// ---------------------------------------------------------------------------

SamplingConstants constants_compare(double rho) {
  if (!(rho >= 0.0 && rho < kHalfPi)) {
    throw std::invalid_argument("constants_compare: rho must lie in [0, pi/2)");
  }
  SamplingConstants c{1.0 / (1.0 - std::sin(rho)), 1.0 / std::cos(rho)};
  if (c.c3 > c.c2) throw std::logic_error("constants_compare: 1/cos(rho) exceeds 1/(1 - sin(rho))");
  return c;
}

VerificationReport constants_report(double rho) {
  VerificationReport r;
  r.check_name = "constants";
  r.inputs = {{"rho", rho}};
  const auto c = constants_compare(rho);
  r.measured["c3"] = c.c3;
  r.bound["c2"] = c.c2;
  // Equality is allowed only at rho = 0; elsewhere the gap must exceed 1e-12.
  const double gap = c.c2 - c.c3;
  r.finalize(rho == 0.0 ? gap : gap - 1e-12, 0.0);
  if (rho > 0.0 && r.passed() && !(gap > 1e-12)) r.status = CheckStatus::kFailed;
  return r;
}

// ---------------------------------------------------------------------------

VerificationReport check_theorem3(const BandlimitedFunction& f, const SamplingSet& L, const ConvexBody& K,
                                  const Window& window, double grid_step, const Theorem3Options& options) {
  require_same_dim(f.dim(), K.dim(), "check_theorem3 body");
  require_same_dim(L.dim(), K.dim(), "check_theorem3 set");
  for (const auto& t : f.terms()) {
    if (!K.contains(t.freq, 1e-12)) throw std::invalid_argument("check_theorem3: spectrum of f is not inside K");
  }
  VerificationReport r;
  r.check_name = "theorem3";
  r.inputs = {{"body", K}, {"set", L}, {"function", f}, {"window", {{"lo", window.lo}, {"hi", window.hi}}},
              {"grid_step", grid_step}, {"probe_step", options.probe_step}};
  if (options.seed) r.inputs["seed"] = *options.seed;

  const auto cov = covering_radius(L, K, window, options.probe_step, options.cap);
  r.measured["rho_estimate"] = cov.rho_estimate;
  r.measured["rho_cert"] = cov.rho_upper_certificate;
  if (cov.rho_upper_certificate >= kHalfPi) {
    throw HypothesisViolation("check_theorem3: certified covering radius " +
                              std::to_string(cov.rho_upper_certificate) + " is not below pi/2");
  }
  const double constant = 1.0 / std::cos(cov.rho_upper_certificate);

  const auto sup = sup_norm_on_window(f, window, grid_step, options.cap);
  const double reach = cov.rho_upper_certificate / K.inradius_lower_bound();
  const auto pts = SamplingSet(L.generator(), 0.0).materialize(window.inflated(reach), options.cap);
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, std::abs(f(p)));

  r.measured["sup_estimate"] = sup.estimate;
  r.measured["sample_max"] = m;
  r.measured["ratio"] = m > 0.0 ? sup.estimate / m : std::numeric_limits<double>::infinity();
  r.measured["lambda_points"] = static_cast<double>(pts.size());
  r.bound["constant"] = constant;
  r.bound["constant_times_sample_max"] = constant * m;
  r.finalize(constant * m - sup.estimate, sup.error_bound);
  return r;
}

Theorem3Instance random_theorem3_instance(std::size_t dim, BodyChoice choice, std::mt19937_64& rng,
                                          std::size_t max_terms) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto body = [&]() -> ConvexBody {
    switch (choice) {
      case BodyChoice::kBall: return ConvexBody::ball(dim, 0.5 + unit(rng));
      case BodyChoice::kBox: {
        Vector h(dim);
        for (auto& x : h) x = 0.5 + unit(rng);
        return ConvexBody::box(std::move(h));
      }
      case BodyChoice::kPolytope: return ConvexBody::random_polytope(dim, dim + 2, rng);
    }
    throw std::invalid_argument("unknown body choice");
  }();
  return random_theorem3_instance(body, rng, max_terms, 1.0);
}

Theorem3Instance random_theorem3_instance(const ConvexBody& body, std::mt19937_64& rng, std::size_t max_terms,
                                          double coef_scale) {
  const std::size_t dim = body.dim();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto f = BandlimitedFunction::random(body, max_terms, coef_scale, rng);

  const double half = dim == 1 ? 30.0 : (dim == 2 ? 8.0 : 3.0);
  const double grid_step = dim == 1 ? 0.01 : (dim == 2 ? 0.04 : 0.1);
  // Thin bodies with dense lattices would need more points than the default
  // cap allows once the window is inflated by bound / r_in; redraw those.
  constexpr double kPointBudget = 1e6;
  const double r_in = body.inradius_lower_bound();

  std::vector<Vector> basis;
  Vector offset(dim);
  bool jittered = false;
  double jitter = 0.0;
  while (true) {
    basis.assign(dim, Vector(dim, 0.0));
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t i = 0; i < dim; ++i) basis[j][i] = (i == j ? 1.0 : 0.0) + 0.35 * gauss(rng);
    }
    for (auto& x : offset) x = unit(rng) - 0.5;
    jittered = unit(rng) < 0.5;
    const double target = 0.2 + unit(rng);
    Eigen::MatrixXd a(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = basis[j][i];
    if (Eigen::FullPivLU<Eigen::MatrixXd>(a).rank() < static_cast<Eigen::Index>(dim)) continue;

    double min_len = std::numeric_limits<double>::infinity();
    double support_sum = 0.0;
    for (const auto& b : basis) {
      min_len = std::min(min_len, norm2(b));
      support_sum += body.support(b);
    }
    jitter = jittered ? 0.1 * min_len : 0.0;
    const double bound0 = 0.5 * support_sum + body.lipschitz_constant() * jitter * std::sqrt(static_cast<double>(dim));
    const double scale = target / bound0;
    const double det = std::abs(a.determinant()) * std::pow(scale, static_cast<double>(dim));
    const double side = 2.0 * (half + target / r_in + 1.0);
    if (std::pow(side, static_cast<double>(dim)) / det > kPointBudget) continue;
    for (auto& b : basis) b = scale * b;
    offset = scale * offset;
    jitter *= scale;
    break;
  }
  const std::uint64_t jitter_seed = rng();

  Lattice lat{basis, offset};
  double probe_step = 0.0;
  if (jittered) {
    probe_step = dim == 1 ? 0.01 : (dim == 2 ? 0.08 : 0.2);
  } else {
    double extent = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      double s = 0.0;
      for (const auto& b : basis) s += std::abs(b[i]);
      extent = std::max(extent, s);
    }
    probe_step = extent / (dim == 3 ? 24.0 : 60.0);
  }
  SamplingSet set = jittered ? SamplingSet::perturbed(lat, jitter, jitter_seed) : SamplingSet(lat);
  return {body, std::move(f), std::move(set), Window::cube(dim, half), grid_step, probe_step};
}

std::vector<VerificationReport> run_theorem3_suite(std::size_t count, std::uint64_t seed, std::size_t jobs) {
  std::mt19937_64 rng(seed);
  std::vector<Theorem3Instance> instances;
  instances.reserve(count);
  constexpr BodyChoice kBodies[] = {BodyChoice::kBall, BodyChoice::kBox, BodyChoice::kPolytope};
  for (std::size_t i = 0; i < count; ++i) {
    instances.push_back(random_theorem3_instance(1 + i % 3, kBodies[(i / 3) % 3], rng));
  }
  std::vector<VerificationReport> out(count);
  auto run_one = [&](std::size_t i) {
    const auto& inst = instances[i];
    Theorem3Options opt;
    opt.probe_step = inst.probe_step;
    opt.seed = seed;
    try {
      out[i] = check_theorem3(inst.f, inst.set, inst.body, inst.window, inst.grid_step, opt);
    } catch (const HypothesisViolation& e) {
      VerificationReport r;
      r.check_name = "theorem3";
      r.inputs = {{"seed", seed}, {"instance", i}};
      r.skip(e.what());
      out[i] = r;
    }
    out[i].inputs["instance"] = i;
  };
  jobs = std::max<std::size_t>(1, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) run_one(i);
  } else {
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < count; i += jobs) run_one(i);
      }));
    }
    for (auto& f : workers) f.get();
  }
  return out;
}

// ---------------------------------------------------------------------------

AdversarialResult adversarial_ratio(const ConvexBody& K, const SamplingSet& L, const Vector& x_star,
                                    const std::vector<Vector>& freq_grid, const Window& window,
                                    const AdversarialOptions& options) {
  require_same_dim(L.dim(), K.dim(), "adversarial_ratio set");
  require_same_dim(x_star.size(), K.dim(), "adversarial_ratio x*");
  if (freq_grid.empty()) throw std::invalid_argument("adversarial_ratio: empty frequency grid");
  if (freq_grid.size() > options.max_frequencies) {
    throw ResourceError("adversarial_ratio: " + std::to_string(freq_grid.size()) + " frequencies exceed cap " +
                        std::to_string(options.max_frequencies));
  }
  for (const auto& t : freq_grid) {
    require_same_dim(t.size(), K.dim(), "adversarial_ratio frequency");
    if (!K.contains(t, 1e-12)) throw std::invalid_argument("adversarial_ratio: frequency outside K");
  }
  if (!window.contains(x_star)) throw std::invalid_argument("adversarial_ratio: x* outside window");
  if (options.polygon_sides < 3) throw std::invalid_argument("adversarial_ratio: polygon needs >= 3 sides");
  const auto pts = L.materialize(window, options.cap);
  if (pts.size() > options.max_points) {
    throw ResourceError("adversarial_ratio: " + std::to_string(pts.size()) + " constraint points exceed cap " +
                        std::to_string(options.max_points));
  }

  const std::size_t F = freq_grid.size();
  const std::size_t m = options.polygon_sides;
  // Columns per frequency: a+, a-, b+, b-  with c = a + i b.
  lp::Problem p;
  p.objective.assign(4 * F, 0.0);
  for (std::size_t j = 0; j < F; ++j) {
    const double th = dot(freq_grid[j], x_star);
    const double c = std::cos(th);
    const double s = std::sin(th);
    p.objective[4 * j + 0] = c;
    p.objective[4 * j + 1] = -c;
    p.objective[4 * j + 2] = -s;
    p.objective[4 * j + 3] = s;
  }
  for (const auto& lam : pts) {
    std::vector<double> theta(F);
    for (std::size_t j = 0; j < F; ++j) theta[j] = dot(freq_grid[j], lam);
    for (std::size_t k = 0; k < m; ++k) {
      const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
      std::vector<double> row(4 * F);
      for (std::size_t j = 0; j < F; ++j) {
        const double c = std::cos(theta[j] - phi);
        const double s = std::sin(theta[j] - phi);
        row[4 * j + 0] = c;
        row[4 * j + 1] = -c;
        row[4 * j + 2] = -s;
        row[4 * j + 3] = s;
      }
      p.ub_rows.push_back(std::move(row));
      p.ub_rhs.push_back(1.0);
    }
  }

  AdversarialResult res;
  res.points = pts.size();
  const auto sol = lp::solve(p);
  res.status = sol.status;
  if (sol.status == lp::Status::kUnbounded) {
    res.ratio_lower_bound = std::numeric_limits<double>::infinity();
    return res;
  }
  if (sol.status != lp::Status::kOptimal) return res;
  res.relaxed_objective = sol.objective;

  std::vector<Term> terms;
  for (std::size_t j = 0; j < F; ++j) {
    const Complex c(sol.x[4 * j] - sol.x[4 * j + 1], sol.x[4 * j + 2] - sol.x[4 * j + 3]);
    if (c != Complex(0.0, 0.0)) terms.push_back({c, freq_grid[j]});
  }
  BandlimitedFunction witness(K, std::move(terms));
  double cmax = 0.0;
  for (const auto& lam : pts) cmax = std::max(cmax, std::abs(witness(lam)));
  res.constraint_max = cmax;
  const double peak = std::abs(witness(x_star));
  res.ratio_lower_bound = cmax > 0.0 ? peak / cmax : (peak > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  res.certificate = std::move(witness);
  return res;
}

std::vector<Vector> periodic_frequency_grid(double sigma, double period) {
  if (!(sigma > 0.0) || !(period > 0.0)) throw std::invalid_argument("periodic_frequency_grid: bad arguments");
  const double unit = 2.0 * kPi / period;
  const auto kmax = static_cast<long long>(std::floor(sigma / unit * (1.0 + 1e-12)));
  std::vector<Vector> out;
  for (long long k = -kmax; k <= kmax; ++k) {
    out.push_back({std::clamp(unit * static_cast<double>(k), -sigma, sigma)});
  }
  return out;
}

ExtremalPoint extremal_periodic_1d(double sigma, double spacing, std::size_t points_per_period,
                                   const AdversarialOptions& options) {
  if (!(spacing > 0.0) || points_per_period == 0) throw std::invalid_argument("extremal_periodic_1d: bad arguments");
  const double period = spacing * static_cast<double>(points_per_period);
  const auto K = ConvexBody::ball(1, sigma);
  const auto L = SamplingSet::cubic(1, spacing);
  const Window w{{0.0}, {period - 0.5 * spacing}};
  const auto res = adversarial_ratio(K, L, {0.5 * spacing}, periodic_frequency_grid(sigma, period), w, options);
  ExtremalPoint pt;
  pt.spacing = spacing;
  pt.ratio_lower_bound = res.ratio_lower_bound;
  pt.status = res.status;
  const double rho = 0.5 * sigma * spacing;
  pt.theorem_bound = rho < kHalfPi ? 1.0 / std::cos(rho) : std::numeric_limits<double>::infinity();
  return pt;
}

// ---------------------------------------------------------------------------

Proposition1Result build_proposition1(const ConvexBody& K, const Vector& u, const Proposition1Options& options) {
  require_same_dim(u.size(), K.dim(), "build_proposition1");
  if (norm2(u) == 0.0) throw std::invalid_argument("build_proposition1: zero direction");
  const std::size_t n = K.dim();
  bool tie = false;
  Vector t0 = K.support_point(u, &tie);
  const double h = K.support(u);
  Vector x0 = (kPi / (2.0 * h)) * u;

  BandlimitedFunction f(K, {{Complex(0.0, -0.5), t0}, {Complex(0.0, 0.5), -t0}}, 1e-12);
  const double step = options.sheet_step.value_or(n <= 2 ? 0.05 : 0.2);
  SamplingSet set = SamplingSet::hyperplane(t0, step);
  ConvexBody segment = ConvexBody::segment(x0);

  VerificationReport r;
  r.check_name = "proposition1";
  r.inputs = {{"body", K}, {"direction", u}, {"sheet_step", step}, {"seed", options.seed}};
  r.measured["gauge_x0"] = polar_gauge(K, x0);
  r.measured["x0_dot_t0"] = dot(x0, t0);
  r.measured["tie_broken"] = tie ? 1.0 : 0.0;

  // (a) f vanishes on the materialized set.
  const Window w = options.window.value_or(default_window(n));
  const auto pts = set.materialize(w, options.cap);
  double on_lambda = 0.0;
  for (const auto& p : pts) on_lambda = std::max(on_lambda, std::abs(f(p)));
  r.measured["lambda_points"] = static_cast<double>(pts.size());
  r.measured["max_abs_on_lambda"] = on_lambda;

  // (b) sup estimate on a grid centered at x0, where sin(x.t0) = 1.
  const auto sup = sup_norm_on_window(f, Window::centered(x0, 1.0), 0.05, options.cap);
  r.measured["sup_estimate"] = sup.estimate;

  // (c) Lambda + S = R^n: y.t0 = k pi - s pi/2 with |s| <= 1, then
  // lambda = y + s x0 lies on sheet k and y - lambda = -s x0 is in S.
  std::mt19937_64 rng(options.seed);
  std::size_t covered = 0;
  double worst_residual = 0.0;
  for (std::size_t i = 0; i < options.probe_points; ++i) {
    Vector y(n);
    for (std::size_t d = 0; d < n; ++d) y[d] = std::uniform_real_distribution<double>(w.lo[d], w.hi[d])(rng);
    const double q = dot(y, t0) / kPi;
    const double k = std::round(q);
    const double s = 2.0 * (k - q);
    const Vector lam = y + s * x0;
    const double residual = std::abs(dot(lam, t0) - k * kPi);
    worst_residual = std::max(worst_residual, residual);
    const bool in_segment = segment.contains(y - lam, 1e-9 * std::max(1.0, norm2(x0)));
    if (std::abs(s) <= 1.0 && residual <= 1e-9 * std::max(1.0, std::abs(k * kPi)) && in_segment) ++covered;
  }
  const double frac = options.probe_points ? static_cast<double>(covered) / static_cast<double>(options.probe_points) : 0.0;
  r.measured["covered_fraction"] = frac;
  r.measured["covering_residual"] = worst_residual;
  r.bound["max_abs_on_lambda"] = 1e-12;
  r.bound["sup_estimate_min"] = 1.0 - 1e-6;
  r.bound["covered_fraction"] = 1.0;
  r.finalize(std::min({1e-12 - on_lambda, sup.estimate - (1.0 - 1e-6), frac - 1.0}), 0.0);
  if (tie) r.note = "support point not unique; lexicographically smallest chosen";

  return {std::move(t0), std::move(x0), tie, std::move(f), std::move(set), std::move(segment), std::move(r)};
}

// ---------------------------------------------------------------------------

double CosineSum::operator()(double u) const {
  double s = 0.0;
  for (std::size_t k = 0; k < amplitudes.size(); ++k) s += amplitudes[k] * std::cos(freqs[k] * u);
  return s;
}

double CosineSum::at_zero() const {
  double s = 0.0;
  for (double a : amplitudes) s += a;
  return s;
}

ExponentialSum1D CosineSum::as_exponential_sum() const {
  std::vector<ExponentialSum1D::Mode> modes;
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    modes.push_back({Complex(0.5 * amplitudes[k], 0.0), freqs[k]});
    modes.push_back({Complex(0.5 * amplitudes[k], 0.0), -freqs[k]});
  }
  return ExponentialSum1D(std::move(modes));
}

CosineSum CosineSum::random(double tau, std::size_t max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CosineSum g;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    g.amplitudes.push_back(unit(rng));
    g.freqs.push_back(tau * (2.0 * unit(rng) - 1.0));
  }
  return g;
}

std::vector<double> lemma1_grid(double tau, double step, double inset) {
  if (!(tau > 0.0) || !(step > 0.0)) throw std::invalid_argument("lemma1_grid: tau and step must be positive");
  const double edge = kHalfPi / tau - inset;
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor(2.0 * edge / step)) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back(-edge + step * static_cast<double>(i));
  return out;
}

VerificationReport check_lemma1(const CosineSum& g, double tau, const std::vector<double>& u_grid) {
  if (!(tau > 0.0)) throw std::invalid_argument("check_lemma1: tau must be positive");
  if (g.amplitudes.size() != g.freqs.size() || g.amplitudes.empty()) {
    throw std::invalid_argument("check_lemma1: malformed cosine sum");
  }
  for (std::size_t k = 0; k < g.amplitudes.size(); ++k) {
    if (!(g.amplitudes[k] >= 0.0)) throw std::invalid_argument("check_lemma1: negative cosine amplitude");
    if (!(std::abs(g.freqs[k]) <= tau)) throw std::invalid_argument("check_lemma1: frequency exceeds tau");
  }
  const double edge = kHalfPi / tau;
  for (double u : u_grid) {
    if (!(std::abs(u) < edge)) throw std::invalid_argument("check_lemma1: grid point outside (-pi/2tau, pi/2tau)");
  }
  VerificationReport r;
  r.check_name = "lemma1";
  r.inputs = {{"tau", tau}, {"terms", g.amplitudes.size()}, {"grid_points", u_grid.size()}};
  const double g0 = g.at_zero();
  double margin = std::numeric_limits<double>::infinity();
  double worst_u = 0.0;
  for (double u : u_grid) {
    const double m = std::abs(g(u)) - g0 * std::cos(tau * u);
    if (m < margin) {
      margin = m;
      worst_u = u;
    }
  }
  r.measured["g0"] = g0;
  r.measured["min_margin"] = margin;
  r.measured["worst_u"] = worst_u;
  r.bound["tolerance"] = 1e-9 * g0;
  r.finalize(margin, 1e-9 * g0);
  return r;
}

// ---------------------------------------------------------------------------

ExponentialSum1D random_real_unit_function(std::size_t max_terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t k = count(rng);
  std::vector<double> amp(k);
  double total = 0.0;
  for (auto& a : amp) {
    a = unit(rng);
    total += a;
  }
  const double scale = (0.5 + 0.5 * unit(rng)) / total;
  std::vector<ExponentialSum1D::Mode> modes;
  for (std::size_t i = 0; i < k; ++i) {
    const double w = 2.0 * unit(rng) - 1.0;
    const double phase = 2.0 * kPi * unit(rng);
    const Complex half = 0.5 * scale * amp[i] * Complex(std::cos(phase), std::sin(phase));
    modes.push_back({half, w});
    modes.push_back({std::conj(half), -w});
  }
  return ExponentialSum1D(std::move(modes));
}

VerificationReport check_rouche_mechanics(const ExponentialSum1D& f, double eps, int N, const RoucheOptions& options) {
  if (N < 1) throw std::invalid_argument("check_rouche_mechanics: N must be positive");
  const double span = N * kPi;
  for (int i = 0; i <= 256; ++i) {
    const double t = -span + 2.0 * span * i / 256.0;
    if (std::abs(f(t).imag()) > 1e-12) throw std::invalid_argument("check_rouche_mechanics: f is not real on R");
  }
  if (f.band() > 1.0 + 1e-12) throw HypothesisViolation("check_rouche_mechanics: band of f exceeds [-1, 1]");
  const double norm_bound = f.coefficient_l1();
  if (norm_bound > 1.0 + 1e-12) throw HypothesisViolation("check_rouche_mechanics: cannot certify ||f|| <= 1");
  const auto fe = mollify_1d_lemma(f, eps);

  VerificationReport r;
  r.check_name = "rouche";
  r.inputs = {{"eps", eps}, {"N", N}, {"modes", f.modes().size()}, {"scan_step", options.scan_step}};

  // (a) sign of cos(k pi) - f_eps(k pi) is (-1)^k.
  int alternation_failures = 0;
  double min_abs_at_kpi = std::numeric_limits<double>::infinity();
  for (int k = -N; k <= N; ++k) {
    const double v = std::cos(k * kPi) - fe(k * kPi).real();
    const int expected = (k % 2 == 0) ? 1 : -1;
    if (!(v * expected > 0.0)) ++alternation_failures;
    min_abs_at_kpi = std::min(min_abs_at_kpi, std::abs(v));
  }

  // (b) sign changes on a fine grid.
  const auto steps = static_cast<long long>(std::ceil(2.0 * span / options.scan_step));
  int changes = 0;
  int last = 0;
  for (long long i = 0; i <= steps; ++i) {
    const double t = i == steps ? span : -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(steps);
    const double v = std::cos(t) - fe(t).real();
    const int s = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }

  // (c) growth bound on the contour |x| = N pi, |y| = N.
  const double y = static_cast<double>(N);
  const Complex contour[] = {{span, y}, {span, -y}, {-span, y}, {-span, -y},
                             {span, 0.0}, {-span, 0.0}, {0.0, y}, {0.0, -y}};
  double worst_ratio = 0.0;
  double domination = std::numeric_limits<double>::infinity();
  for (const auto& z : contour) {
    const double bound = std::exp(std::abs(z.imag())) / (eps * std::abs(z)) * norm_bound;
    const double val = std::abs(fe(z));
    worst_ratio = std::max(worst_ratio, bound > 0.0 ? val / bound : (val > 0.0 ? INFINITY : 0.0));
    domination = std::min(domination, std::abs(std::cos(z)) - val);
  }

  r.measured["alternation_failures"] = alternation_failures;
  r.measured["min_abs_at_kpi"] = min_abs_at_kpi;
  r.measured["sign_changes"] = changes;
  r.measured["growth_ratio_max"] = worst_ratio;
  r.measured["contour_cos_minus_feps_min"] = domination;
  r.bound["sign_changes_expected"] = 2.0 * N;
  r.bound["growth_ratio_max"] = 1.0 + options.bound_slack;
  const double margin = std::min({-static_cast<double>(alternation_failures),
                                  -std::abs(static_cast<double>(changes - 2 * N)),
                                  1.0 + options.bound_slack - worst_ratio});
  r.finalize(margin, 0.0);
  return r;
}

// ---------------------------------------------------------------------------

VerificationReport landau_necessity_demo(double sigma, double a, const std::vector<double>& half_widths,
                                         const AdversarialOptions& options) {
  if (!(sigma > 0.0) || !(a > 0.0)) throw std::invalid_argument("landau_necessity_demo: sigma and a must be positive");
  VerificationReport r;
  r.check_name = "landau_demo";
  r.inputs = {{"sigma", sigma}, {"spacing", a}, {"half_widths", half_widths}};
  const auto verdict = nyquist_check_1d(sigma, 1.0 / a);
  r.measured["density"] = 1.0 / a;
  r.bound["critical_density"] = verdict.critical_density;

  std::vector<double> ratios;
  for (double w : half_widths) {
    const auto points = static_cast<std::size_t>(std::ceil(2.0 * w / a - 1e-9));
    const auto pt = extremal_periodic_1d(sigma, a, std::max<std::size_t>(points, 1), options);
    ratios.push_back(pt.ratio_lower_bound);
    r.measured["ratio_W" + std::to_string(static_cast<long long>(std::llround(w)))] = pt.ratio_lower_bound;
  }

  const double rho = 0.5 * sigma * a;
  if (std::abs(verdict.margin) <= 1e-15) {
    r.skip("critical density: boundary case, no verdict");
    return r;
  }
  if (verdict.sampling_predicted) {
    const double bound = 1.0 / std::cos(rho);
    r.bound["ratio_max"] = bound + 1e-6;
    double worst = std::numeric_limits<double>::infinity();
    for (double q : ratios) worst = std::min(worst, bound + 1e-6 - q);
    r.finalize(worst, 0.0);
    r.note = "supercritical: ratios bounded by 1/cos(sigma a/2)";
  } else {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < ratios.size(); ++i) {
      const double step = std::isinf(ratios[i]) ? INFINITY : ratios[i] - ratios[i - 1];
      worst = std::min(worst, std::isnan(step) ? 0.0 : step);
    }
    if (worst == std::numeric_limits<double>::infinity()) worst = 0.0;
    r.finalize(worst, 0.0);
    r.note = "subcritical: nondecreasing ratio lower bounds (+inf means f vanishing on Lambda exists)";
  }
  return r;
}

}  // namespace beurling
