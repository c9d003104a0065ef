#include "beurling/bandlimited.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beurling {

BandlimitedFunction::BandlimitedFunction(ConvexBody body, std::vector<Term> terms, double tol)
    : body_(std::move(body)), terms_(std::move(terms)) {
  if (body_.degenerate()) throw std::invalid_argument("spectral body must have positive measure");
  for (const auto& t : terms_) {
    require_same_dim(t.freq.size(), body_.dim(), "frequency");
    if (!all_finite(t.freq) || !std::isfinite(t.coef.real()) || !std::isfinite(t.coef.imag())) {
      throw std::invalid_argument("non-finite term in band-limited function");
    }
    if (!body_.contains(t.freq, tol)) {
      throw std::invalid_argument("frequency lies outside the spectral body");
    }
    coef_l1_ += std::abs(t.coef);
    max_freq_ = std::max(max_freq_, norm2(t.freq));
  }
}

BandlimitedFunction BandlimitedFunction::random(const ConvexBody& body, std::size_t max_terms,
                                                double coef_scale, std::mt19937_64& rng) {
  if (max_terms == 0) throw std::invalid_argument("random function needs at least one term");
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::normal_distribution<double> gauss(0.0, coef_scale);
  const std::size_t k = count(rng);
  std::vector<Term> terms;
  terms.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    terms.push_back({Complex(re, im), body.sample_point(rng)});
  }
  return BandlimitedFunction(body, std::move(terms));
}

Complex BandlimitedFunction::operator()(const Vector& x) const {
  require_same_dim(x.size(), dim(), "evaluate");
  Complex s(0.0, 0.0);
  for (const auto& t : terms_) {
    double phase = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) phase += t.freq[i] * x[i];
    s += t.coef * Complex(std::cos(phase), std::sin(phase));
  }
  return s;
}

Complex evaluate(const BandlimitedFunction& f, const Vector& x) { return f(x); }

SupEstimate sup_norm_on_window(const BandlimitedFunction& f, const Window& window, double grid_step,
                               double cap) {
  if (!(grid_step > 0.0)) throw std::invalid_argument("sup_norm_on_window: grid_step must be positive");
  if (!window.valid()) throw std::invalid_argument("sup_norm_on_window: empty or malformed window");
  require_same_dim(window.dim(), f.dim(), "sup_norm_on_window");
  const Grid grid(window, grid_step);
  if (grid.node_count() > cap) {
    throw ResourceError("sup_norm_on_window: " + std::to_string(grid.node_count()) +
                        " grid nodes exceed cap " + std::to_string(cap));
  }
  SupEstimate out;
  out.nodes = grid.node_count();
  out.argmax = window.lo;
  grid.for_each([&](const Vector& x) {
    const double v = std::abs(f(x));
    if (v > out.estimate) {
      out.estimate = v;
      out.argmax = x;
    }
  });
  out.error_bound = f.gradient_bound() * grid_step * std::sqrt(static_cast<double>(f.dim())) / 2.0;
  return out;
}

ExponentialSum1D::ExponentialSum1D(std::vector<Mode> modes) : modes_(std::move(modes)) {
  for (const auto& m : modes_) {
    band_ = std::max(band_, std::abs(m.freq));
    coef_l1_ += std::abs(m.coef);
  }
}

Complex ExponentialSum1D::operator()(Complex z) const {
  const Complex i(0.0, 1.0);
  Complex s(0.0, 0.0);
  for (const auto& m : modes_) s += m.coef * std::exp(i * m.freq * z);
  return s;
}

LineRestriction restrict_to_line(const BandlimitedFunction& f, const Vector& x0, const Vector& d) {
  require_same_dim(x0.size(), f.dim(), "restrict_to_line base");
  require_same_dim(d.size(), f.dim(), "restrict_to_line direction");
  if (norm2(d) == 0.0) throw std::invalid_argument("restrict_to_line: zero direction");
  std::vector<ExponentialSum1D::Mode> modes;
  modes.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const double phase = dot(t.freq, x0);
    modes.push_back({t.coef * Complex(std::cos(phase), std::sin(phase)), dot(t.freq, d)});
  }
  LineRestriction r{x0, d, f, ExponentialSum1D(std::move(modes)), 0.0, polar_gauge(f.body(), d)};
  r.tau = r.g.band();
  const double tol = 1e-12 * std::max(1.0, r.gauge_of_direction);
  if (r.tau > r.gauge_of_direction + tol) {
    throw std::logic_error("restrict_to_line: band " + std::to_string(r.tau) + " exceeds gauge " +
                           std::to_string(r.gauge_of_direction));
  }
  return r;
}

namespace {

ConvexBody inflate_for_cosine_product(const ConvexBody& k, double shift) {
  const std::size_t n = k.dim();
  switch (k.kind()) {
    case ConvexBody::Kind::kBall:
      return ConvexBody::ball(n, k.radius() + shift * std::sqrt(static_cast<double>(n)));
    case ConvexBody::Kind::kBox: {
      Vector h = k.half_widths();
      for (auto& x : h) x += shift;
      return ConvexBody::box(std::move(h));
    }
    case ConvexBody::Kind::kPolytope: {
      std::vector<Vector> verts;
      verts.reserve(k.vertices().size() << n);
      for (const auto& v : k.vertices()) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
          Vector w = v;
          for (std::size_t i = 0; i < n; ++i) w[i] += (mask >> i) & 1U ? shift : -shift;
          verts.push_back(std::move(w));
        }
      }
      return ConvexBody::polytope(std::move(verts));
    }
    case ConvexBody::Kind::kSegment:
      break;
  }
  throw std::invalid_argument("mollify_nd: degenerate spectral body");
}

}  // namespace

BandlimitedFunction mollify_nd(const BandlimitedFunction& f, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("mollify_nd: eps must be positive");
  const std::size_t n = f.dim();
  const double shift = eps / std::sqrt(static_cast<double>(n));
  const double weight = std::ldexp(1.0, -static_cast<int>(n));
  std::vector<Term> terms;
  terms.reserve(f.terms().size() << n);
  for (const auto& t : f.terms()) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Vector w = t.freq;
      for (std::size_t i = 0; i < n; ++i) w[i] += (mask >> i) & 1U ? shift : -shift;
      terms.push_back({weight * t.coef, std::move(w)});
    }
  }
  return BandlimitedFunction(inflate_for_cosine_product(f.body(), shift), std::move(terms), 1e-9);
}

double mollifier_band_inflation(double eps, const Vector& d) {
  return eps * norm1(d) / std::sqrt(static_cast<double>(d.size()));
}

Complex sinc(Complex w) {
  if (std::abs(w) < 1e-4) {
    const Complex w2 = w * w;
    return 1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0;
  }
  return std::sin(w) / w;
}

LemmaMollifier::LemmaMollifier(ExponentialSum1D f, double eps) : f_(std::move(f)), eps_(eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("mollify_1d_lemma: eps must lie in (0, 1)");
}

Complex LemmaMollifier::operator()(Complex z) const {
  return (1.0 - eps_) * sinc(eps_ * z) * f_((1.0 - eps_) * z);
}

LemmaMollifier mollify_1d_lemma(const ExponentialSum1D& g, double eps) { return LemmaMollifier(g, eps); }

LemmaMollifier mollify_1d_lemma(const LineRestriction& g, double eps) { return LemmaMollifier(g.g, eps); }

void to_json(nlohmann::json& j, const BandlimitedFunction& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"re", t.coef.real()}, {"im", t.coef.imag()}, {"freq", t.freq}});
  }
  j = nlohmann::json{{"body", f.body()}, {"terms", terms}};
}

BandlimitedFunction function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("body")) throw std::invalid_argument("missing field 'function.body'");
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("field 'function.terms' must be an array");
  }
  ConvexBody body = body_from_json(j.at("body"));
  std::vector<Term> terms;
  std::size_t idx = 0;
  for (const auto& t : j.at("terms")) {
    const std::string where = "function.terms[" + std::to_string(idx++) + "]";
    if (!t.is_object() || !t.contains("freq")) throw std::invalid_argument("missing field '" + where + ".freq'");
    try {
      terms.push_back({Complex(t.value("re", 0.0), t.value("im", 0.0)), t.at("freq").get<Vector>()});
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("field '" + where + "' malformed: " + e.what());
    }
  }
  return BandlimitedFunction(std::move(body), std::move(terms));
}

}  // namespace beurling
