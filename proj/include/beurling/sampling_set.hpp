#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <variant>
#include <vector>

#include <json.hpp>

#include "beurling/bandlimited.hpp"
#include "beurling/convex_body.hpp"
#include "beurling/vector_ops.hpp"

namespace beurling {

/// offset + A k, k in Z^n.  `basis[i]` is the i-th column of A.
struct Lattice {
  std::vector<Vector> basis;
  Vector offset;
};

/// Lattice points moved by independent uniform jitter in [-jitter, jitter]^n.
/// The jitter of each point is a pure function of (seed, lattice index).
struct PerturbedLattice {
  Lattice lattice;
  double jitter = 0.0;
  std::uint64_t seed = 42;
};

/// {x : x.normal in pi Z}, each sheet discretized on a square grid of
/// spacing `sheet_step` in an orthonormal frame of the sheet.
struct HyperplaneLattice {
  Vector normal;
  double sheet_step = 0.5;
};

struct ExplicitList {
  std::vector<Vector> points;
};

class SamplingSet {
 public:
  using Generator = std::variant<Lattice, PerturbedLattice, HyperplaneLattice, ExplicitList>;

  explicit SamplingSet(Generator gen, double window_margin = 0.0);

  static SamplingSet lattice(std::vector<Vector> basis, Vector offset, double margin = 0.0);
  /// a Z^n
  static SamplingSet cubic(std::size_t dim, double spacing);
  /// Triangular lattice in R^2 with nearest-neighbour distance `spacing`.
  static SamplingSet hexagonal(double spacing);
  static SamplingSet perturbed(Lattice base, double jitter, std::uint64_t seed);
  static SamplingSet hyperplane(Vector normal, double sheet_step);
  static SamplingSet explicit_list(std::vector<Vector> points, double margin = 0.0);

  std::size_t dim() const { return dim_; }
  const Generator& generator() const { return gen_; }
  double window_margin() const { return margin_; }

  /// Image under x -> a x.
  SamplingSet scaled(double a) const;

  /// Points inside `window` inflated by the set's margin.  Lattices are
  /// enumerated exactly from integer ranges derived from the inverse basis.
  std::vector<Vector> materialize(const Window& window, double cap = kDefaultPointCap) const;

  /// An upper bound on the global covering radius in the gauge of K°, when
  /// the generator admits one (lattices, perturbed lattices, sheets).
  std::optional<double> covering_bound(const ConvexBody& K) const;

 private:
  Generator gen_;
  double margin_ = 0.0;
  std::size_t dim_ = 0;
};

/// Orthonormal basis of the complement of `normal`, built by Gram-Schmidt
/// against the standard basis (so axis-aligned normals give axis vectors).
std::vector<Vector> orthonormal_complement(const Vector& normal);

struct CoveringResult {
  double rho_estimate = 0.0;
  /// True covering radius over the probe region lies in
  /// [rho_estimate, rho_upper_certificate].
  double rho_upper_certificate = 0.0;
  double lipschitz = 0.0;
  double probe_nodes = 0.0;
  std::size_t points = 0;
  Vector worst_probe;
  Window probe_window;
};

/// Least rho with every probe point within gauge distance rho of the set.
/// Pure lattices probe one fundamental domain (the window argument is then
/// unused); other generators probe `window`.  Throws ProbeWindowError if the
/// materialization margin could hide a closer point.
CoveringResult covering_radius(const SamplingSet& L, const ConvexBody& K, const Window& window, double probe_step,
                               double cap = kDefaultPointCap);

struct DensityEstimate {
  double r = 0.0;
  double density = 0.0;
  std::size_t min_count = 0;
  Vector worst_center;
};

/// Default materialization window: [-20,20]^n for n <= 2, [-8,8]^3 else.
Window default_window(std::size_t dim);

/// Volume of the Euclidean ball of radius r in R^n.
double ball_volume(std::size_t dim, double r);

/// min over sampled centers of #(L within x + rB) / |rB|.  Centers are
/// `center_samples` uniform draws plus a deterministic 3^n grid, all at
/// distance >= max(radii) from the window boundary.
std::vector<DensityEstimate> lower_uniform_density(const SamplingSet& L, const std::vector<double>& radii,
                                                   std::size_t center_samples, std::uint64_t seed,
                                                   std::optional<Window> window = std::nullopt,
                                                   double cap = kDefaultPointCap);

struct NyquistVerdict {
  bool sampling_predicted = false;
  double critical_density = 0.0;
  double margin = 0.0;
};

/// One-dimensional Nyquist test for S = [-sigma, sigma]: density > sigma/pi.
NyquistVerdict nyquist_check_1d(double sigma, double density);

void to_json(nlohmann::json& j, const SamplingSet& s);
SamplingSet set_from_json(const nlohmann::json& j);
/// One point per row, comma separated; blank lines and '#' comments skipped.
std::vector<Vector> read_points_csv(std::istream& in);

}  // namespace beurling
