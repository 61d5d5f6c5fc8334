#pragma once

// Two-sided Lévy potential paths on a uniform grid, the family lookup table
// for the structural hypotheses, and the Monte Carlo abruptness diagnostic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "burgers/rng.hpp"

namespace burgers {

// Uniform grid containing 0 exactly. Points are computed as (i - zero_index) * h
// so that y = 0 is represented without rounding and the grid is symmetric
// whenever the bounds are.
class GridSpec {
 public:
  GridSpec(double x_min, double x_max, std::size_t n);

  // [-half_width, half_width] with n points; n must be odd.
  static GridSpec symmetric(double half_width, std::size_t n);
  // [-half_width, half_width] with step h; half_width / h must be an integer.
  static GridSpec with_step(double half_width, double h);

  double x_min() const noexcept { return point(0); }
  double x_max() const noexcept { return point(n_ - 1); }
  std::size_t size() const noexcept { return n_; }
  double step() const noexcept { return h_; }
  std::size_t zero_index() const noexcept { return zero_; }

  double point(std::size_t i) const noexcept {
    return (static_cast<double>(i) - static_cast<double>(zero_)) * h_;
  }
  std::vector<double> points() const;

  // Largest index with point(i) <= y, clamped to the grid.
  std::size_t floor_index(double y) const noexcept;

  bool operator==(const GridSpec&) const = default;

 private:
  double h_;
  std::size_t n_;
  std::size_t zero_;
};

struct Brownian {
  double sigma = 1.0;
};

// Stable law in the 1-parametrization; increments over a step h have scale
// scale * h^(1/alpha).
struct Stable {
  double alpha = 1.5;
  double beta = 0.0;
  double scale = 1.0;
};

// Symmetric Cauchy; same law as Stable{1, 0, scale}.
struct Cauchy {
  double scale = 1.0;
};

struct JumpLaw {
  enum class Kind { constant, normal, laplace };
  Kind kind = Kind::normal;
  // constant: a = size. normal: a = mean, b = stddev. laplace: a = mean, b = scale.
  double a = 0.0;
  double b = 1.0;
};

struct CompoundPoisson {
  double rate = 1.0;
  JumpLaw jumps;
};

using LevyParams = std::variant<Brownian, Stable, Cauchy, CompoundPoisson>;

// Throws ErrorKind::parameter on out-of-range parameters.
void validate(const LevyParams& params);
std::string family_name(const LevyParams& params);

enum class AssumptionB { assumed, not_applicable, unknown };

struct PropertyFlags {
  bool bounded_variation = false;
  bool abrupt = false;
  bool eroded = false;
  bool hyp_a = false;
  bool hyp_b = false;
  AssumptionB assumption_b = AssumptionB::unknown;

  bool operator==(const PropertyFlags&) const = default;
};

struct TrackedJump {
  std::size_t index;  // grid index i: the jump sits in the increment values[i] - values[i-1]
  double size;

  bool operator==(const TrackedJump&) const = default;
};

struct SeedRecord {
  std::uint64_t seed;
  std::uint64_t right_stream_seed;
  std::uint64_t left_stream_seed;

  bool operator==(const SeedRecord&) const = default;
};

// A potential sampled on a grid. Sampled paths satisfy values[zero_index] == 0;
// hand-built fixtures (params == nullopt) may carry any values.
class LevyPath {
 public:
  LevyPath(GridSpec grid, std::vector<double> values, std::vector<TrackedJump> jumps,
           std::optional<LevyParams> params = std::nullopt,
           std::optional<SeedRecord> seed = std::nullopt);

  const GridSpec& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> points() const noexcept { return points_; }
  const std::vector<TrackedJump>& tracked_jumps() const noexcept { return jumps_; }
  const std::optional<LevyParams>& params() const noexcept { return params_; }
  const std::optional<SeedRecord>& seed() const noexcept { return seed_; }

  std::size_t size() const noexcept { return values_.size(); }
  double value(std::size_t i) const noexcept { return values_[i]; }
  double point(std::size_t i) const noexcept { return points_[i]; }
  // Grid proxy for psi(y-): the previous grid value.
  double left_limit(std::size_t i) const noexcept { return values_[i == 0 ? 0 : i - 1]; }

  // Restriction to every stride-th grid point (the zero point is kept).
  // Tracked jumps are summed into the coarse cell that contains them.
  LevyPath subsample(std::size_t stride) const;

 private:
  GridSpec grid_;
  std::vector<double> points_;
  std::vector<double> values_;
  std::vector<TrackedJump> jumps_;
  std::optional<LevyParams> params_;
  std::optional<SeedRecord> seed_;
};

// Increments larger than this many step scales are recorded as jumps.
inline constexpr double kJumpThresholdScales = 6.0;

// One draw of S(alpha, beta, scale * h^(1/alpha), 0) by the Chambers-Mallows-Stuck
// transform. alpha = 2 gives Normal(0, 2 scale^2 h).
double stable_increment(double alpha, double beta, double scale, double h, Rng& rng);

// One draw of psi0(x) for x > 0.
double sample_marginal(const LevyParams& params, double x, Rng& rng);

LevyPath sample_path(const LevyParams& params, const GridSpec& grid, std::uint64_t seed);

PropertyFlags classify(const LevyParams& params);

struct IntegralRow {
  double eps;
  double estimate;
};

inline constexpr int kIntegralNodesPerDecade = 40;

// Monte Carlo estimate of int_eps^1 x^-1 P{psi0(x) in [a x, b x]} dx for each
// eps, by trapezoid rule in log x on a node grid with kIntegralNodesPerDecade
// nodes per decade. A trend diagnostic, not a test.
std::vector<IntegralRow> abruptness_integral_estimate(const LevyParams& params, double a, double b,
                                                      std::span<const double> eps_list,
                                                      std::size_t n_mc, std::uint64_t seed);

}  // namespace burgers
