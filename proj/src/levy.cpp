#include "burgers/levy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform on the open interval (0, 1) from the top 53 bits.
double uniform_open(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double standard_normal(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return normal(rng);
}

std::string fmt_num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double draw_jump(const JumpLaw& law, Rng& rng) {
  switch (law.kind) {
    case JumpLaw::Kind::constant:
      return law.a;
    case JumpLaw::Kind::normal:
      return law.a + law.b * standard_normal(rng);
    case JumpLaw::Kind::laplace: {
      const double u = uniform_open(rng) - 0.5;
      return law.a - law.b * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
    }
  }
  return 0.0;
}

double compound_poisson_sum(const CompoundPoisson& cp, double span, Rng& rng) {
  std::poisson_distribution<long> count(cp.rate * span);
  const long k = count(rng);
  double total = 0.0;
  for (long j = 0; j < k; ++j) total += draw_jump(cp.jumps, rng);
  return total;
}

struct Step {
  double increment;
  bool jump;
};

// Draws grid increments of one family. Holds the per-step constants.
class StepSampler {
 public:
  StepSampler(const LevyParams& params, double h) : params_(params), h_(h) {
    if (const auto* s = std::get_if<Stable>(&params_)) {
      threshold_ = kJumpThresholdScales * s->scale * std::pow(h, 1.0 / s->alpha);
    } else if (const auto* c = std::get_if<Cauchy>(&params_)) {
      threshold_ = kJumpThresholdScales * c->scale * h;
    } else if (const auto* b = std::get_if<Brownian>(&params_)) {
      stddev_ = b->sigma * std::sqrt(h);
    }
  }

  Step operator()(Rng& rng) const {
    return std::visit(
        [&](const auto& p) -> Step {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Brownian>) {
            return {stddev_ * standard_normal(rng), false};
          } else if constexpr (std::is_same_v<T, Stable>) {
            const double d = stable_increment(p.alpha, p.beta, p.scale, h_, rng);
            return {d, std::abs(d) > threshold_};
          } else if constexpr (std::is_same_v<T, Cauchy>) {
            const double d = stable_increment(1.0, 0.0, p.scale, h_, rng);
            return {d, std::abs(d) > threshold_};
          } else {
            const double d = compound_poisson_sum(p, h_, rng);
            return {d, d != 0.0};
          }
        },
        params_);
  }

 private:
  const LevyParams& params_;
  double h_;
  double threshold_ = 0.0;
  double stddev_ = 0.0;
};

}  // namespace

// ---------------------------------------------------------------------------
// GridSpec

GridSpec::GridSpec(double x_min, double x_max, std::size_t n) : n_(n) {
  if (n < 3) fail(ErrorKind::grid, "grid needs at least 3 points, got " + std::to_string(n));
  if (!(x_min < 0.0 && 0.0 < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    fail(ErrorKind::grid, "grid must satisfy x_min < 0 < x_max");
  }
  h_ = (x_max - x_min) / static_cast<double>(n - 1);
  const double z = -x_min / h_;
  const double zr = std::round(z);
  if (std::abs(z - zr) > 1e-9 * std::max(1.0, z)) {
    fail(ErrorKind::grid, "0 is not a grid point of [" + fmt_num(x_min) + ", " + fmt_num(x_max) +
                              "] with " + std::to_string(n) + " points");
  }
  zero_ = static_cast<std::size_t>(zr);
}

GridSpec GridSpec::symmetric(double half_width, std::size_t n) {
  if (n % 2 == 0) fail(ErrorKind::grid, "symmetric grid needs an odd point count");
  return GridSpec(-half_width, half_width, n);
}

GridSpec GridSpec::with_step(double half_width, double h) {
  if (!(h > 0.0) || !(half_width > 0.0)) fail(ErrorKind::grid, "need h > 0 and L > 0");
  const double cells = half_width / h;
  const double cr = std::round(cells);
  if (cr < 1.0 || std::abs(cells - cr) > 1e-9 * cells) {
    fail(ErrorKind::grid, "L / h must be an integer (L=" + fmt_num(half_width) +
                              ", h=" + fmt_num(h) + ")");
  }
  return GridSpec(-half_width, half_width, 2 * static_cast<std::size_t>(cr) + 1);
}

std::vector<double> GridSpec::points() const {
  std::vector<double> ys(n_);
  for (std::size_t i = 0; i < n_; ++i) ys[i] = point(i);
  return ys;
}

std::size_t GridSpec::floor_index(double y) const noexcept {
  const double r = std::floor(y / h_) + static_cast<double>(zero_);
  if (!(r > 0.0)) return 0;
  if (r >= static_cast<double>(n_ - 1)) return n_ - 1;
  auto i = static_cast<std::size_t>(r);
  // Correct the division's rounding against the stored points.
  while (i + 1 < n_ && point(i + 1) <= y) ++i;
  while (i > 0 && point(i) > y) --i;
  return i;
}

// ---------------------------------------------------------------------------
// Parameters

void validate(const LevyParams& params) {
  std::visit(
      [](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Brownian>) {
          if (!(p.sigma >= 0.0) || !std::isfinite(p.sigma)) {
            fail(ErrorKind::parameter, "Brownian sigma must be >= 0");
          }
        } else if constexpr (std::is_same_v<T, Stable>) {
          if (!(p.alpha > 0.5 && p.alpha <= 2.0)) {
            fail(ErrorKind::parameter, "stable alpha must lie in (1/2, 2], got " + fmt_num(p.alpha));
          }
          if (!(p.beta >= -1.0 && p.beta <= 1.0)) {
            fail(ErrorKind::parameter, "stable beta must lie in [-1, 1]");
          }
          if (!(p.scale > 0.0) || !std::isfinite(p.scale)) {
            fail(ErrorKind::parameter, "stable scale must be > 0");
          }
        } else if constexpr (std::is_same_v<T, Cauchy>) {
          if (!(p.scale > 0.0) || !std::isfinite(p.scale)) {
            fail(ErrorKind::parameter, "Cauchy scale must be > 0");
          }
        } else {
          if (!(p.rate > 0.0) || !std::isfinite(p.rate)) {
            fail(ErrorKind::parameter, "compound Poisson rate must be > 0");
          }
          if (p.jumps.kind != JumpLaw::Kind::constant && !(p.jumps.b > 0.0)) {
            fail(ErrorKind::parameter, "jump law spread must be > 0");
          }
          if (p.jumps.kind == JumpLaw::Kind::constant && p.jumps.a == 0.0) {
            fail(ErrorKind::parameter, "constant jump size must be nonzero");
          }
        }
      },
      params);
}

std::string family_name(const LevyParams& params) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Brownian>) return "brownian";
        else if constexpr (std::is_same_v<T, Stable>) return "stable";
        else if constexpr (std::is_same_v<T, Cauchy>) return "cauchy";
        else return "compound_poisson";
      },
      params);
}

// ---------------------------------------------------------------------------
// LevyPath

LevyPath::LevyPath(GridSpec grid, std::vector<double> values, std::vector<TrackedJump> jumps,
                   std::optional<LevyParams> params, std::optional<SeedRecord> seed)
    : grid_(grid),
      points_(grid.points()),
      values_(std::move(values)),
      jumps_(std::move(jumps)),
      params_(std::move(params)),
      seed_(seed) {
  if (values_.size() != grid_.size()) {
    fail(ErrorKind::input, "path has " + std::to_string(values_.size()) + " values for a grid of " +
                               std::to_string(grid_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) fail(ErrorKind::input, "path values must be finite");
  }
  std::sort(jumps_.begin(), jumps_.end(),
            [](const TrackedJump& l, const TrackedJump& r) { return l.index < r.index; });
  for (std::size_t j = 0; j < jumps_.size(); ++j) {
    const auto& jump = jumps_[j];
    if (jump.index == 0 || jump.index >= values_.size()) {
      fail(ErrorKind::input, "tracked jump index " + std::to_string(jump.index) + " out of range");
    }
    if (jump.size == 0.0 || !std::isfinite(jump.size)) {
      fail(ErrorKind::input, "tracked jump sizes must be finite and nonzero");
    }
    if (j > 0 && jumps_[j - 1].index == jump.index) {
      fail(ErrorKind::input, "duplicate tracked jump index " + std::to_string(jump.index));
    }
  }
  if (params_) {
    validate(*params_);
    if (values_[grid_.zero_index()] != 0.0) {
      fail(ErrorKind::input, "sampled path must vanish at 0");
    }
  }
}

LevyPath LevyPath::subsample(std::size_t stride) const {
  const std::size_t n = grid_.size();
  const std::size_t z = grid_.zero_index();
  if (stride == 0 || z % stride != 0 || (n - 1 - z) % stride != 0) {
    fail(ErrorKind::grid, "stride " + std::to_string(stride) + " does not nest in the grid");
  }
  if (stride == 1) return *this;
  const std::size_t coarse_n = (n - 1) / stride + 1;
  if (coarse_n < 3) fail(ErrorKind::grid, "subsampled grid would have fewer than 3 points");
  GridSpec coarse(grid_.x_min(), grid_.x_max(), coarse_n);
  std::vector<double> values(coarse_n);
  for (std::size_t i = 0; i < coarse_n; ++i) values[i] = values_[i * stride];

  const auto s = static_cast<long long>(stride);
  const auto cz = static_cast<long long>(coarse.zero_index());
  std::map<std::size_t, double> merged;
  for (const auto& jump : jumps_) {
    const long long r = static_cast<long long>(jump.index) - static_cast<long long>(z);
    // ceil(r / s) for either sign of r
    const long long q = r >= 0 ? (r + s - 1) / s : -((-r) / s);
    merged[static_cast<std::size_t>(cz + q)] += jump.size;
  }
  std::vector<TrackedJump> jumps;
  for (const auto& [index, size] : merged) {
    if (size != 0.0) jumps.push_back({index, size});
  }
  return LevyPath(coarse, std::move(values), std::move(jumps), params_, seed_);
}

// ---------------------------------------------------------------------------
// Sampling

double stable_increment(double alpha, double beta, double scale, double h, Rng& rng) {
  if (!(alpha > 0.5 && alpha <= 2.0) || !(beta >= -1.0 && beta <= 1.0) || !(scale > 0.0) ||
      !(h > 0.0)) {
    fail(ErrorKind::parameter, "stable_increment parameters out of range");
  }
  const double gamma = scale * std::pow(h, 1.0 / alpha);
  const double v = kPi * (uniform_open(rng) - 0.5);
  const double w = -std::log(uniform_open(rng));
  if (alpha == 1.0) {
    const double half_pi = 0.5 * kPi;
    const double shifted = half_pi + beta * v;
    const double x =
        (shifted * std::tan(v) - beta * std::log((half_pi * w * std::cos(v)) / shifted)) / half_pi;
    return gamma * x + beta * gamma * std::log(gamma) / half_pi;
  }
  const double zeta = beta * std::tan(0.5 * kPi * alpha);
  const double b = std::atan(zeta) / alpha;
  const double s = std::pow(1.0 + zeta * zeta, 0.5 / alpha);
  const double x = s * std::sin(alpha * (v + b)) / std::pow(std::cos(v), 1.0 / alpha) *
                   std::pow(std::cos(v - alpha * (v + b)) / w, (1.0 - alpha) / alpha);
  return gamma * x;
}

double sample_marginal(const LevyParams& params, double x, Rng& rng) {
  if (!(x > 0.0)) fail(ErrorKind::parameter, "sample_marginal needs x > 0");
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Brownian>) {
          return p.sigma * std::sqrt(x) * standard_normal(rng);
        } else if constexpr (std::is_same_v<T, Stable>) {
          return stable_increment(p.alpha, p.beta, p.scale, x, rng);
        } else if constexpr (std::is_same_v<T, Cauchy>) {
          return stable_increment(1.0, 0.0, p.scale, x, rng);
        } else {
          return compound_poisson_sum(p, x, rng);
        }
      },
      params);
}

LevyPath sample_path(const LevyParams& params, const GridSpec& grid, std::uint64_t seed) {
  validate(params);
  const std::size_t n = grid.size();
  const std::size_t z = grid.zero_index();
  const SeedRecord record{seed, derive_seed(seed, 1), derive_seed(seed, 2)};
  const StepSampler step(params, grid.step());

  std::vector<double> values(n, 0.0);
  std::vector<TrackedJump> jumps;

  Rng left(record.left_stream_seed);
  for (std::size_t k = 1; k <= z; ++k) {
    const Step s = step(left);
    // s is psi0(y_{i}) - psi0(y_{i-1}) for i = z - k + 1, accumulated leftward.
    values[z - k] = values[z - k + 1] - s.increment;
    if (s.jump) jumps.push_back({z - k + 1, s.increment});
  }
  Rng right(record.right_stream_seed);
  for (std::size_t i = z + 1; i < n; ++i) {
    const Step s = step(right);
    values[i] = values[i - 1] + s.increment;
    if (s.jump) jumps.push_back({i, s.increment});
  }
  return LevyPath(grid, std::move(values), std::move(jumps), params, record);
}

// ---------------------------------------------------------------------------
// Classification

PropertyFlags classify(const LevyParams& params) {
  validate(params);
  return std::visit(
      [](const auto& p) -> PropertyFlags {
        using T = std::decay_t<decltype(p)>;
        PropertyFlags f;
        f.hyp_a = true;
        if constexpr (std::is_same_v<T, Brownian>) {
          if (p.sigma == 0.0) {
            // Degenerate zero path: constant, hence of bounded variation.
            f.bounded_variation = true;
            f.assumption_b = AssumptionB::unknown;
          } else {
            f.abrupt = true;
            f.hyp_b = true;
            f.assumption_b = AssumptionB::not_applicable;
          }
        } else if constexpr (std::is_same_v<T, Stable>) {
          if (p.alpha < 1.0) {
            f.bounded_variation = true;
            // Both-sided infinite activity is needed; totally skewed laws lack it.
            f.hyp_b = std::abs(p.beta) < 1.0;
            f.assumption_b = AssumptionB::assumed;
          } else {
            f.hyp_b = true;
            f.assumption_b = AssumptionB::not_applicable;
            if (p.alpha > 1.0) f.abrupt = true;
            else f.eroded = p.beta == 0.0;
          }
        } else if constexpr (std::is_same_v<T, Cauchy>) {
          f.eroded = true;
          f.hyp_b = true;
          f.assumption_b = AssumptionB::not_applicable;
        } else {
          f.bounded_variation = true;
          f.assumption_b = AssumptionB::unknown;
        }
        return f;
      },
      params);
}

// ---------------------------------------------------------------------------
// Abruptness integral

std::vector<IntegralRow> abruptness_integral_estimate(const LevyParams& params, double a, double b,
                                                      std::span<const double> eps_list,
                                                      std::size_t n_mc, std::uint64_t seed) {
  validate(params);
  if (!(a <= b)) fail(ErrorKind::parameter, "integral interval needs a <= b");
  if (n_mc < 1000) fail(ErrorKind::parameter, "n_mc must be at least 1000");
  if (eps_list.empty()) fail(ErrorKind::parameter, "eps_list is empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const double e = eps_list[i];
    if (!(e > 0.0 && e < 1.0)) {
      fail(ErrorKind::parameter, "eps must lie in (0, 1), got " + fmt_num(e));
    }
    if (i > 0 && !(e < eps_list[i - 1])) {
      fail(ErrorKind::parameter, "eps_list must be strictly decreasing");
    }
  }

  const double per_decade = kIntegralNodesPerDecade;
  const double max_pos = per_decade * std::log10(1.0 / eps_list.back());
  const auto last_node = static_cast<std::size_t>(std::ceil(max_pos - 1e-9));
  const double ds = std::log(10.0) / per_decade;

  // Node j sits at x = 10^(-j / per_decade).
  std::vector<double> prob(last_node + 1);
  for (std::size_t j = 0; j <= last_node; ++j) {
    const double x = std::pow(10.0, -static_cast<double>(j) / per_decade);
    Rng rng(derive_seed(seed, j));
    std::size_t hits = 0;
    for (std::size_t m = 0; m < n_mc; ++m) {
      const double v = sample_marginal(params, x, rng);
      if (v >= a * x && v <= b * x) ++hits;
    }
    prob[j] = static_cast<double>(hits) / static_cast<double>(n_mc);
  }
  std::vector<double> cumulative(last_node + 1, 0.0);
  for (std::size_t j = 1; j <= last_node; ++j) {
    cumulative[j] = cumulative[j - 1] + 0.5 * (prob[j - 1] + prob[j]) * ds;
  }

  std::vector<IntegralRow> rows;
  rows.reserve(eps_list.size());
  for (double e : eps_list) {
    const double pos = per_decade * std::log10(1.0 / e);
    auto j = static_cast<std::size_t>(std::floor(pos + 1e-9));
    j = std::min(j, last_node);
    const double frac = pos - static_cast<double>(j);
    double total = cumulative[j];
    if (frac > 1e-9 && j < last_node) {
      const double p_end = prob[j] + frac * (prob[j + 1] - prob[j]);
      total += 0.5 * (prob[j] + p_end) * frac * ds;
    }
    rows.push_back({e, total});
  }
  return rows;
}

}  // namespace burgers
