#include "burgers/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "burgers/errors.hpp"
#include "burgers/kernels.hpp"

namespace burgers {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    fail(ErrorKind::parameter, "solution time must be > 0, got " + std::to_string(t));
  }
}

void check_covered(const BurgersSolution& sol, double x) {
  if (!sol.covered().contains(x)) {
    fail(ErrorKind::out_of_domain,
         "x = " + std::to_string(x) + " outside the covered Eulerian range");
  }
}

}  // namespace

BurgersSolution::BurgersSolution(std::shared_ptr<const LevyPath> path, double t,
                                 ConcaveMajorant majorant, Interval window)
    : path_(std::move(path)), t_(t), majorant_(std::move(majorant)), window_(window) {
  const std::size_t m = majorant_.size();
  x_lo_.assign(m, -kInf);
  x_hi_.assign(m, kInf);
  const auto slopes = majorant_.slopes();
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double shock = -t_ * slopes[k];
    x_hi_[k] = shock;
    x_lo_[k + 1] = shock;
  }
  boundary_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    boundary_[k] = (x_lo_[k] >= window_.lo && x_hi_[k] <= window_.hi) ? 0 : 1;
  }
}

Interval BurgersSolution::covered() const noexcept {
  return {path_->grid().x_min(), path_->grid().x_max()};
}

std::size_t BurgersSolution::vertex_at(double x) const noexcept {
  const auto first = x_lo_.begin() + 1;
  return static_cast<std::size_t>(std::upper_bound(first, x_lo_.end(), x) - first);
}

BurgersSolution solve(std::shared_ptr<const LevyPath> path, double t, const SolveOptions& options) {
  check_time(t);
  if (!path || path->size() < 2) fail(ErrorKind::input, "solve needs a path with >= 2 points");
  const GridSpec& grid = path->grid();
  const double span = grid.x_max() - grid.x_min();
  const double margin = std::isnan(options.window_margin) ? span / 4.0 : options.window_margin;
  if (!(margin >= 0.0) || !(2.0 * margin < span)) {
    fail(ErrorKind::parameter, "window margin must lie in [0, span/2)");
  }
  const Interval window{grid.x_min() + margin, grid.x_max() - margin};

  const auto ys = path->points();
  const auto psi = path->values();
  const double inv_two_t = 1.0 / (2.0 * t);
  std::vector<double> shifted(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) shifted[i] = psi[i] - (ys[i] * ys[i]) * inv_two_t;

  BurgersSolution sol(std::move(path), t, upper_concave_majorant(ys, shifted), window);
  if (options.check_boundary) {
    const std::size_t m = sol.vertex_count();
    if (sol.x_hi(0) > window.lo || sol.x_lo(m - 1) < window.hi) {
      fail(ErrorKind::window_too_small,
           "a grid end point owns part of the analysis window; the global argmax may lie "
           "off-grid");
    }
  }
  return sol;
}

BurgersSolution solve(const LevyPath& path, double t, const SolveOptions& options) {
  return solve(std::make_shared<const LevyPath>(path), t, options);
}

PointSolution evaluate_solution(const BurgersSolution& sol, double x) {
  check_covered(sol, x);
  const std::size_t k = sol.vertex_at(x);
  const double a = sol.vertex_y(k);
  const double a_left = (k > 0 && x == sol.x_lo(k)) ? sol.vertex_y(k - 1) : a;
  const double t = sol.t();
  return {a, a_left, (x - a) / t, (x - a_left) / t, k};
}

std::vector<NaiveArgmax> solve_naive(const LevyPath& path, double t, std::span<const double> xs) {
  check_time(t);
  const double inv_two_t = 1.0 / (2.0 * t);
  std::vector<NaiveArgmax> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!std::isfinite(x)) fail(ErrorKind::out_of_domain, "query point must be finite");
    const auto best = kernels::parabola_argmax(path.values(), path.points(), x, inv_two_t);
    out.push_back({best.index, path.point(best.index)});
  }
  return out;
}

double lagrangian_position(const BurgersSolution& sol, double a) {
  const auto ys = sol.majorant().ys();
  if (!(a >= ys.front() && a <= ys.back())) {
    fail(ErrorKind::out_of_domain, "a = " + std::to_string(a) + " outside the Lagrangian window");
  }
  const auto k = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), a) - ys.begin());
  if (ys[k] == a) return std::clamp(a, sol.x_lo(k), sol.x_hi(k));
  // a lies strictly inside a shock interval: it sits in the cluster at the shock.
  return sol.x_lo(k);
}

double moreau_envelope(const BurgersSolution& sol, double x) {
  check_covered(sol, x);
  const std::size_t i = sol.grid_index(sol.vertex_at(x));
  // Same expression as the brute-force scan; algebraically equal to
  // C(a) + x a / t - x^2 / 2t on the shifted majorant.
  const double d = sol.path().point(i) - x;
  return sol.path().value(i) - (d * d) * (1.0 / (2.0 * sol.t()));
}

std::vector<std::size_t> prox_fixed_points(const BurgersSolution& sol) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sol.vertex_count(); ++k) {
    const double y = sol.vertex_y(k);
    if (sol.x_lo(k) <= y && y <= sol.x_hi(k)) out.push_back(k);
  }
  return out;
}

}  // namespace burgers
