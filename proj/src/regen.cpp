#include "burgers/regen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "burgers/errors.hpp"
#include "burgers/kernels.hpp"
#include "burgers/parallel.hpp"
#include "burgers/shocks.hpp"

namespace burgers {

namespace {

// Nearby candidates fail fastest, so check them first.
constexpr std::size_t kNearBlock = 64;

bool past_bound_holds(const LevyPath& path, std::size_t i, double inv_two_t) {
  const auto values = path.values();
  const auto ys = path.points();
  const std::size_t near = i > kNearBlock ? i - kNearBlock : 0;
  const auto check = [&](std::size_t lo, std::size_t hi) {
    return kernels::parabola_bound_holds(values.subspan(lo, hi - lo), ys.subspan(lo, hi - lo),
                                         values[i], ys[i], inv_two_t, false);
  };
  return check(near, i) && check(0, near);
}

bool future_bound_holds(const LevyPath& path, std::size_t i, double inv_two_t) {
  const auto values = path.values();
  const auto ys = path.points();
  const std::size_t n = values.size();
  const std::size_t near = std::min(n, i + 1 + kNearBlock);
  const auto check = [&](std::size_t lo, std::size_t hi) {
    return kernels::parabola_bound_holds(values.subspan(lo, hi - lo), ys.subspan(lo, hi - lo),
                                         values[i], ys[i], inv_two_t, true);
  };
  return check(i + 1, near) && check(near, n);
}

}  // namespace

RegenReport rst_scan(const BurgersSolution& sol) {
  RegenReport report;
  const LevyPath& path = sol.path();
  const double inv_two_t = 1.0 / (2.0 * sol.t());
  const std::size_t n = path.size();
  const std::size_t z = path.grid().zero_index();

  for (std::size_t i = z; i < n; ++i) {
    if (past_bound_holds(path, i, inv_two_t)) {
      report.r_index = i;
      break;
    }
  }
  if (report.r_index) {
    for (std::size_t i = *report.r_index; i < n; ++i) {
      if (future_bound_holds(path, i, inv_two_t)) {
        report.s_index = i;
        break;
      }
    }
  }
  for (std::size_t k : zero_set_vertices(sol)) {
    if (sol.vertex_y(k) >= 0.0) {
      report.t_index = sol.grid_index(k);
      break;
    }
  }
  if (report.r_index) report.R = path.point(*report.r_index);
  if (report.s_index) report.S = path.point(*report.s_index);
  if (report.t_index) report.T_first = path.point(*report.t_index);
  report.s_equals_t = report.s_index && report.t_index && *report.s_index == *report.t_index;
  return report;
}

RkSequence rk_sequence(const LevyPath& path, double t, std::size_t start_index, std::size_t k_max) {
  if (!(t > 0.0)) fail(ErrorKind::parameter, "rk_sequence needs t > 0");
  if (k_max < 1) fail(ErrorKind::parameter, "k_max must be >= 1");
  if (start_index >= path.size()) fail(ErrorKind::out_of_domain, "r_0 outside the grid");
  const double inv_two_t = 1.0 / (2.0 * t);
  const auto values = path.values();
  const auto ys = path.points();

  RkSequence seq;
  seq.indices.push_back(start_index);
  std::size_t r = start_index;
  while (true) {
    const auto best = kernels::parabola_argmax(values.subspan(r), ys.subspan(r), ys[r], inv_two_t);
    const std::size_t next = r + best.index;
    if (next == r) {
      seq.converged = true;
      break;
    }
    if (seq.steps == k_max) break;
    ++seq.steps;
    seq.indices.push_back(next);
    r = next;
  }
  return seq;
}

RegenReport regen_report(const BurgersSolution& sol, std::size_t k_max) {
  RegenReport report = rst_scan(sol);
  if (!report.r_index) return report;
  const std::size_t limit = k_max ? k_max : sol.vertex_count();
  const auto seq = rk_sequence(sol.path(), sol.t(), *report.r_index, limit);
  report.rk_indices = seq.indices;
  for (std::size_t i : seq.indices) report.rk.push_back(sol.path().point(i));
  report.rk_converged = seq.converged;
  report.steps = seq.steps;
  return report;
}

SideFeatures side_features(const BurgersSolution& sol, double lo, double hi, bool include_lo) {
  if (!(hi > lo)) fail(ErrorKind::parameter, "feature interval must have positive length");
  const double t = sol.t();
  SideFeatures f;
  f.min_u = std::numeric_limits<double>::infinity();
  double integral = 0.0;
  for (std::size_t k = sol.vertex_at(lo); k < sol.vertex_count(); ++k) {
    const double a = std::max(sol.x_lo(k), lo);
    const double b = std::min(sol.x_hi(k), hi);
    if (a > hi) break;
    if (!(b > a)) continue;
    const double y = sol.vertex_y(k);
    // u = (x - y) / t is increasing on each constancy interval.
    integral += ((b - y) * (b - y) - (a - y) * (a - y)) / (2.0 * t);
    f.min_u = std::min(f.min_u, (a - y) / t);
  }
  f.mean_u = integral / (hi - lo);
  for (const auto& s : extract_shocks(sol).shocks) {
    const bool inside = include_lo ? (s.x >= lo && s.x < hi) : (s.x > lo && s.x <= hi);
    if (inside) f.shock_count += 1.0;
  }
  return f;
}

stats::PermutationResult feature_permutation_test(const stats::Sample& pre,
                                                  const stats::Sample& post,
                                                  std::size_t permutations, std::uint64_t seed) {
  return stats::dcor_permutation_test(stats::standardize(pre), stats::standardize(post),
                                      permutations, seed);
}

IndependenceResult independence_test(const LevyParams& params, double t, double w,
                                     std::size_t n_rep, std::uint64_t seed, const GridSpec& grid,
                                     std::size_t permutations) {
  validate(params);
  if (n_rep < 100) fail(ErrorKind::parameter, "independence_test needs n_rep >= 100");
  if (!(w > 0.0)) fail(ErrorKind::parameter, "feature window w must be > 0");
  if (!(t > 0.0)) fail(ErrorKind::parameter, "t must be > 0");

  IndependenceResult result;
  result.table.resize(n_rep);
  parallel_for(n_rep, [&](std::size_t r) {
    IndependenceReplicate& rep = result.table[r];
    rep.replicate = r;
    rep.seed = derive_seed(seed, r);
    const auto path = std::make_shared<const LevyPath>(sample_path(params, grid, rep.seed));
    std::optional<BurgersSolution> sol;
    try {
      sol.emplace(solve(path, t));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::window_too_small) throw;
      rep.dropped = true;
      rep.drop_reason = "window_too_small";
      return;
    }
    std::optional<double> first;
    for (std::size_t k : zero_set_vertices(*sol)) {
      if (sol->vertex_y(k) >= 0.0) {
        first = sol->vertex_y(k);
        break;
      }
    }
    if (!first) {
      rep.dropped = true;
      rep.drop_reason = "T_not_found";
      return;
    }
    rep.T = *first;
    if (rep.T - w < sol->window().lo || rep.T + w > sol->window().hi) {
      rep.dropped = true;
      rep.drop_reason = "T_near_boundary";
      return;
    }
    rep.pre = side_features(*sol, rep.T - w, rep.T, true);
    rep.post = side_features(*sol, rep.T, rep.T + w, false);
  });

  stats::Sample pre{0, 3, {}};
  stats::Sample post{0, 3, {}};
  for (const auto& rep : result.table) {
    if (rep.dropped) {
      ++result.dropped;
      continue;
    }
    pre.data.insert(pre.data.end(), {rep.pre.mean_u, rep.pre.min_u, rep.pre.shock_count});
    post.data.insert(post.data.end(), {rep.post.mean_u, rep.post.min_u, rep.post.shock_count});
    ++pre.rows;
    ++post.rows;
  }
  result.used = pre.rows;
  if (static_cast<double>(result.dropped) > kMaxDroppedFraction * static_cast<double>(n_rep)) {
    fail(ErrorKind::insufficient_data, std::to_string(result.dropped) + " of " +
                                           std::to_string(n_rep) + " replicates dropped");
  }
  const auto test =
      feature_permutation_test(pre, post, permutations, derive_seed(seed, 0xD1CE5EEDULL));
  result.p_value = test.p_value;
  result.dcor = test.dcor;
  result.dcov2 = test.statistic;
  result.permutations = test.permutations;
  for (std::size_t c = 0; c < 3; ++c) {
    result.pearson[c] = stats::pearson(pre.column(c), post.column(c));
  }
  return result;
}

std::vector<double> synthetic_calibration(std::size_t n_runs, std::size_t n_rows,
                                          std::size_t permutations, std::uint64_t seed) {
  std::vector<double> p(n_runs);
  parallel_for(n_runs, [&](std::size_t run) {
    Rng rng(derive_seed(seed, run));
    std::normal_distribution<double> normal(0.0, 1.0);
    stats::Sample pre{n_rows, 3, std::vector<double>(n_rows * 3)};
    stats::Sample post{n_rows, 3, std::vector<double>(n_rows * 3)};
    for (double& v : pre.data) v = normal(rng);
    for (double& v : post.data) v = normal(rng);
    p[run] = feature_permutation_test(pre, post, permutations, derive_seed(seed, run + n_runs)).p_value;
  });
  return p;
}

}  // namespace burgers
