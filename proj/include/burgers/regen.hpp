#pragma once

// Constructions around the first non-negative zero-velocity point T:
// the direct scans R <= S <= T, the iterated arg-sup sequence r_k, and a
// permutation test of independence between the solution before and after T.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burgers/levy.hpp"
#include "burgers/solver.hpp"
#include "burgers/stats.hpp"

namespace burgers {

struct RegenReport {
  std::optional<std::size_t> r_index;
  std::optional<std::size_t> s_index;
  std::optional<std::size_t> t_index;
  std::optional<double> R;
  std::optional<double> S;
  std::optional<double> T_first;
  std::vector<std::size_t> rk_indices;
  std::vector<double> rk;
  bool s_equals_t = false;
  bool rk_converged = false;
  std::size_t steps = 0;
};

// R: first grid y >= 0 with psi(y - x) - psi(y) <= x^2 / 2t for all x > 0.
// S: first grid y >= R with psi(y + x) - psi(y) < x^2 / 2t for all x > 0.
// T_first: smallest non-negative zero-set vertex of the solution.
// Missing entries stay empty (not-found).
RegenReport rst_scan(const BurgersSolution& sol);

struct RkSequence {
  std::vector<std::size_t> indices;
  bool converged = false;
  std::size_t steps = 0;
};

// r_0 = start_index; r_{k+1} = r_k + largest argsup_{x >= 0} psi(r_k + x) - x^2 / 2t.
// Stops at the first fixed point or after k_max moves.
RkSequence rk_sequence(const LevyPath& path, double t, std::size_t start_index, std::size_t k_max);

// rst_scan followed by the r_k iteration from R (k_max = 0 selects the
// vertex count of the solution).
RegenReport regen_report(const BurgersSolution& sol, std::size_t k_max = 0);

struct SideFeatures {
  double mean_u = 0.0;
  double min_u = 0.0;
  double shock_count = 0.0;
};

// Exact mean and infimum of u over [lo, hi] and the number of shocks located in
// [lo, hi) (include_lo) or (lo, hi] (otherwise).
SideFeatures side_features(const BurgersSolution& sol, double lo, double hi, bool include_lo);

struct IndependenceReplicate {
  std::size_t replicate = 0;
  std::uint64_t seed = 0;
  bool dropped = false;
  std::string drop_reason;
  double T = 0.0;
  SideFeatures pre;
  SideFeatures post;
};

struct IndependenceResult {
  double p_value = 1.0;
  double dcor = 0.0;
  double dcov2 = 0.0;
  std::array<double, 3> pearson{};
  std::size_t permutations = 0;
  std::size_t used = 0;
  std::size_t dropped = 0;
  std::vector<IndependenceReplicate> table;
};

inline constexpr std::size_t kDefaultPermutations = 999;
inline constexpr double kMaxDroppedFraction = 0.2;

// Features of u on [T - w, T) and (T, T + w] across n_rep seeded paths on
// `grid`, compared by a distance-correlation permutation test. Only
// low-dimensional functionals are compared, so the test can fail to detect
// dependence but cannot confirm full independence.
IndependenceResult independence_test(const LevyParams& params, double t, double w,
                                     std::size_t n_rep, std::uint64_t seed, const GridSpec& grid,
                                     std::size_t permutations = kDefaultPermutations);

// Permutation p-value for standardized features (rows paired).
stats::PermutationResult feature_permutation_test(const stats::Sample& pre,
                                                  const stats::Sample& post,
                                                  std::size_t permutations, std::uint64_t seed);

// p-values of the permutation test on n_runs synthetic data sets with
// independent standard Gaussian pre/post features (n_rows x 3 each).
std::vector<double> synthetic_calibration(std::size_t n_runs, std::size_t n_rows,
                                          std::size_t permutations, std::uint64_t seed);

}  // namespace burgers
