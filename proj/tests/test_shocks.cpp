#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "burgers/errors.hpp"
#include "burgers/shocks.hpp"
#include "support/fixtures.hpp"

namespace {

using namespace burgers;
using burgers::testing::fixture;

constexpr double h = burgers::testing::kFixtureStep;

TEST(ShocksZero, NoShocksAndEveryPointIsAZero) {
  const auto sol = solve(fixture("zero"), 1.0);
  const auto r = extract_shocks(sol);
  EXPECT_TRUE(r.shocks.empty());
  EXPECT_EQ(r.window, (Interval{-2.0, 2.0}));
  EXPECT_EQ(r.contacts.size(), 401u);
  EXPECT_EQ(r.zero_set, r.contacts);
  ASSERT_EQ(r.rarefactions.size(), 401u);  // the two end cells are clipped to half length
  for (std::size_t i = 1; i + 1 < r.rarefactions.size(); ++i) {
    ASSERT_NEAR(r.rarefactions[i].length, h, 1e-12);
  }
}

TEST(ShocksZero, SignPatternHasNoGaps) {
  const auto s = sign_pattern(solve(fixture("zero"), 1.0));
  EXPECT_TRUE(s.gaps.empty());
  EXPECT_TRUE(s.violations.empty());
}

TEST(ShocksZero, WindowStats) {
  const auto st = window_stats(solve(fixture("zero"), 1.0), {-2.0, 2.0});
  EXPECT_EQ(st.contacts, 401u);
  EXPECT_EQ(st.zero_set, 401u);
  EXPECT_EQ(st.grid_points, 401u);
  EXPECT_NEAR(st.max_rarefaction, h, 1e-12);
}

TEST(ShocksZero, EpsilonRegularContactsAreTheInteriorOnes) {
  const auto r = extract_shocks(solve(fixture("zero"), 1.0));
  const auto reg = epsilon_regular_contacts(r, 10 * h);
  EXPECT_EQ(reg.size(), 399u);
  EXPECT_EQ(reg.front(), r.contacts[1]);
}

TEST(ShocksJumpUp, OneShockWithHandComputedValues) {
  const auto sol = solve(fixture("jump_up"), 1.0);
  const auto r = extract_shocks(sol);
  ASSERT_EQ(r.shocks.size(), 1u);
  const auto& s = r.shocks[0];
  EXPECT_NEAR(s.x, -1.0, 1e-12);
  EXPECT_EQ(s.a_minus, -1.0);
  EXPECT_EQ(s.a_plus, 0.0);
  EXPECT_EQ(s.mass, 1.0);
  EXPECT_NEAR(s.velocity, -0.5, 1e-12);
  EXPECT_FALSE(s.boundary_affected);
  const auto p = evaluate_solution(sol, s.x);
  EXPECT_NEAR(0.5 * (p.u_left + p.u), s.velocity, 1e-12);
}

TEST(ShocksJumpUp, RarefactionOfLengthOneAtTheJump) {
  const auto r = extract_shocks(solve(fixture("jump_up"), 1.0));
  const auto it = std::find_if(r.rarefactions.begin(), r.rarefactions.end(),
                               [](const Rarefaction& x) { return x.y == 0.0; });
  ASSERT_NE(it, r.rarefactions.end());
  EXPECT_NEAR(it->length, 1.0, 2 * h);
  EXPECT_NEAR(it->x_lo, -1.0, 1e-12);
}

TEST(ShocksJumpUp, ZeroSetSkipsTheShockInterval) {
  const auto r = extract_shocks(solve(fixture("jump_up"), 1.0));
  for (double z : r.zero_set) EXPECT_TRUE(z <= -1.0 || z >= 0.0) << z;
  EXPECT_TRUE(std::binary_search(r.zero_set.begin(), r.zero_set.end(), -1.0));
  EXPECT_TRUE(std::binary_search(r.zero_set.begin(), r.zero_set.end(), 0.0));
}

TEST(ShocksJumpUp, SingleNegativeGap) {
  const auto s = sign_pattern(solve(fixture("jump_up"), 1.0));
  ASSERT_EQ(s.gaps.size(), 1u);
  EXPECT_EQ(s.gaps[0].lo, -1.0);
  EXPECT_EQ(s.gaps[0].hi, 0.0);
  EXPECT_FALSE(s.gaps[0].has_positive_phase);
  EXPECT_TRUE(s.gaps[0].has_negative_phase);
  EXPECT_TRUE(s.violations.empty());
}

TEST(ShocksJumpUp, JumpSignAgreement) {
  const auto path = fixture("jump_up");
  const auto c = contact_jump_signs(solve(path, 1.0), *path);
  EXPECT_EQ(c.agreements, 1u);
  EXPECT_EQ(c.disagreements, 0u);
}

TEST(ShocksJumpDown, OneShockNearOne) {
  const auto sol = solve(fixture("jump_down"), 1.0);
  const auto r = extract_shocks(sol);
  ASSERT_EQ(r.shocks.size(), 1u);
  const auto& s = r.shocks[0];
  EXPECT_NEAR(s.x, 1.0, 2 * h);
  EXPECT_NEAR(s.a_minus, 0.0, 2 * h);
  EXPECT_NEAR(s.a_plus, 1.0, 2 * h);
  EXPECT_NEAR(s.mass, 1.0, 2 * h);
  EXPECT_NEAR(s.velocity, 0.5, 2 * h);
  const auto p = evaluate_solution(sol, s.x);
  EXPECT_NEAR(0.5 * (p.u_left + p.u), s.velocity, 1e-9);
}

TEST(ShocksJumpDown, JumpSignAgreement) {
  const auto path = fixture("jump_down");
  const auto c = contact_jump_signs(solve(path, 1.0), *path);
  EXPECT_GE(c.agreements, 1u);
  EXPECT_EQ(c.disagreements, 0u);
}

TEST(ShocksBrownian, NoTrackedJumpsMeansNothingToCompare) {
  const auto grid = GridSpec::symmetric(8.0, 2049);
  for (std::uint64_t seed = 0;; ++seed) {
    const auto path = std::make_shared<const LevyPath>(sample_path(Brownian{1.0}, grid, seed));
    try {
      const auto c = contact_jump_signs(solve(path, 1.0), *path);
      EXPECT_EQ(c.agreements, 0u);
      EXPECT_EQ(c.disagreements, 0u);
      EXPECT_GT(c.untracked, 0u);
      return;
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::window_too_small);
    }
  }
}

class ShockProperties : public ::testing::TestWithParam<int> {};

TEST_P(ShockProperties, Hold) {
  const int i = GetParam();
  const LevyParams params = i % 3 == 0   ? LevyParams{Stable{0.75, 0.0, 1.0}}
                            : i % 3 == 1 ? LevyParams{Stable{1.5, 0.0, 1.0}}
                                         : LevyParams{Brownian{1.0}};
  const auto grid = GridSpec::symmetric(8.0, 4097);
  std::optional<BurgersSolution> sol;
  for (std::uint64_t seed = 100 * i; !sol; ++seed) {
    try {
      sol.emplace(solve(sample_path(params, grid, seed), 1.0));
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::window_too_small);
    }
  }
  const auto r = extract_shocks(*sol);
  const double step = grid.step();

  for (const auto& s : r.shocks) {
    ASSERT_LT(s.a_minus, s.a_plus);
    ASSERT_GE(s.mass, step * (1 - 1e-9));
    if (s.boundary_affected) continue;
    const auto p = evaluate_solution(*sol, s.x);
    ASSERT_LE(std::abs(s.velocity - 0.5 * (p.u_left + p.u)), 1e-9 * (1 + std::abs(s.velocity)));
  }

  // zero set within the contacts
  for (double z : r.zero_set) ASSERT_TRUE(std::binary_search(r.contacts.begin(), r.contacts.end(), z));

  // rarefactions are disjoint and tile the window
  double total = 0.0;
  for (std::size_t k = 0; k < r.rarefactions.size(); ++k) {
    total += r.rarefactions[k].length;
    if (k) {
      ASSERT_EQ(r.rarefactions[k - 1].x_hi, r.rarefactions[k].x_lo);
    }
  }
  EXPECT_NEAR(total, r.window.length(), 1e-9);
  EXPECT_EQ(r.rarefactions.front().x_lo, r.window.lo);
  EXPECT_EQ(r.rarefactions.back().x_hi, r.window.hi);

  // zero set matches the prox fixed points restricted to the window
  std::vector<std::size_t> prox;
  for (std::size_t k : prox_fixed_points(*sol)) {
    if (r.window.contains(sol->vertex_y(k))) prox.push_back(k);
  }
  EXPECT_EQ(prox, r.zero_vertices);

  // no negative-to-positive sign change between consecutive zeros
  EXPECT_TRUE(sign_pattern(*sol).violations.empty());
}

INSTANTIATE_TEST_SUITE_P(Shocks, ShockProperties, ::testing::Range(0, 12));

TEST(Refinement, DegenerateFamilyHasFullContactFraction) {
  const std::vector<double> hs = {1.0 / 16, 1.0 / 32, 1.0 / 64};
  const auto rows = refinement_study(Brownian{0.0}, 1.0, 8.0, hs, 3, 1, {1.0, 2.0});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.contact_fraction, 1.0);
    EXPECT_NEAR(row.median_max_rarefaction, row.h, 1e-12);
    EXPECT_EQ(row.failures, 0u);
    EXPECT_EQ(row.replicates, 3u);
  }
}

TEST(Refinement, NonNestedStepsSampleIndependently) {
  const std::vector<double> hs = {0.1, 1.0 / 16};
  const auto rows = refinement_study(Brownian{0.0}, 1.0, 8.0, hs, 2, 1, {1.0, 2.0});
  EXPECT_EQ(rows[0].contact_fraction, 1.0);
  EXPECT_EQ(rows[1].contact_fraction, 1.0);
}

TEST(Refinement, ValidatesArguments) {
  const std::vector<double> up = {1.0 / 64, 1.0 / 32};
  EXPECT_THROW(refinement_study(Brownian{1.0}, 1.0, 8.0, up, 2, 1, {1.0, 2.0}), Error);
  const std::vector<double> ok = {1.0 / 32};
  EXPECT_THROW(refinement_study(Brownian{1.0}, 1.0, 8.0, ok, 0, 1, {1.0, 2.0}), Error);
  EXPECT_THROW(refinement_study(Brownian{1.0}, 1.0, 8.0, ok, 2, 1, {2.0, 1.0}), Error);
}

TEST(Refinement, ResultDoesNotDependOnThreadScheduling) {
  const std::vector<double> hs = {1.0 / 32, 1.0 / 64};
  const auto a = refinement_study(Stable{1.5, 0.0, 1.0}, 1.0, 8.0, hs, 6, 42, {1.0, 2.0});
  const auto b = refinement_study(Stable{1.5, 0.0, 1.0}, 1.0, 8.0, hs, 6, 42, {1.0, 2.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].median_contacts, b[i].median_contacts);
    EXPECT_EQ(a[i].median_max_rarefaction, b[i].median_max_rarefaction);
    EXPECT_EQ(a[i].contact_fraction, b[i].contact_fraction);
  }
}

}  // namespace
