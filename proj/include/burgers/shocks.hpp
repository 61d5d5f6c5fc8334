#pragma once

// Shock structure of a solved grid potential: shocks with their Lagrangian
// intervals and velocities, contact points, the zero-velocity set, Eulerian
// constancy intervals, and the diagnostics built on them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "burgers/levy.hpp"
#include "burgers/solver.hpp"

namespace burgers {

struct Shock {
  double x;
  double a_minus;
  double a_plus;
  double mass;
  double velocity;
  bool boundary_affected;
  std::size_t left_vertex;
};

struct Rarefaction {
  double y;
  double x_lo;
  double x_hi;
  double length;
  std::size_t vertex;
};

struct ShockReport {
  std::vector<Shock> shocks;
  std::vector<double> contacts;
  std::vector<std::size_t> contact_vertices;
  std::vector<double> zero_set;
  std::vector<std::size_t> zero_vertices;
  std::vector<Rarefaction> rarefactions;
  Interval window;
};

// A hull edge is a shock when its end vertices are not neighbouring grid
// points; edges between neighbours only resolve the grid.
ShockReport extract_shocks(const BurgersSolution& sol);

// Vertices y_k with right_slope(k) <= -y_k / t <= left_slope(k), over the whole
// grid (no window restriction).
std::vector<std::size_t> zero_set_vertices(const BurgersSolution& sol);

// Contacts with other contacts in both (y - eps, y) and (y, y + eps).
std::vector<double> epsilon_regular_contacts(const ShockReport& report, double eps);

struct SignGap {
  double lo;
  double hi;
  bool has_positive_phase;
  bool has_negative_phase;
};

struct SignViolation {
  double x_from;  // where u < 0 was seen
  double x_to;    // where u > 0 followed
};

struct SignPatternReport {
  std::vector<SignViolation> violations;
  std::vector<SignGap> gaps;
};

// Sign of u between consecutive zero-set elements in the window, sampled at
// both sides of every interval boundary and at every interval midpoint.
// Pairs at neighbouring grid points do not form a gap.
SignPatternReport sign_pattern(const BurgersSolution& sol);

struct JumpSignCounts {
  std::size_t agreements = 0;
  std::size_t disagreements = 0;
  std::size_t untracked = 0;
};

// For interior vertices whose Eulerian interval lies on one side of y_k (with
// one grid step of slack), compare the side with the sign of a tracked jump
// within one step: X_k below y_k expects an upward jump, above a downward one.
JumpSignCounts contact_jump_signs(const BurgersSolution& sol, const LevyPath& path);

struct WindowStats {
  std::size_t contacts = 0;
  std::size_t zero_set = 0;
  double max_rarefaction = 0.0;
  std::size_t grid_points = 0;
};

// Lagrangian counts for vertices with y in the window and the longest X_k
// restricted to the window.
WindowStats window_stats(const BurgersSolution& sol, Interval window);

struct RefinementRow {
  double h;
  double median_contacts;
  double median_zero_set;
  double median_max_rarefaction;
  double contact_fraction;
  std::size_t replicates;
  std::size_t failures;
};

// For each step in h_list (strictly decreasing) solves n_rep seeded paths on
// [-L, L] and reports medians of the window statistics. When every h is an
// integer multiple of the finest one, each replicate is sampled once at the
// finest step and restricted to the coarser grids.
std::vector<RefinementRow> refinement_study(const LevyParams& params, double t, double L,
                                            std::span<const double> h_list, std::size_t n_rep,
                                            std::uint64_t seed, Interval window);

}  // namespace burgers
