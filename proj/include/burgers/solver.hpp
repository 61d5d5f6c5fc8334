#pragma once

// Hopf-Cole entropy solution of inviscid Burgers from a grid potential.
//
// The Lagrangian point a(x) maximizes psi0(y) - (y - x)^2 / 2t. Expanding the
// square, it maximizes [psi0(y) - y^2 / 2t] + x y / t, so a(x) is the vertex of
// the concave majorant of the shifted potential whose slope interval contains
// -x/t. Vertex k therefore owns the Eulerian interval
//   X_k = [-t * left_slope(k), -t * right_slope(k)),
// and consecutive intervals share the shock point between them.

#include <cstddef>
#include <limits>
#include <memory>
#include <vector>

#include "burgers/hull.hpp"
#include "burgers/levy.hpp"

namespace burgers {

struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  bool operator==(const Interval&) const = default;
};

struct SolveOptions {
  // Width trimmed from each grid end to form the analysis window. NaN selects
  // the default of a quarter of the grid span.
  double window_margin = std::numeric_limits<double>::quiet_NaN();
  // Reject solutions whose first or last grid point owns part of the window.
  bool check_boundary = true;
};

struct PointSolution {
  double a;
  double a_left;  // a(x-)
  double u;
  double u_left;  // u(x-)
  std::size_t vertex;
};

class BurgersSolution {
 public:
  BurgersSolution(std::shared_ptr<const LevyPath> path, double t, ConcaveMajorant majorant,
                  Interval window);

  double t() const noexcept { return t_; }
  const LevyPath& path() const noexcept { return *path_; }
  std::shared_ptr<const LevyPath> path_ptr() const noexcept { return path_; }
  const ConcaveMajorant& majorant() const noexcept { return majorant_; }
  const Interval& window() const noexcept { return window_; }
  // Eulerian range covered by queries: the grid span.
  Interval covered() const noexcept;

  std::size_t vertex_count() const noexcept { return majorant_.size(); }
  double vertex_y(std::size_t k) const noexcept { return majorant_.ys()[k]; }
  std::size_t grid_index(std::size_t k) const noexcept { return majorant_.source_indices()[k]; }
  // Endpoints of X_k; -inf / +inf at the chain ends.
  double x_lo(std::size_t k) const noexcept { return x_lo_[k]; }
  double x_hi(std::size_t k) const noexcept { return x_hi_[k]; }
  // X_k not contained in the analysis window.
  bool boundary_affected(std::size_t k) const noexcept { return boundary_[k] != 0; }

  // Vertex k with x in [x_lo(k), x_hi(k)); shock points go to the right vertex.
  std::size_t vertex_at(double x) const noexcept;

 private:
  std::shared_ptr<const LevyPath> path_;
  double t_;
  ConcaveMajorant majorant_;
  Interval window_;
  std::vector<double> x_lo_;
  std::vector<double> x_hi_;
  std::vector<unsigned char> boundary_;
};

BurgersSolution solve(std::shared_ptr<const LevyPath> path, double t, const SolveOptions& options = {});
BurgersSolution solve(const LevyPath& path, double t, const SolveOptions& options = {});

// a(x), a(x-), u(x), u(x-) for x in the covered range.
PointSolution evaluate_solution(const BurgersSolution& sol, double x);

struct NaiveArgmax {
  std::size_t index;
  double a;
};

// Brute-force oracle: for each x the largest grid y maximizing
// psi0(y) - (y - x)^2 / 2t.
std::vector<NaiveArgmax> solve_naive(const LevyPath& path, double t, std::span<const double> xs);

// Position at time t of the particle that started at a: the left end of the
// owning interval for particles swallowed by a shock, and the point of X_k
// nearest to a when a is itself a vertex.
double lagrangian_position(const BurgersSolution& sol, double a);

// sup_y psi0(y) - (y - x)^2 / 2t over the grid.
double moreau_envelope(const BurgersSolution& sol, double x);

// Vertices that are fixed points of the proximal map, y_k in closed X_k.
std::vector<std::size_t> prox_fixed_points(const BurgersSolution& sol);

}  // namespace burgers
