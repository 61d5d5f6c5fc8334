#pragma once

// Independent reference computations used only by tests.

#include <cstddef>
#include <span>
#include <vector>

namespace burgers::oracle {

// CDF of the 1-parametrization stable law S(alpha, beta, scale, 0), alpha != 1,
// by Gil-Pelaez inversion of the characteristic function.
double stable_cdf(double x, double alpha, double beta, double scale);
// Quantile by bisection on stable_cdf.
double stable_quantile(double p, double alpha, double beta, double scale);

// Indices of points not strictly below-or-on a chord of two other points
// (one on each side). O(n^3).
std::vector<std::size_t> brute_force_hull(std::span<const double> ys, std::span<const double> vs);

}  // namespace burgers::oracle
