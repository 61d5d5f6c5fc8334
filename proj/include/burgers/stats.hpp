#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace burgers::stats {

double median(std::vector<double> xs);
double pearson(std::span<const double> x, std::span<const double> y);

// Row-major sample matrix: rows are observations, cols features.
struct Sample {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::vector<double> column(std::size_t c) const;
};

// Each column shifted to mean 0 and scaled to unit sample stddev; constant
// columns become 0.
Sample standardize(const Sample& s);

// Double-centred Euclidean distance matrix (n x n, row-major).
std::vector<double> centered_distances(const Sample& s);

struct DistanceCorrelation {
  double dcov2;  // V-statistic
  double dcor;
};

DistanceCorrelation distance_correlation(const Sample& x, const Sample& y);

struct PermutationResult {
  double statistic;  // observed squared distance covariance
  double dcor;
  double p_value;    // (1 + #{permuted >= observed}) / (1 + permutations)
  std::size_t permutations;
};

// Permutation test of independence between paired rows of x and y; y rows
// are permuted.
PermutationResult dcor_permutation_test(const Sample& x, const Sample& y, std::size_t permutations,
                                        std::uint64_t seed);

// sup |F_n(p) - p| of a sample against Uniform(0, 1).
double ks_distance_uniform(std::vector<double> values);

struct KsResult {
  double statistic;
  double p_value;
};

// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace burgers::stats
