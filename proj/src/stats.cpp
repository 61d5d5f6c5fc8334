#include "burgers/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "burgers/errors.hpp"
#include "burgers/kernels.hpp"
#include "burgers/rng.hpp"

namespace burgers::stats {

double median(std::vector<double> xs) {
  if (xs.empty()) fail(ErrorKind::insufficient_data, "median of an empty sample");
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  const double upper = xs[mid];
  if (xs.size() % 2 == 1) return upper;
  const double lower = *std::max_element(xs.begin(), xs.begin() + mid);
  return 0.5 * (lower + upper);
}

double pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) fail(ErrorKind::insufficient_data, "pearson needs paired samples");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> Sample::column(std::size_t c) const {
  std::vector<double> out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

Sample standardize(const Sample& s) {
  Sample out = s;
  if (s.rows < 2) return out;
  for (std::size_t c = 0; c < s.cols; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < s.rows; ++r) mean += s.at(r, c);
    mean /= static_cast<double>(s.rows);
    double var = 0.0;
    for (std::size_t r = 0; r < s.rows; ++r) var += (s.at(r, c) - mean) * (s.at(r, c) - mean);
    const double sd = std::sqrt(var / static_cast<double>(s.rows - 1));
    for (std::size_t r = 0; r < s.rows; ++r) {
      out.data[r * s.cols + c] = sd > 0.0 ? (s.at(r, c) - mean) / sd : 0.0;
    }
  }
  return out;
}

std::vector<double> centered_distances(const Sample& s) {
  const std::size_t n = s.rows;
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t c = 0; c < s.cols; ++c) {
        const double diff = s.at(i, c) - s.at(j, c);
        acc += diff * diff;
      }
      d[i * n + j] = d[j * n + i] = std::sqrt(acc);
    }
  }
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += d[i * n + j];
    grand += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  grand /= static_cast<double>(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] += grand - row_mean[i] - row_mean[j];
  }
  return d;
}

namespace {

double frobenius(const std::vector<double>& a, const std::vector<double>& b) {
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

void check_paired(const Sample& x, const Sample& y) {
  if (x.rows != y.rows || x.rows < 2) {
    fail(ErrorKind::insufficient_data, "distance correlation needs >= 2 paired rows");
  }
}

}  // namespace

DistanceCorrelation distance_correlation(const Sample& x, const Sample& y) {
  check_paired(x, y);
  const auto a = centered_distances(x);
  const auto b = centered_distances(y);
  const double n2 = static_cast<double>(x.rows) * static_cast<double>(x.rows);
  const double dcov2 = frobenius(a, b) / n2;
  const double vx = frobenius(a, a) / n2;
  const double vy = frobenius(b, b) / n2;
  const double denom = std::sqrt(vx * vy);
  const double dcor = denom > 0.0 ? std::sqrt(std::max(dcov2, 0.0) / denom) : 0.0;
  return {dcov2, dcor};
}

PermutationResult dcor_permutation_test(const Sample& x, const Sample& y, std::size_t permutations,
                                        std::uint64_t seed) {
  check_paired(x, y);
  const std::size_t n = x.rows;
  const auto a = centered_distances(x);
  const auto b = centered_distances(y);
  const double n2 = static_cast<double>(n) * static_cast<double>(n);

  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  const double observed = kernels::permuted_inner_product(a, b, perm) / n2;
  // Relative slack so that permutations equal to the observed statistic up
  // to summation order are counted as ties.
  const double slack = 1e-12 * std::abs(observed);

  Rng rng(seed);
  std::size_t at_least = 0;
  for (std::size_t p = 0; p < permutations; ++p) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const double stat = kernels::permuted_inner_product(a, b, perm) / n2;
    if (stat >= observed - slack) ++at_least;
  }
  const auto dc = distance_correlation(x, y);
  return {observed, dc.dcor,
          static_cast<double>(1 + at_least) / static_cast<double>(1 + permutations), permutations};
}

double ks_distance_uniform(std::vector<double> values) {
  if (values.empty()) fail(ErrorKind::insufficient_data, "KS distance of an empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double p = std::clamp(values[i], 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / n - p, p - static_cast<double>(i) / n});
  }
  return d;
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) fail(ErrorKind::insufficient_data, "KS test needs two samples");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  // Kolmogorov tail series Q(lambda) = 2 sum (-1)^(k-1) exp(-2 k^2 lambda^2)
  double q = 0.0;
  if (lambda < 1e-3) {
    q = 1.0;
  } else {
    double sign = 1.0;
    for (int k = 1; k <= 100; ++k) {
      const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
      q += term;
      if (std::abs(term) < 1e-12) break;
      sign = -sign;
    }
    q = std::clamp(2.0 * q, 0.0, 1.0);
  }
  return {d, q};
}

}  // namespace burgers::stats
