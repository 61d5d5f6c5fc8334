#include "burgers/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_abs(std::initializer_list<double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

ConcaveMajorant::ConcaveMajorant(std::vector<double> ys, std::vector<double> values,
                                 std::vector<std::size_t> source_indices)
    : ys_(std::move(ys)), values_(std::move(values)), sources_(std::move(source_indices)) {
  slopes_.resize(ys_.empty() ? 0 : ys_.size() - 1);
  for (std::size_t k = 0; k + 1 < ys_.size(); ++k) {
    slopes_[k] = (values_[k + 1] - values_[k]) / (ys_[k + 1] - ys_[k]);
  }
}

double ConcaveMajorant::left_slope(std::size_t k) const noexcept {
  return k == 0 ? kInf : slopes_[k - 1];
}

double ConcaveMajorant::right_slope(std::size_t k) const noexcept {
  return k + 1 >= ys_.size() ? -kInf : slopes_[k];
}

MajorantQuery ConcaveMajorant::query(double y) const {
  if (ys_.empty() || !(y >= ys_.front() && y <= ys_.back())) {
    fail(ErrorKind::out_of_domain, "majorant query at y = " + std::to_string(y) +
                                       " outside the vertex range");
  }
  const auto it = std::lower_bound(ys_.begin(), ys_.end(), y);
  const auto k = static_cast<std::size_t>(it - ys_.begin());
  if (ys_[k] == y) return {values_[k], left_slope(k), right_slope(k)};
  // Strictly inside edge k-1.
  const std::size_t e = k - 1;
  const double value = values_[e] + slopes_[e] * (y - ys_[e]);
  return {value, slopes_[e], slopes_[e]};
}

ConcaveMajorant upper_concave_majorant(std::span<const double> ys, std::span<const double> values) {
  const std::size_t n = ys.size();
  if (n != values.size()) fail(ErrorKind::input, "ys and values differ in length");
  if (n < 2) fail(ErrorKind::input, "concave majorant needs at least 2 points");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(ys[i]) || !std::isfinite(values[i])) {
      fail(ErrorKind::input, "point cloud must be finite");
    }
    if (i > 0 && !(ys[i] > ys[i - 1])) {
      fail(ErrorKind::input, "ys must be strictly increasing (index " + std::to_string(i) + ")");
    }
  }

  std::vector<std::size_t> chain;
  chain.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    while (chain.size() >= 2) {
      const std::size_t o = chain[chain.size() - 2];
      const std::size_t m = chain.back();
      const double cross = (ys[m] - ys[o]) * (values[i] - values[o]) -
                           (values[m] - values[o]) * (ys[i] - ys[o]);
      const double scale =
          max_abs({ys[o], values[o], ys[m], values[m], ys[i], values[i]});
      // m on or below the chord o -> i
      if (cross >= -kCollinearTolerance * scale) {
        chain.pop_back();
      } else {
        break;
      }
    }
    chain.push_back(i);
  }

  std::vector<double> hy(chain.size());
  std::vector<double> hv(chain.size());
  for (std::size_t k = 0; k < chain.size(); ++k) {
    hy[k] = ys[chain[k]];
    hv[k] = values[chain[k]];
  }
  return ConcaveMajorant(std::move(hy), std::move(hv), std::move(chain));
}

}  // namespace burgers
