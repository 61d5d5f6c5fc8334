#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "oracles/oracles.hpp"

namespace burgers::oracle {

double stable_cdf(double x, double alpha, double beta, double scale) {
  const double skew = beta * std::tan(M_PI * alpha / 2.0);
  // F(x) = 1/2 + (1/pi) int_0^inf exp(-(cu)^a) sin(ux - skew (cu)^a) / u du
  auto integrand = [&](double u) {
    if (u == 0.0) return x;  // quadrature never evaluates the endpoint
    const double cu = std::pow(scale * u, alpha);
    return std::exp(-cu) * std::sin(u * x - skew * cu) / u;
  };
  // Split at u = 1: the head is smooth on a finite interval, the tail decays.
  boost::math::quadrature::tanh_sinh<double> head;
  boost::math::quadrature::exp_sinh<double> tail;
  const double i1 = head.integrate(integrand, 0.0, 1.0);
  const double i2 = tail.integrate(integrand, 1.0, std::numeric_limits<double>::infinity());
  return 0.5 + (i1 + i2) / M_PI;
}

double stable_quantile(double p, double alpha, double beta, double scale) {
  double lo = -50.0 * scale, hi = 50.0 * scale;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    (stable_cdf(mid, alpha, beta, scale) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<std::size_t> brute_force_hull(std::span<const double> ys, std::span<const double> vs) {
  const std::size_t n = ys.size();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < j && !dominated; ++i) {
      for (std::size_t k = j + 1; k < n && !dominated; ++k) {
        const long double w = (static_cast<long double>(ys[j]) - ys[i]) / (static_cast<long double>(ys[k]) - ys[i]);
        const long double chord = vs[i] + w * (static_cast<long double>(vs[k]) - vs[i]);
        if (chord >= vs[j]) dominated = true;
      }
    }
    if (!dominated) out.push_back(j);
  }
  return out;
}

}  // namespace burgers::oracle
