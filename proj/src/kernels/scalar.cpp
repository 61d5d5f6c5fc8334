#include "burgers/kernels.hpp"

namespace burgers::kernels::scalar {

ArgmaxResult parabola_argmax(std::span<const double> values, std::span<const double> ys,
                             double x, double inv_two_t) {
  ArgmaxResult best{0, values[0] - ((ys[0] - x) * (ys[0] - x)) * inv_two_t};
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double d = ys[i] - x;
    const double v = values[i] - (d * d) * inv_two_t;
    if (v >= best.value) best = {i, v};
  }
  return best;
}

bool parabola_bound_holds(std::span<const double> values, std::span<const double> ys,
                          double anchor_value, double anchor_y, double inv_two_t, bool strict) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double d = ys[j] - anchor_y;
    const double lhs = values[j] - anchor_value;
    const double rhs = (d * d) * inv_two_t;
    if (strict ? !(lhs < rhs) : !(lhs <= rhs)) return false;
  }
  return true;
}

double permuted_inner_product(std::span<const double> a, std::span<const double> b,
                              std::span<const std::uint32_t> perm) {
  const std::size_t n = perm.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* arow = a.data() + i * n;
    const double* brow = b.data() + static_cast<std::size_t>(perm[i]) * n;
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += arow[j] * brow[perm[j]];
    total += row;
  }
  return total;
}

}  // namespace burgers::kernels::scalar
