#include <immintrin.h>

#include "burgers/kernels.hpp"

// Compiled with -mavx2 only; reached through the dispatcher after a CPUID
// check. No FMA: every lane must round exactly like the scalar reference.

namespace burgers::kernels::avx2 {

namespace {

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

ArgmaxResult parabola_argmax(std::span<const double> values, std::span<const double> ys,
                             double x, double inv_two_t) {
  const std::size_t n = values.size();
  std::size_t i = 0;
  ArgmaxResult best{0, 0.0};
  bool have_best = false;

  if (n >= 4) {
    const __m256d vx = _mm256_set1_pd(x);
    const __m256d vinv = _mm256_set1_pd(inv_two_t);
    __m256d best_val = _mm256_set1_pd(-__builtin_inf());
    __m256i best_idx = _mm256_set1_epi64x(-1);
    __m256i idx = _mm256_set_epi64x(3, 2, 1, 0);
    const __m256i step = _mm256_set1_epi64x(4);
    for (; i + 4 <= n; i += 4) {
      const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + i), vx);
      const __m256d v = _mm256_sub_pd(_mm256_loadu_pd(values.data() + i),
                                      _mm256_mul_pd(_mm256_mul_pd(d, d), vinv));
      const __m256d take = _mm256_cmp_pd(v, best_val, _CMP_GE_OQ);
      best_val = _mm256_blendv_pd(best_val, v, take);
      best_idx = _mm256_castpd_si256(_mm256_blendv_pd(_mm256_castsi256_pd(best_idx),
                                                      _mm256_castsi256_pd(idx), take));
      idx = _mm256_add_epi64(idx, step);
    }
    alignas(32) double lane_val[4];
    alignas(32) long long lane_idx[4];
    _mm256_store_pd(lane_val, best_val);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_idx), best_idx);
    for (int lane = 0; lane < 4; ++lane) {
      if (lane_idx[lane] < 0) continue;
      const auto li = static_cast<std::size_t>(lane_idx[lane]);
      if (!have_best || lane_val[lane] > best.value ||
          (lane_val[lane] == best.value && li > best.index)) {
        best = {li, lane_val[lane]};
        have_best = true;
      }
    }
  }
  for (; i < n; ++i) {
    const double d = ys[i] - x;
    const double v = values[i] - (d * d) * inv_two_t;
    if (!have_best || v >= best.value) {
      best = {i, v};
      have_best = true;
    }
  }
  return best;
}

bool parabola_bound_holds(std::span<const double> values, std::span<const double> ys,
                          double anchor_value, double anchor_y, double inv_two_t, bool strict) {
  const std::size_t n = values.size();
  std::size_t j = 0;
  const __m256d vay = _mm256_set1_pd(anchor_y);
  const __m256d vav = _mm256_set1_pd(anchor_value);
  const __m256d vinv = _mm256_set1_pd(inv_two_t);
  for (; j + 4 <= n; j += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + j), vay);
    const __m256d lhs = _mm256_sub_pd(_mm256_loadu_pd(values.data() + j), vav);
    const __m256d rhs = _mm256_mul_pd(_mm256_mul_pd(d, d), vinv);
    const __m256d bad = strict ? _mm256_cmp_pd(lhs, rhs, _CMP_NLT_UQ)
                               : _mm256_cmp_pd(lhs, rhs, _CMP_NLE_UQ);
    if (_mm256_movemask_pd(bad) != 0) return false;
  }
  for (; j < n; ++j) {
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
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m128i cols = _mm_loadu_si128(reinterpret_cast<const __m128i*>(perm.data() + j));
      const __m256d gathered = _mm256_i32gather_pd(brow, cols, 8);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(arow + j), gathered));
    }
    double row = horizontal_sum(acc);
    for (; j < n; ++j) row += arow[j] * brow[perm[j]];
    total += row;
  }
  return total;
}

}  // namespace burgers::kernels::avx2
