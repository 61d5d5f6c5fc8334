#pragma once

// Data-parallel inner loops shared by the solver oracle, the regeneration
// scans and the permutation test. Each kernel has a scalar reference
// implementation and, where the CPU supports it, an AVX2 variant selected at
// runtime. Variants are required to return bit-identical results for the
// comparison kernels (argmax, bound checks); the reduction kernel may differ
// by summation order only.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace burgers::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

// Whether this binary and CPU can run the variant.
bool isa_available(Isa isa);

// Variant used by the dispatched entry points. Defaults to the best
// available ISA; BURGERS_ISA=scalar in the environment forces the reference.
Isa active_isa();

// Tests use this to pin a variant. Throws if unavailable.
void set_active_isa(Isa isa);

struct ArgmaxResult {
  std::size_t index;
  double value;
};

// Largest index i maximizing values[i] - (ys[i] - x)^2 * inv_two_t.
// values and ys must have equal, nonzero length.
ArgmaxResult parabola_argmax(std::span<const double> values, std::span<const double> ys,
                             double x, double inv_two_t);

// True iff for every j: values[j] - anchor_value <= (ys[j] - anchor_y)^2 * inv_two_t
// (or < when strict). Empty ranges hold vacuously.
bool parabola_bound_holds(std::span<const double> values, std::span<const double> ys,
                          double anchor_value, double anchor_y, double inv_two_t, bool strict);

// sum_{i,j} a[i*n + j] * b[perm[i]*n + perm[j]] for n x n row-major matrices.
double permuted_inner_product(std::span<const double> a, std::span<const double> b,
                              std::span<const std::uint32_t> perm);

namespace scalar {
ArgmaxResult parabola_argmax(std::span<const double> values, std::span<const double> ys,
                             double x, double inv_two_t);
bool parabola_bound_holds(std::span<const double> values, std::span<const double> ys,
                          double anchor_value, double anchor_y, double inv_two_t, bool strict);
double permuted_inner_product(std::span<const double> a, std::span<const double> b,
                              std::span<const std::uint32_t> perm);
}  // namespace scalar

namespace avx2 {
ArgmaxResult parabola_argmax(std::span<const double> values, std::span<const double> ys,
                             double x, double inv_two_t);
bool parabola_bound_holds(std::span<const double> values, std::span<const double> ys,
                          double anchor_value, double anchor_y, double inv_two_t, bool strict);
double permuted_inner_product(std::span<const double> a, std::span<const double> b,
                              std::span<const std::uint32_t> perm);
}  // namespace avx2

}  // namespace burgers::kernels
