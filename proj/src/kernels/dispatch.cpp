#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "burgers/errors.hpp"
#include "burgers/kernels.hpp"

namespace burgers::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(BURGERS_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  if (const char* env = std::getenv("BURGERS_ISA")) {
    if (std::string_view(env) == "scalar") return Isa::scalar;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

#ifndef BURGERS_HAVE_AVX2
// Unreachable through dispatch; defined so the declarations link.
namespace avx2 {
ArgmaxResult parabola_argmax(std::span<const double> values, std::span<const double> ys,
                             double x, double inv_two_t) {
  return scalar::parabola_argmax(values, ys, x, inv_two_t);
}
bool parabola_bound_holds(std::span<const double> values, std::span<const double> ys,
                          double anchor_value, double anchor_y, double inv_two_t, bool strict) {
  return scalar::parabola_bound_holds(values, ys, anchor_value, anchor_y, inv_two_t, strict);
}
double permuted_inner_product(std::span<const double> a, std::span<const double> b,
                              std::span<const std::uint32_t> perm) {
  return scalar::permuted_inner_product(a, b, perm);
}
}  // namespace avx2
#endif

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    fail(ErrorKind::parameter, "kernel ISA " + std::string(isa_name(isa)) + " is not available");
  }
  current().store(isa, std::memory_order_relaxed);
}

ArgmaxResult parabola_argmax(std::span<const double> values, std::span<const double> ys,
                             double x, double inv_two_t) {
  if (values.empty() || values.size() != ys.size()) {
    fail(ErrorKind::input, "parabola_argmax needs equal, nonempty spans");
  }
  return active_isa() == Isa::avx2 ? avx2::parabola_argmax(values, ys, x, inv_two_t)
                                   : scalar::parabola_argmax(values, ys, x, inv_two_t);
}

bool parabola_bound_holds(std::span<const double> values, std::span<const double> ys,
                          double anchor_value, double anchor_y, double inv_two_t, bool strict) {
  if (values.size() != ys.size()) fail(ErrorKind::input, "parabola_bound_holds span mismatch");
  return active_isa() == Isa::avx2
             ? avx2::parabola_bound_holds(values, ys, anchor_value, anchor_y, inv_two_t, strict)
             : scalar::parabola_bound_holds(values, ys, anchor_value, anchor_y, inv_two_t, strict);
}

double permuted_inner_product(std::span<const double> a, std::span<const double> b,
                              std::span<const std::uint32_t> perm) {
  const std::size_t n = perm.size();
  if (a.size() != n * n || b.size() != n * n) {
    fail(ErrorKind::input, "permuted_inner_product expects n x n matrices");
  }
  return active_isa() == Isa::avx2 ? avx2::permuted_inner_product(a, b, perm)
                                   : scalar::permuted_inner_product(a, b, perm);
}

}  // namespace burgers::kernels
