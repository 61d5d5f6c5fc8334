#include "burgers/shocks.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "burgers/errors.hpp"
#include "burgers/parallel.hpp"
#include "burgers/stats.hpp"

namespace burgers {

namespace {

bool in_zero_set(const BurgersSolution& sol, std::size_t k) {
  const auto& cm = sol.majorant();
  const double target = -sol.vertex_y(k) / sol.t();
  return cm.right_slope(k) <= target && target <= cm.left_slope(k);
}

int sign_of(double u) { return u > 0.0 ? 1 : (u < 0.0 ? -1 : 0); }

}  // namespace

ShockReport extract_shocks(const BurgersSolution& sol) {
  ShockReport report;
  report.window = sol.window();
  const auto& path = sol.path();
  const std::size_t m = sol.vertex_count();

  for (std::size_t k = 0; k + 1 < m; ++k) {
    const std::size_t il = sol.grid_index(k);
    const std::size_t ir = sol.grid_index(k + 1);
    if (ir - il < 2) continue;
    Shock s;
    s.x = sol.x_hi(k);
    s.a_minus = sol.vertex_y(k);
    s.a_plus = sol.vertex_y(k + 1);
    s.mass = s.a_plus - s.a_minus;
    s.velocity = -(path.value(ir) - path.value(il)) / s.mass;
    s.boundary_affected = !report.window.contains(s.x);
    s.left_vertex = k;
    report.shocks.push_back(s);
  }

  for (std::size_t k = 0; k < m; ++k) {
    const double y = sol.vertex_y(k);
    if (report.window.contains(y)) {
      report.contacts.push_back(y);
      report.contact_vertices.push_back(k);
      if (in_zero_set(sol, k)) {
        report.zero_set.push_back(y);
        report.zero_vertices.push_back(k);
      }
    }
    const double lo = std::max(sol.x_lo(k), report.window.lo);
    const double hi = std::min(sol.x_hi(k), report.window.hi);
    if (hi > lo) report.rarefactions.push_back({y, lo, hi, hi - lo, k});
  }
  return report;
}

std::vector<std::size_t> zero_set_vertices(const BurgersSolution& sol) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sol.vertex_count(); ++k) {
    if (in_zero_set(sol, k)) out.push_back(k);
  }
  return out;
}

std::vector<double> epsilon_regular_contacts(const ShockReport& report, double eps) {
  const auto& c = report.contacts;
  std::vector<double> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool left = i > 0 && c[i] - c[i - 1] < eps;
    const bool right = i + 1 < c.size() && c[i + 1] - c[i] < eps;
    if (left && right) out.push_back(c[i]);
  }
  return out;
}

SignPatternReport sign_pattern(const BurgersSolution& sol) {
  SignPatternReport out;
  const auto report = extract_shocks(sol);
  const auto& zeros = report.zero_set;
  const double t = sol.t();

  for (std::size_t g = 0; g + 1 < zeros.size(); ++g) {
    // neighbouring grid points leave nothing in between to sample
    const std::size_t i1 = sol.grid_index(report.zero_vertices[g]);
    const std::size_t i2 = sol.grid_index(report.zero_vertices[g + 1]);
    if (i2 - i1 < 2) continue;
    const double z1 = zeros[g];
    const double z2 = zeros[g + 1];
    SignGap gap{z1, z2, false, false};
    std::optional<double> last_negative;
    int last_sign = 0;

    auto visit = [&](double x, double u) {
      const int s = sign_of(u);
      if (s == 0) return;
      if (s > 0) gap.has_positive_phase = true;
      if (s < 0) gap.has_negative_phase = true;
      if (s > 0 && last_sign < 0) out.violations.push_back({*last_negative, x});
      if (s < 0) last_negative = x;
      last_sign = s;
    };

    const std::size_t k1 = sol.vertex_at(z1);
    const std::size_t k2 = sol.vertex_at(z2);
    for (std::size_t k = k1; k <= k2; ++k) {
      const double y = sol.vertex_y(k);
      const double lo = sol.x_lo(k);
      if (k > 0 && lo > z1 && lo < z2) {
        visit(lo, (lo - sol.vertex_y(k - 1)) / t);
        visit(lo, (lo - y) / t);
      }
      const double seg_lo = std::max(lo, z1);
      const double seg_hi = std::min(sol.x_hi(k), z2);
      if (seg_hi > seg_lo) {
        const double mid = 0.5 * (seg_lo + seg_hi);
        visit(mid, (mid - y) / t);
      }
    }
    out.gaps.push_back(gap);
  }
  return out;
}

JumpSignCounts contact_jump_signs(const BurgersSolution& sol, const LevyPath& path) {
  JumpSignCounts counts;
  const double h = path.grid().step();
  const auto& jumps = path.tracked_jumps();

  for (std::size_t k = 0; k < sol.vertex_count(); ++k) {
    if (sol.boundary_affected(k)) continue;
    const double y = sol.vertex_y(k);
    const bool below = sol.x_hi(k) <= y + h && sol.x_lo(k) < y - h;
    const bool above = sol.x_lo(k) >= y - h && sol.x_hi(k) > y + h;
    if (!below && !above) continue;

    const std::size_t i = sol.grid_index(k);
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1;
    const auto first = std::lower_bound(
        jumps.begin(), jumps.end(), lo,
        [](const TrackedJump& j, std::size_t idx) { return j.index < idx; });
    const TrackedJump* nearest = nullptr;
    for (auto it = first; it != jumps.end() && it->index <= hi; ++it) {
      if (!nearest || std::abs(it->size) > std::abs(nearest->size)) nearest = &*it;
    }
    if (!nearest) {
      ++counts.untracked;
    } else if ((below && nearest->size > 0.0) || (above && nearest->size < 0.0)) {
      ++counts.agreements;
    } else {
      ++counts.disagreements;
    }
  }
  return counts;
}

WindowStats window_stats(const BurgersSolution& sol, Interval window) {
  WindowStats st;
  for (std::size_t k = 0; k < sol.vertex_count(); ++k) {
    const double y = sol.vertex_y(k);
    if (window.contains(y)) {
      ++st.contacts;
      const auto& cm = sol.majorant();
      const double target = -y / sol.t();
      if (cm.right_slope(k) <= target && target <= cm.left_slope(k)) ++st.zero_set;
    }
    const double lo = std::max(sol.x_lo(k), window.lo);
    const double hi = std::min(sol.x_hi(k), window.hi);
    if (hi > lo) st.max_rarefaction = std::max(st.max_rarefaction, hi - lo);
  }
  const auto ys = sol.path().points();
  st.grid_points = static_cast<std::size_t>(
      std::count_if(ys.begin(), ys.end(), [&](double y) { return window.contains(y); }));
  return st;
}

std::vector<RefinementRow> refinement_study(const LevyParams& params, double t, double L,
                                            std::span<const double> h_list, std::size_t n_rep,
                                            std::uint64_t seed, Interval window) {
  validate(params);
  if (h_list.empty()) fail(ErrorKind::parameter, "h_list is empty");
  if (n_rep == 0) fail(ErrorKind::parameter, "n_rep must be positive");
  if (!(window.lo < window.hi)) fail(ErrorKind::parameter, "empty statistics window");
  for (std::size_t i = 1; i < h_list.size(); ++i) {
    if (!(h_list[i] < h_list[i - 1])) fail(ErrorKind::parameter, "h_list must be strictly decreasing");
  }
  const double finest = h_list.back();
  const GridSpec fine_grid = GridSpec::with_step(L, finest);

  // Strides relative to the finest grid; empty when the grids do not nest.
  std::vector<std::size_t> strides;
  for (double h : h_list) {
    const double ratio = h / finest;
    const double r = std::round(ratio);
    if (std::abs(ratio - r) > 1e-9 * ratio) {
      strides.clear();
      break;
    }
    strides.push_back(static_cast<std::size_t>(r));
  }
  if (!strides.empty()) {
    for (std::size_t s : strides) {
      if (fine_grid.zero_index() % s != 0) {
        strides.clear();
        break;
      }
    }
  }

  struct Cell {
    bool ok = false;
    WindowStats stats;
  };
  const std::size_t rows = h_list.size();
  std::vector<Cell> cells(n_rep * rows);

  parallel_for(n_rep, [&](std::size_t r) {
    const std::uint64_t rep_seed = derive_seed(seed, r);
    std::optional<LevyPath> fine;
    if (!strides.empty()) fine.emplace(sample_path(params, fine_grid, rep_seed));
    for (std::size_t row = 0; row < rows; ++row) {
      try {
        const LevyPath path =
            !strides.empty()
                ? fine->subsample(strides[row])
                : sample_path(params, GridSpec::with_step(L, h_list[row]),
                              derive_seed(rep_seed, row + 1));
        const auto sol = solve(path, t);
        cells[r * rows + row] = {true, window_stats(sol, window)};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::window_too_small) throw;
      }
    }
  });

  std::vector<RefinementRow> out;
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<double> contacts, zeros, rare, frac;
    std::size_t failures = 0;
    for (std::size_t r = 0; r < n_rep; ++r) {
      const Cell& c = cells[r * rows + row];
      if (!c.ok) {
        ++failures;
        continue;
      }
      contacts.push_back(static_cast<double>(c.stats.contacts));
      zeros.push_back(static_cast<double>(c.stats.zero_set));
      rare.push_back(c.stats.max_rarefaction);
      frac.push_back(c.stats.grid_points
                         ? static_cast<double>(c.stats.contacts) /
                               static_cast<double>(c.stats.grid_points)
                         : 0.0);
    }
    if (contacts.empty()) {
      fail(ErrorKind::insufficient_data, "every replicate failed at h = " + std::to_string(h_list[row]));
    }
    out.push_back({h_list[row], stats::median(contacts), stats::median(zeros), stats::median(rare),
                   stats::median(frac), contacts.size(), failures});
  }
  return out;
}

}  // namespace burgers
