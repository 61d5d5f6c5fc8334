#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace burgers {

struct MajorantQuery {
  double value;
  double left_slope;   // +inf at the first vertex
  double right_slope;  // -inf at the last vertex
};

// Vertex chain of the least concave function dominating a point cloud.
// Edge slopes are strictly decreasing and every vertex is an input point.
class ConcaveMajorant {
 public:
  ConcaveMajorant() = default;
  ConcaveMajorant(std::vector<double> ys, std::vector<double> values,
                  std::vector<std::size_t> source_indices);

  std::size_t size() const noexcept { return ys_.size(); }
  std::span<const double> ys() const noexcept { return ys_; }
  std::span<const double> values() const noexcept { return values_; }
  // slopes()[k] is the slope of the edge from vertex k to vertex k + 1.
  std::span<const double> slopes() const noexcept { return slopes_; }
  // Position of each vertex in the input point list.
  std::span<const std::size_t> source_indices() const noexcept { return sources_; }

  double left_slope(std::size_t k) const noexcept;
  double right_slope(std::size_t k) const noexcept;

  // Value and one-sided slopes at y in [ys.front(), ys.back()]; O(log m).
  MajorantQuery query(double y) const;

 private:
  std::vector<double> ys_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  std::vector<std::size_t> sources_;
};

// Relative threshold of the collinearity test, scaled by the largest
// coordinate magnitude among the three points compared.
inline constexpr double kCollinearTolerance = 1e-12;

// Single left-to-right monotone-chain pass. ys must be strictly increasing and
// hold at least two points; collinear interior points are dropped.
ConcaveMajorant upper_concave_majorant(std::span<const double> ys, std::span<const double> values);

}  // namespace burgers
