// Quadrature on uniform grids.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ffscale/core/linalg.hpp"

namespace ffscale {

/// Composite Simpson rule over uniformly spaced samples. An odd interval count
/// closes with a Simpson 3/8 panel; a single interval falls back to the
/// trapezoid rule.
double simpson(std::span<const double> samples, double spacing);

/// Running integral F(t) = int_{t_start}^t rate(u) du of a vector-valued rate.
///
/// Node values come from per-interval Simpson sums with a midpoint evaluation;
/// off-node values add one more Simpson panel from the preceding node, so the
/// result is smooth in t and accurate to O(h^4) anywhere on the grid.
class CumulativeIntegral {
 public:
  using RateFn = std::function<RealVector(double)>;

  CumulativeIntegral(RateFn rate, const TimeGrid& grid);

  RealVector value(double t) const;
  RealVector rate(double t) const { return rate_(t); }
  const TimeGrid& grid() const { return grid_; }

 private:
  RateFn rate_;
  TimeGrid grid_;
  std::vector<RealVector> nodes_;
};

}  // namespace ffscale
