#include "ffscale/core/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace ffscale {

double simpson(std::span<const double> samples, double spacing) {
  const std::size_t n = samples.size() == 0 ? 0 : samples.size() - 1;
  if (n == 0) throw ContractViolation("simpson: need at least two samples");
  if (n == 1) return 0.5 * spacing * (samples[0] + samples[1]);

  const std::size_t even = (n % 2 == 0) ? n : n - 3;
  double sum = 0.0;
  if (even > 0) {
    double acc = samples[0] + samples[even];
    for (std::size_t k = 1; k < even; ++k) acc += (k % 2 == 1 ? 4.0 : 2.0) * samples[k];
    sum = acc * spacing / 3.0;
  }
  if (even != n) {
    const double* f = samples.data() + even;
    sum += 3.0 * spacing / 8.0 * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);
  }
  return sum;
}

CumulativeIntegral::CumulativeIntegral(RateFn rate, const TimeGrid& grid)
    : rate_(std::move(rate)), grid_(grid) {
  const double h = grid_.spacing();
  nodes_.reserve(grid_.n_points());
  RealVector left = rate_(grid_.t_start());
  nodes_.push_back(RealVector::Zero(left.size()));
  for (std::size_t k = 0; k < grid_.n_steps(); ++k) {
    const double t = grid_.at(k);
    RealVector right = rate_(grid_.at(k + 1));
    const RealVector mid = rate_(t + 0.5 * h);
    if (mid.size() != left.size() || right.size() != left.size()) {
      throw ContractViolation("CumulativeIntegral: rate changed length along the grid");
    }
    nodes_.push_back(nodes_.back() + (h / 6.0) * (left + 4.0 * mid + right));
    left = std::move(right);
  }
}

RealVector CumulativeIntegral::value(double t) const {
  const double h = grid_.spacing();
  const double x = (t - grid_.t_start()) / h;
  const auto last = static_cast<double>(grid_.n_steps());
  // Allow evaluation slightly outside the grid (integrator stages, probes).
  const std::size_t k = x <= 0.0 ? 0 : static_cast<std::size_t>(std::min(std::floor(x), last));
  const double tk = grid_.at(k);
  const double dt = t - tk;
  if (dt == 0.0) return nodes_[k];
  return nodes_[k] + (dt / 6.0) * (rate_(tk) + 4.0 * rate_(tk + 0.5 * dt) + rate_(t));
}

}  // namespace ffscale
