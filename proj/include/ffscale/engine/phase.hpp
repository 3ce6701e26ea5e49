#pragma once

#include <functional>
#include <memory>

#include "ffscale/core/linalg.hpp"
#include "ffscale/core/quadrature.hpp"

namespace ffscale {

/// Real phases f_sigma(t) and their rates df_sigma/dt, one entry per frame label.
/// Every phase starts at zero, so U_f(0) is the identity.
class PhaseProfile {
 public:
  using VectorFn = std::function<RealVector(double)>;

  /// Closed-form phases and rates. Throws unless values(0) vanishes.
  PhaseProfile(std::size_t count, VectorFn values, VectorFn rates);

  static PhaseProfile zero(std::size_t count);

  /// Phases obtained by cumulative quadrature of `rates` from 0 over `grid`.
  static PhaseProfile from_rates(std::size_t count, VectorFn rates, const TimeGrid& grid);

  std::size_t count() const { return count_; }
  RealVector values(double t) const;
  RealVector rates(double t) const;
  double f(std::size_t sigma, double t) const { return values(t)(static_cast<Eigen::Index>(sigma)); }
  double df_dt(std::size_t sigma, double t) const { return rates(t)(static_cast<Eigen::Index>(sigma)); }

  /// Adds c t to every phase (a global gauge shift of the rates by c).
  PhaseProfile with_common_rate(double c) const;

 private:
  std::size_t count_;
  VectorFn values_;
  VectorFn rates_;
};

}  // namespace ffscale
