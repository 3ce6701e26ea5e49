#include "ffscale/engine/phase.hpp"

#include <cmath>

namespace ffscale {

PhaseProfile::PhaseProfile(std::size_t count, VectorFn values, VectorFn rates)
    : count_(count), values_(std::move(values)), rates_(std::move(rates)) {
  if (count == 0) throw ContractViolation("PhaseProfile: empty label set");
  if (!values_ || !rates_) throw ContractViolation("PhaseProfile: phases and rates must be callable");
  const RealVector f0 = values_(0.0);
  if (f0.cwiseAbs().maxCoeff() > 1e-12) throw ContractViolation("PhaseProfile: phases must vanish at t=0");
}

PhaseProfile PhaseProfile::zero(std::size_t count) {
  const auto n = static_cast<Eigen::Index>(count);
  auto z = [n](double) -> RealVector { return RealVector::Zero(n); };
  return PhaseProfile(count, z, z);
}

PhaseProfile PhaseProfile::from_rates(std::size_t count, VectorFn rates, const TimeGrid& grid) {
  if (grid.t_start() != 0.0) throw ContractViolation("PhaseProfile::from_rates: grid must start at 0");
  auto integral = std::make_shared<CumulativeIntegral>(rates, grid);
  return PhaseProfile(
      count, [integral](double t) { return integral->value(t); }, std::move(rates));
}

RealVector PhaseProfile::values(double t) const {
  RealVector v = values_(t);
  if (static_cast<std::size_t>(v.size()) != count_) throw ContractViolation("PhaseProfile: wrong phase count");
  return v;
}

RealVector PhaseProfile::rates(double t) const {
  RealVector v = rates_(t);
  if (static_cast<std::size_t>(v.size()) != count_) throw ContractViolation("PhaseProfile: wrong rate count");
  return v;
}

PhaseProfile PhaseProfile::with_common_rate(double c) const {
  const auto n = static_cast<Eigen::Index>(count_);
  return PhaseProfile(
      count_, [values = values_, c, n](double t) -> RealVector { return values(t) + RealVector::Constant(n, c * t); },
      [rates = rates_, c, n](double t) -> RealVector { return rates(t) + RealVector::Constant(n, c); });
}

}  // namespace ffscale
