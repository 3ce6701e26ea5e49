#include "ffscale/engine/rescaling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ffscale {

Rescaling::Rescaling(double T, double T_FF, Fn s, Fn ds_dt)
    : T_(T), T_ff_(T_FF), s_(std::move(s)), ds_(std::move(ds_dt)) {
  if (!(T > 0.0) || !(T_FF > 0.0)) throw ContractViolation("Rescaling: T and T_FF must be positive");
  if (!s_ || !ds_) throw ContractViolation("Rescaling: s and ds/dt must be callable");
  if (std::abs(s_(0.0)) > 1e-12 * std::max(1.0, T)) throw ContractViolation("Rescaling: s(0) != 0");
  if (std::abs(s_(T_FF) - T) > 1e-12 * std::max(1.0, T)) throw ContractViolation("Rescaling: s(T_FF) != T");

  constexpr int kProbes = 200;
  const double eps = 1e-5 * T_FF;
  for (int i = 0; i <= kProbes; ++i) {
    const double t = T_FF * i / kProbes;
    const double d = ds_(t);
    if (!(d > 0.0)) {
      throw ContractViolation("Rescaling: ds/dt must be positive (got " + std::to_string(d) + " at t=" +
                              std::to_string(t) + ")");
    }
    const double fd = (s_(t + eps) - s_(t - eps)) / (2.0 * eps);
    if (std::abs(fd - d) > 1e-6 * std::max(1.0, std::abs(d))) {
      throw ContractViolation("Rescaling: ds/dt disagrees with the derivative of s at t=" + std::to_string(t));
    }
  }
}

Rescaling Rescaling::linear(double T, double T_FF) {
  const double rate = T / T_FF;
  Rescaling r(
      T, T_FF, [rate, T, T_FF](double t) { return t == T_FF ? T : rate * t; },
      [rate](double) { return rate; });
  r.linear_ = true;
  return r;
}

Rescaling Rescaling::sinusoidal(double T, double T_FF, double a) {
  if (!(std::abs(a) < 1.0)) throw ContractViolation("Rescaling::sinusoidal: |a| must be below 1");
  const double w = 2.0 * std::numbers::pi / T_FF;
  return Rescaling(
      T, T_FF,
      [=](double t) { return t == T_FF ? T : T * (t / T_FF - a * std::sin(w * t) / (2.0 * std::numbers::pi)); },
      [=](double t) { return T / T_FF * (1.0 - a * std::cos(w * t)); });
}

}  // namespace ffscale
