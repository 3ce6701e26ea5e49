#pragma once

#include <functional>

#include "ffscale/core/linalg.hpp"

namespace ffscale {

/// Monotone map s(t) from fast-forward time [0, T_FF] onto original time
/// [0, T], together with its magnification factor ds/dt.
///
/// Only fast-forwarding (ds/dt > 0 everywhere) is representable; construction
/// probes the endpoints, the sign of ds/dt and its agreement with a centred
/// finite difference of s on a uniform probe grid.
class Rescaling {
 public:
  using Fn = std::function<double(double)>;

  Rescaling(double T, double T_FF, Fn s, Fn ds_dt);

  /// s(t) = (T / T_FF) t.
  static Rescaling linear(double T, double T_FF);

  /// s(t) = T [t/T_FF - a sin(2 pi t/T_FF) / (2 pi)], |a| < 1: a smooth
  /// non-uniform speed-up that still starts and ends on the linear map.
  static Rescaling sinusoidal(double T, double T_FF, double a);

  double T() const { return T_; }
  double T_FF() const { return T_ff_; }
  double s(double t) const { return s_(t); }
  double ds_dt(double t) const { return ds_(t); }
  bool is_linear() const { return linear_; }

 private:
  double T_;
  double T_ff_;
  Fn s_;
  Fn ds_;
  bool linear_ = false;
};

}  // namespace ffscale
