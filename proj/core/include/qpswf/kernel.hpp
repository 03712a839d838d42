#pragma once

#include <cmath>
#include <numbers>

namespace qpswf {

// sin(W d) / (pi d), the impulse response of the ideal low-pass on [-W, W].
inline double sinc_kernel(double d, double W) {
  const double t = W * d;
  if (std::abs(t) < 1e-4) {
    const double t2 = t * t;
    return W / std::numbers::pi * (1.0 - t2 / 6.0 * (1.0 - t2 / 20.0));
  }
  return std::sin(t) / (std::numbers::pi * d);
}

// Derivative of sinc_kernel with respect to d.
inline double sinc_kernel_derivative(double d, double W) {
  const double t = W * d;
  if (std::abs(t) < 1e-4) {
    return -W * W * W * d / (3.0 * std::numbers::pi) * (1.0 - t * t / 10.0);
  }
  return (t * std::cos(t) - std::sin(t)) / (std::numbers::pi * d * d);
}

// Separable 2D kernel of the low-pass onto [-W, W]^2.
inline double sinc_bandlimit_kernel(double dx, double dy, double W) {
  return sinc_kernel(dx, W) * sinc_kernel(dy, W);
}

}  // namespace qpswf
