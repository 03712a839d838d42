#include "qpswf/gauss_legendre.hpp"

#include <cmath>
#include <numbers>

#include "qpswf/error.hpp"

namespace qpswf {

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw Error(ErrorKind::BadParameters, "gauss_legendre: n must be positive");
  if (!(b > a)) throw Error(ErrorKind::BadParameters, "gauss_legendre: need a < b");

  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const std::size_t m = (n + 1) / 2;
  const double dn = static_cast<double>(n);

  for (std::size_t i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on the three-term recurrence.
    const double theta = std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5);
    double x = std::cos(theta) * (1.0 - (dn - 1.0) / (8.0 * dn * dn * dn));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = dn * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = dn * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = mid;
  return rule;
}

}  // namespace qpswf
