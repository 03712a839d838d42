#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "qpswf/grid.hpp"
#include "qpswf/quaternion.hpp"
#include "qpswf/random.hpp"

namespace qpswf::oracle {

inline double qdist(const Quaternion& a, const Quaternion& b) { return modulus(a - b); }

inline ::testing::AssertionResult quat_near(const Quaternion& a, const Quaternion& b, double tol) {
  const double d = qdist(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a << " vs " << b << " differ by " << d << " > " << tol;
}

inline Quaternion random_quaternion(CounterRng& rng) { return rng.normal_quaternion(); }

// Direct two-sided sum: (1/2pi) sum w exp(-i u x) f(x, y) exp(-j v y).
inline Quaternion qft_direct(const QSignal& f, double u, double v) {
  Quaternion acc;
  for (std::size_t a = 0; a < f.nx(); ++a) {
    const Quaternion left = exp_i(-u * f.ax_x().coord(a));
    for (std::size_t b = 0; b < f.ny(); ++b) {
      acc += f.quad_weight(a, b) * (left * f(a, b) * exp_j(-v * f.ax_y().coord(b)));
    }
  }
  return acc / (2.0 * std::numbers::pi);
}

// Real-arithmetic route: each real component through cos / sin sums,
// F(f_r) = (CC - i SC - j CS + k SS) / 2pi, then F0 + i F1 + F2 j + i F3 j.
struct CosSinParts {
  Quaternion part[4];
};

inline CosSinParts qft_cos_sin(const QSignal& f, double u, double v) {
  CosSinParts out;
  for (int r = 0; r < 4; ++r) {
    double cc = 0, sc = 0, cs = 0, ss = 0;
    for (std::size_t a = 0; a < f.nx(); ++a) {
      const double x = f.ax_x().coord(a);
      const double cx = std::cos(u * x), sx = std::sin(u * x);
      for (std::size_t b = 0; b < f.ny(); ++b) {
        const double y = f.ax_y().coord(b);
        const double val = f.quad_weight(a, b) * f(a, b)[r];
        const double cy = std::cos(v * y), sy = std::sin(v * y);
        cc += val * cx * cy;
        sc += val * sx * cy;
        cs += val * cx * sy;
        ss += val * sx * sy;
      }
    }
    out.part[r] = Quaternion(cc, -sc, -cs, ss) / (2.0 * std::numbers::pi);
  }
  return out;
}

inline Quaternion combine(const CosSinParts& p) {
  const Quaternion i = Quaternion::i(), j = Quaternion::j();
  return p.part[0] + i * p.part[1] + p.part[2] * j + i * p.part[3] * j;
}

// Eigenvalues of the time-band limiting operator on [-1, 1] with band c,
// from a Legendre Galerkin matrix. With orthonormal Legendre polynomials p_n,
//   int_{-1}^{1} p_n(x) exp(i w x) dx = sqrt((2n+1)/2) 2 i^n j_n(w),
// so A_mn = (1/2pi) int_{-c}^{c} of the product of two such transforms.
inline std::vector<double> legendre_galerkin_eigenvalues(double c, int modes = 30) {
  using boost::math::quadrature::gauss;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(modes, modes);
  const int pieces = 8;
  for (int m = 0; m < modes; ++m) {
    for (int n = m; n < modes; n += 2) {
      double integral = 0.0;
      // j_m j_n is even when m - n is even: integrate [0, c] and double.
      for (int p = 0; p < pieces; ++p) {
        const double lo = c * p / pieces;
        const double hi = lo + c / pieces;
        integral += gauss<double, 30>::integrate(
            [&](double w) {
              return boost::math::sph_bessel(m, w) * boost::math::sph_bessel(n, w);
            },
            lo, hi);
      }
      integral *= 2.0;
      const double sign = ((n - m) / 2) % 2 == 0 ? 1.0 : -1.0;
      const double v = sign * 4.0 * std::sqrt((2.0 * m + 1.0) * (2.0 * n + 1.0)) / 2.0 * integral /
                       (2.0 * std::numbers::pi);
      a(m, n) = v;
      a(n, m) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + modes);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

}  // namespace qpswf::oracle
