#include "qpswf/nodal_signal.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "qpswf/error.hpp"
#include "qpswf/gauss_legendre.hpp"

namespace qpswf {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

SplitMatrix kernel_sandwich(const NodalPlane& plane, const SplitMatrix& a) {
  return sandwich(plane.x.kernel(), a, plane.y.kernel());
}

}  // namespace

MatrixXd NodalPlane::weight_outer() const {
  return x.weight_vector() * y.weight_vector().transpose();
}

NodalSignal NodalSignal::zero(const NodalPlane& plane) {
  const auto nx = static_cast<Eigen::Index>(plane.x.size());
  const auto ny = static_cast<Eigen::Index>(plane.y.size());
  return {SplitMatrix(nx, ny), SplitMatrix(nx, ny)};
}

NodalSignal& NodalSignal::operator+=(const NodalSignal& o) {
  band += o.band;
  limited += o.limited;
  return *this;
}

NodalSignal& NodalSignal::operator-=(const NodalSignal& o) {
  band -= o.band;
  limited -= o.limited;
  return *this;
}

NodalSignal& NodalSignal::operator*=(double s) {
  band *= s;
  limited *= s;
  return *this;
}

NodalSignal operator+(NodalSignal a, const NodalSignal& b) { return a += b; }
NodalSignal operator-(NodalSignal a, const NodalSignal& b) { return a -= b; }
NodalSignal operator*(double s, NodalSignal a) { return a *= s; }

NodalSignal left_multiply(const Quaternion& q, const NodalSignal& f) {
  return {left_multiply(q, f.band), left_multiply(q, f.limited)};
}

NodalSignal right_multiply(const NodalSignal& f, const Quaternion& q) {
  return {right_multiply(f.band, q), right_multiply(f.limited, q)};
}

SplitMatrix node_values(const NodalPlane& plane, const NodalSignal& f) {
  return kernel_sandwich(plane, f.band) + f.limited;
}

NodalSignal time_limit(const NodalPlane& plane, const NodalSignal& f) {
  NodalSignal out;
  out.band = SplitMatrix(f.band.rows(), f.band.cols());
  out.limited = node_values(plane, f);
  return out;
}

NodalSignal band_limit(const NodalPlane& plane, const NodalSignal& f) {
  NodalSignal out;
  out.band = f.band + hadamard(f.limited, plane.weight_outer());
  out.limited = SplitMatrix(f.band.rows(), f.band.cols());
  return out;
}

Quaternion inner_product(const NodalPlane& plane, const NodalSignal& f, const NodalSignal& g) {
  const MatrixXd omega = plane.weight_outer();
  const SplitMatrix kgk = kernel_sandwich(plane, g.band);
  const SplitMatrix kfk = kernel_sandwich(plane, f.band);
  const SplitMatrix fl = hadamard(f.limited, omega);
  Quaternion s = frobenius_inner(f.band, kgk);
  s += frobenius_inner(hadamard(kfk, omega), g.limited);
  s += frobenius_inner(fl, kgk);
  s += frobenius_inner(fl, g.limited);
  return s;
}

Quaternion inner_product_on_square(const NodalPlane& plane, const NodalSignal& f,
                                   const NodalSignal& g) {
  return frobenius_inner(hadamard(node_values(plane, f), plane.weight_outer()),
                         node_values(plane, g));
}

double energy(const NodalPlane& plane, const NodalSignal& f) {
  return inner_product(plane, f, f).w;
}

double energy_on_square(const NodalPlane& plane, const NodalSignal& f) {
  return inner_product_on_square(plane, f, f).w;
}

double spectral_band_energy(const NodalPlane& plane, const NodalSignal& f, std::size_t quad_n,
                            double r) {
  const double W = plane.band();
  const QuadratureRule rule = gauss_legendre(quad_n, -W, W);
  const auto m = static_cast<Eigen::Index>(quad_n);
  const auto& sx = plane.x.nodes();
  const auto& sy = plane.y.nodes();
  const auto nx = static_cast<Eigen::Index>(sx.size());
  const auto ny = static_cast<Eigen::Index>(sy.size());

  // x-factor transforms exp(-i u s_p), with the band indicator for atoms.
  auto x_transform = [&](double shift, bool atoms) {
    MatrixXcd t(m, nx);
    for (Eigen::Index a = 0; a < m; ++a) {
      const double u = rule.nodes[static_cast<std::size_t>(a)] + shift;
      const bool inside = !atoms || std::abs(u) <= W;
      for (Eigen::Index p = 0; p < nx; ++p) {
        const double ph = -u * sx[static_cast<std::size_t>(p)];
        t(a, p) = inside ? std::complex<double>(std::cos(ph), std::sin(ph)) : 0.0;
      }
    }
    return t;
  };
  // cos(r x) a(x) -> (A(u - r) + A(u + r)) / 2, sin(r x) a(x) -> (A(u - r) - A(u + r)) / 2i.
  auto modulated = [&](bool atoms, MatrixXcd& cos_part, MatrixXcd& sin_part) {
    if (r == 0.0) {
      cos_part = x_transform(0.0, atoms);
      sin_part = MatrixXcd::Zero(m, nx);
      return;
    }
    const MatrixXcd lo = x_transform(-r, atoms);
    const MatrixXcd hi = x_transform(r, atoms);
    cos_part = 0.5 * (lo + hi);
    sin_part = (lo - hi) / (2.0 * std::complex<double>(0.0, 1.0));
  };
  MatrixXcd band_cos, band_sin, lim_cos, lim_sin;
  modulated(true, band_cos, band_sin);
  modulated(false, lim_cos, lim_sin);

  MatrixXd yr(m, ny);
  MatrixXd yi(m, ny);
  for (Eigen::Index b = 0; b < m; ++b) {
    for (Eigen::Index q = 0; q < ny; ++q) {
      const double ph = rule.nodes[static_cast<std::size_t>(b)] * sy[static_cast<std::size_t>(q)];
      yr(b, q) = std::cos(ph);
      yi(b, q) = -std::sin(ph);
    }
  }

  const SplitMatrix lim = hadamard(f.limited, plane.weight_outer());
  // Components of i f are (-f1, f0, -f3, f2).
  const int partner[4] = {1, 0, 3, 2};
  const double partner_sign[4] = {-1.0, 1.0, -1.0, 1.0};
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(), m);
  double total = 0.0;
  for (int rho = 0; rho < 4; ++rho) {
    const int p = partner[rho];
    const double sg = partner_sign[rho];
    MatrixXcd xfac = band_cos * f.band.c[rho].cast<std::complex<double>>() +
                     lim_cos * lim.c[rho].cast<std::complex<double>>();
    if (r != 0.0) {
      xfac += sg * (band_sin * f.band.c[p].cast<std::complex<double>>() +
                    lim_sin * lim.c[p].cast<std::complex<double>>());
    }
    const MatrixXd xr = xfac.real();
    const MatrixXd xi = xfac.imag();
    const MatrixXd c0 = xr * yr.transpose();
    const MatrixXd c1 = xi * yr.transpose();
    const MatrixXd c2 = xr * yi.transpose();
    const MatrixXd c3 = xi * yi.transpose();
    const MatrixXd mod = c0.cwiseAbs2() + c1.cwiseAbs2() + c2.cwiseAbs2() + c3.cwiseAbs2();
    total += w.dot(mod * w);
  }
  return total / (kTwoPi * kTwoPi);
}

QSignal sample(const NodalPlane& plane, const NodalSignal& f, const GridAxis& ax_x,
               const GridAxis& ax_y) {
  const auto xs = ax_x.coords();
  const auto ys = ax_y.coords();
  SplitMatrix v = sandwich(plane.x.kernel_rows(xs), f.band, plane.y.kernel_rows(ys).transpose());
  v += sandwich(plane.x.interpolation_rows(xs), f.limited,
                plane.y.interpolation_rows(ys).transpose());
  return to_signal(v, ax_x, ax_y);
}

NodalSignal element_signal(const ProlateBasis1D& basis, std::size_t m, std::size_t n,
                           const Quaternion& coeff) {
  const Eigen::VectorXd am = basis.extension_coefficients(m);
  const Eigen::VectorXd an = basis.extension_coefficients(n);
  const MatrixXd outer = am * an.transpose();
  NodalSignal s;
  for (int r = 0; r < 4; ++r) s.band.c[r] = coeff[r] * outer;
  s.limited = SplitMatrix(outer.rows(), outer.cols());
  return s;
}

NodalSignal element_signal(const BasisSet2D& basis, std::size_t index) {
  if (index >= basis.size()) throw Error(ErrorKind::BadIndex, "basis index out of range");
  const auto& it = basis.items[index];
  return element_signal(*basis.basis1d, it.m, it.n, it.coeff);
}

NodalSignal limited_signal(const SplitMatrix& values) {
  return {SplitMatrix(values.rows(), values.cols()), values};
}

NodalSignal band_signal(const SplitMatrix& coefficients) {
  return {coefficients, SplitMatrix(coefficients.rows(), coefficients.cols())};
}

}  // namespace qpswf
