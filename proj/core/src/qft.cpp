#include "qpswf/qft.hpp"

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

// rows: frequencies, cols: sample points; entry exp(sign * i * u * x) * w(x).
MatrixXcd fourier_matrix(std::span<const double> u, std::span<const double> x,
                         std::span<const double> w, double sign) {
  MatrixXcd m(static_cast<Eigen::Index>(u.size()), static_cast<Eigen::Index>(x.size()));
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t p = 0; p < x.size(); ++p) {
      const double t = sign * u[a] * x[p];
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(p)) =
          std::complex<double>(std::cos(t), std::sin(t)) * w[p];
    }
  }
  return m;
}

MatrixXd trig_matrix(std::span<const double> x, std::span<const double> v,
                     std::span<const double> wv, bool sine) {
  MatrixXd m(static_cast<Eigen::Index>(x.size()), static_cast<Eigen::Index>(v.size()));
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      const double t = v[b] * x[p];
      m(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(b)) =
          (sine ? std::sin(t) : std::cos(t)) * wv[b];
    }
  }
  return m;
}

}  // namespace

std::array<SplitMatrix, 4> component_spectra(const QSignal& f, std::span<const double> u,
                                             std::span<const double> v) {
  const auto xs = f.ax_x().coords();
  const auto ys = f.ax_y().coords();
  // Weighted kernels: cos(u x) w(x) and sin(u x) w(x), rows u, cols x.
  const MatrixXd cx = trig_matrix(u, xs, f.weights_x(), false);
  const MatrixXd sx = trig_matrix(u, xs, f.weights_x(), true);
  const MatrixXd cyt = trig_matrix(v, ys, f.weights_y(), false).transpose();
  const MatrixXd syt = trig_matrix(v, ys, f.weights_y(), true).transpose();
  const SplitMatrix parts = to_split(f);

  // All four components side by side so the x pass is one product per kernel.
  const Eigen::Index ny = static_cast<Eigen::Index>(ys.size());
  MatrixXd stacked(parts.rows(), 4 * ny);
  for (int r = 0; r < 4; ++r) stacked.middleCols(r * ny, ny) = parts.c[r];
  const MatrixXd tc = cx * stacked;
  const MatrixXd ts = sx * stacked;

  std::array<SplitMatrix, 4> out;
  for (int r = 0; r < 4; ++r) {
    const auto c_r = tc.middleCols(r * ny, ny);
    const auto s_r = ts.middleCols(r * ny, ny);
    SplitMatrix fr;
    fr.c[0] = (c_r * cyt) / kTwoPi;
    fr.c[1] = -(s_r * cyt) / kTwoPi;
    fr.c[2] = -(c_r * syt) / kTwoPi;
    fr.c[3] = (s_r * syt) / kTwoPi;
    out[r] = std::move(fr);
  }
  return out;
}

SplitMatrix assemble_spectrum(const std::array<SplitMatrix, 4>& parts) {
  SplitMatrix s = parts[0];
  s += left_multiply(Quaternion::i(), parts[1]);
  s += right_multiply(parts[2], Quaternion::j());
  s += right_multiply(left_multiply(Quaternion::i(), parts[3]), Quaternion::j());
  return s;
}

SplitMatrix inverse_at(const SplitMatrix& spectrum, std::span<const double> u,
                       std::span<const double> wu, std::span<const double> v,
                       std::span<const double> wv, std::span<const double> x,
                       std::span<const double> y) {
  // Write the spectrum as P + Q j with P, Q i-complex, then
  // exp(iux) (P + Q j) exp(jvy) = (aP cos - aQ sin) + (aP sin + aQ cos) j.
  const MatrixXcd ex = fourier_matrix(x, u, wu, 1.0);  // rows x, cols u
  MatrixXcd p(spectrum.rows(), spectrum.cols());
  MatrixXcd q(spectrum.rows(), spectrum.cols());
  p.real() = spectrum.c[0];
  p.imag() = spectrum.c[1];
  q.real() = spectrum.c[2];
  q.imag() = spectrum.c[3];
  const MatrixXcd ap = ex * p;
  const MatrixXcd aq = ex * q;
  const Eigen::Index nx = ap.rows();
  MatrixXd a(2 * nx, ap.cols());
  MatrixXd b(2 * nx, aq.cols());
  a << ap.real(), ap.imag();
  b << aq.real(), aq.imag();
  const MatrixXd cy = trig_matrix(y, v, wv, false).transpose();  // rows v, cols y
  const MatrixXd sy = trig_matrix(y, v, wv, true).transpose();
  const MatrixXd r1 = (a * cy - b * sy) / kTwoPi;
  const MatrixXd r2 = (a * sy + b * cy) / kTwoPi;
  SplitMatrix out;
  out.c[0] = r1.topRows(nx);
  out.c[1] = r1.bottomRows(nx);
  out.c[2] = r2.topRows(nx);
  out.c[3] = r2.bottomRows(nx);
  return out;
}

SpectrumQ forward_qft(const QSignal& f, const GridAxis& ax_u, const GridAxis& ax_v) {
  const auto u = ax_u.coords();
  const auto v = ax_v.coords();
  const auto parts = component_spectra(f, u, v);
  SpectrumQ s;
  s.combined = to_signal(assemble_spectrum(parts), ax_u, ax_v);
  for (int r = 0; r < 4; ++r) s.components[r] = to_signal(parts[r], ax_u, ax_v);
  return s;
}

QSignal inverse_qft(const QSignal& spectrum, const GridAxis& ax_x, const GridAxis& ax_y) {
  const auto u = spectrum.ax_x().coords();
  const auto v = spectrum.ax_y().coords();
  const auto x = ax_x.coords();
  const auto y = ax_y.coords();
  const SplitMatrix out = inverse_at(to_split(spectrum), u, spectrum.weights_x(), v,
                                     spectrum.weights_y(), x, y);
  return to_signal(out, ax_x, ax_y);
}

std::vector<double> q_modulus_field(const SpectrumQ& s) {
  std::vector<double> out(s.combined.size(), 0.0);
  for (const auto& comp : s.components) {
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += norm_sq(comp.values()[n]);
  }
  return out;
}

GridAxis dual_axis(const GridAxis& ax) {
  const std::size_t count = ax.count % 2 == 1 ? ax.count : ax.count + 1;
  const double step = kTwoPi / (static_cast<double>(count) * ax.step);
  return GridAxis(-0.5 * static_cast<double>(count - 1) * step, step, count);
}

namespace {

double q_energy_on(const QSignal& f, const GridAxis& ax_u, const GridAxis& ax_v) {
  const auto u = ax_u.coords();
  const auto v = ax_v.coords();
  const auto parts = component_spectra(f, u, v);
  const auto wu = ax_u.trapezoid_weights();
  const auto wv = ax_v.trapezoid_weights();
  const Eigen::Map<const Eigen::VectorXd> mu(wu.data(), static_cast<Eigen::Index>(wu.size()));
  const Eigen::Map<const Eigen::VectorXd> mv(wv.data(), static_cast<Eigen::Index>(wv.size()));
  double e = 0.0;
  for (const auto& p : parts) {
    for (const auto& m : p.c) e += mu.dot(m.cwiseAbs2() * mv);
  }
  return e;
}

}  // namespace

double parseval_check(const QSignal& f, const GridAxis& ax_u, const GridAxis& ax_v) {
  const double e = energy(f);
  if (!(e > 0.0)) throw Error(ErrorKind::ZeroSignal, "parseval_check of a zero signal");
  const double inside = q_energy_on(f, ax_u, ax_v);
  const double wider = q_energy_on(f, ax_u.widened(ax_u.count / 4), ax_v.widened(ax_v.count / 4));
  if (std::abs(wider - inside) > 1e-10 * e) {
    throw Error(ErrorKind::WindowTooSmall,
                "spectral window misses more than 1e-10 of the signal energy");
  }
  return std::abs(e - inside) / e;
}

double parseval_check(const QSignal& f) {
  return parseval_check(f, dual_axis(f.ax_x()), dual_axis(f.ax_y()));
}

double band_energy(const QSignal& f, double W, std::size_t quad_n) {
  const auto rule = gauss_legendre(quad_n, -W, W);
  const auto parts = component_spectra(f, rule.nodes, rule.nodes);
  const Eigen::Map<const Eigen::VectorXd> w(rule.weights.data(),
                                            static_cast<Eigen::Index>(rule.weights.size()));
  double e = 0.0;
  for (const auto& p : parts) {
    for (const auto& m : p.c) e += w.dot(m.cwiseAbs2() * w);
  }
  return e;
}

QSignal modulate(const QSignal& f, double r) {
  QSignal out = f;
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    const Quaternion e = exp_i(r * f.ax_x().coord(ix));
    for (std::size_t iy = 0; iy < f.ny(); ++iy) out(ix, iy) = e * f(ix, iy);
  }
  return out;
}

}  // namespace qpswf
