#include "qpswf/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qpswf/error.hpp"
#include "qpswf/gauss_legendre.hpp"
#include "qpswf/qft.hpp"

namespace qpswf {

namespace {

double clamp_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

std::size_t default_grid_quad(const QSignal& f, double W) {
  const double lx = std::max(std::abs(f.ax_x().start), std::abs(f.ax_x().end()));
  const double ly = std::max(std::abs(f.ax_y().start), std::abs(f.ax_y().end()));
  return 64 + static_cast<std::size_t>(std::ceil(W * std::max(lx, ly)));
}

std::size_t default_model_quad(const NodalPlane& plane) {
  return std::max<std::size_t>(64, plane.x.size() + static_cast<std::size_t>(
                                                        std::ceil(2.0 * plane.band() * plane.half_width())));
}

void require_basis(const BasisSet2D& basis) {
  if (!basis.basis1d || basis.items.empty()) throw Error(ErrorKind::BadParameters, "empty basis");
}

}  // namespace

QSignal time_limit(const QSignal& f, double T) {
  if (!(T > 0.0)) throw Error(ErrorKind::BadParameters, "T must be positive");
  (void)axis_weights(f.ax_x(), Region::centered_square(T), true);
  (void)axis_weights(f.ax_y(), Region::centered_square(T), false);
  QSignal out(f.ax_x(), f.ax_y());
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    const double x = f.ax_x().coord(ix);
    if (std::abs(x) > T * (1.0 + 1e-12)) continue;
    for (std::size_t iy = 0; iy < f.ny(); ++iy) {
      if (std::abs(f.ax_y().coord(iy)) <= T * (1.0 + 1e-12)) out(ix, iy) = f(ix, iy);
    }
  }
  return out;
}

QSignal band_limit(const QSignal& f, double W, std::size_t quad_n) {
  if (!(W > 0.0)) throw Error(ErrorKind::BadParameters, "W must be positive");
  const double nyquist = std::numbers::pi / std::max(f.ax_x().step, f.ax_y().step);
  if (W > nyquist) {
    throw Error(ErrorKind::WindowTooSmall, "band exceeds the Nyquist frequency of the grid");
  }
  if (quad_n == 0) quad_n = default_grid_quad(f, W);
  const QuadratureRule rule = gauss_legendre(quad_n, -W, W);
  const SplitMatrix spec = assemble_spectrum(component_spectra(f, rule.nodes, rule.nodes));
  const auto xs = f.ax_x().coords();
  const auto ys = f.ax_y().coords();
  return to_signal(inverse_at(spec, rule.nodes, rule.weights, rule.nodes, rule.weights, xs, ys),
                   f.ax_x(), f.ax_y());
}

EnergyReport make_report(double xi, double eta_q, double lambda0) {
  EnergyReport r;
  r.xi = xi;
  r.eta_q = eta_q;
  r.lambda0 = lambda0;
  r.angle_sum_deficit = std::isnan(lambda0)
                            ? std::numeric_limits<double>::quiet_NaN()
                            : clamp_acos(xi) + clamp_acos(eta_q) - clamp_acos(std::sqrt(lambda0));
  return r;
}

EnergyReport energy_ratios(const QSignal& f, double T, double W, double lambda0,
                           std::size_t quad_n) {
  const double e = energy(f);
  if (!(e > 0.0)) throw Error(ErrorKind::ZeroSignal, "signal has zero energy");
  if (quad_n == 0) quad_n = default_grid_quad(f, W);
  const double et = energy(f, Region::centered_square(T));
  const double ew = band_energy(f, W, quad_n);
  return make_report(std::sqrt(std::clamp(et / e, 0.0, 1.0)), std::sqrt(std::clamp(ew / e, 0.0, 1.0)),
                     lambda0);
}

NodalPlane basis_plane(const BasisSet2D& basis) {
  require_basis(basis);
  return NodalPlane::square(basis.basis1d->axis);
}

EnergyReport energy_ratios(const BasisSet2D& basis, const NodalSignal& f, std::size_t quad_n) {
  const NodalPlane plane = basis_plane(basis);
  const double e = energy(plane, f);
  if (!(e > 0.0)) throw Error(ErrorKind::ZeroSignal, "signal has zero energy");
  if (quad_n == 0) quad_n = default_model_quad(plane);
  const double et = energy_on_square(plane, f);
  const double ew = spectral_band_energy(plane, f, quad_n);
  return make_report(std::sqrt(std::clamp(et / e, 0.0, 1.0)), std::sqrt(std::clamp(ew / e, 0.0, 1.0)),
                     basis.lambda0());
}

double angle(const NodalPlane& plane, const NodalSignal& f, const NodalSignal& g) {
  const double nf = energy(plane, f);
  const double ng = energy(plane, g);
  if (!(nf > 0.0) || !(ng > 0.0)) throw Error(ErrorKind::ZeroSignal, "angle with a zero signal");
  return clamp_acos(inner_product(plane, f, g).w / std::sqrt(nf * ng));
}

LeastAngle least_angle_check(const BasisSet2D& basis) {
  const NodalPlane plane = basis_plane(basis);
  const NodalSignal psi0 = element_signal(basis, 0);
  LeastAngle out;
  out.theoretical = clamp_acos(std::sqrt(basis.lambda0()));
  out.achieved = angle(plane, psi0, time_limit(plane, psi0));
  return out;
}

double boundary_eta(double xi, double lambda0) {
  const double s = std::sqrt(lambda0);
  if (xi <= s) return 1.0;
  return std::cos(clamp_acos(s) - clamp_acos(xi));
}

NodalSignal build_boundary_signal(double xi, const BasisSet2D& basis) {
  const NodalPlane plane = basis_plane(basis);
  const double l0 = basis.lambda0();
  const double s = std::sqrt(l0);
  if (!(xi >= s - 1e-12 && xi <= 1.0 + 1e-12)) {
    throw Error(ErrorKind::XiOutOfRange, "boundary signal needs sqrt(lambda0) <= xi <= 1");
  }
  xi = std::clamp(xi, s, 1.0);
  if (!(l0 < 1.0)) throw Error(ErrorKind::BadParameters, "lambda0 is not below 1");
  const double p = std::sqrt(std::max(0.0, (1.0 - xi * xi) / (1.0 - l0)));
  const double q = xi / s - p;
  const NodalSignal psi0 = element_signal(basis, 0);
  return p * psi0 + q * time_limit(plane, psi0);
}

NodalSignal build_zero_xi_signal(std::size_t index, const BasisSet2D& basis) {
  const NodalPlane plane = basis_plane(basis);
  if (index >= basis.size()) throw Error(ErrorKind::BadIndex, "basis index out of range");
  const double ln = basis.items[index].lambda2d;
  if (!(ln < 1.0)) throw Error(ErrorKind::BadIndex, "lambda_n is not below 1");
  const NodalSignal psi = element_signal(basis, index);
  return (1.0 / std::sqrt(1.0 - ln)) * (psi - time_limit(plane, psi));
}

NodalSignal build_eta_one_signal(double xi, std::optional<std::size_t> index,
                                 const BasisSet2D& basis) {
  require_basis(basis);
  const double l0 = basis.lambda0();
  if (!(xi >= 0.0 && xi * xi <= l0)) {
    throw Error(ErrorKind::XiOutOfRange, "band-limited construction needs 0 <= xi <= sqrt(lambda0)");
  }
  std::size_t n = 0;
  if (index) {
    n = *index;
    if (n == 0 || n >= basis.size()) throw Error(ErrorKind::BadIndex, "basis index out of range");
    if (!(basis.items[n].lambda2d < xi * xi)) {
      throw Error(ErrorKind::BadIndex, "lambda_n must be below xi^2");
    }
  } else {
    for (n = 1; n < basis.size(); ++n) {
      if (basis.items[n].lambda2d < xi * xi) break;
    }
    if (n == basis.size()) {
      throw Error(ErrorKind::NoAdmissibleIndex, "no basis element with lambda_n < xi^2");
    }
  }
  const double ln = basis.items[n].lambda2d;
  const double d = std::sqrt(l0 - ln);
  return (std::sqrt(xi * xi - ln) / d) * element_signal(basis, 0) +
         (std::sqrt(l0 - xi * xi) / d) * element_signal(basis, n);
}

NodalSignal build_time_limited_extremal(const BasisSet2D& basis) {
  const NodalPlane plane = basis_plane(basis);
  return (1.0 / std::sqrt(basis.lambda0())) * time_limit(plane, element_signal(basis, 0));
}

std::vector<RegionSample> sweep_admissible_region(const BasisSet2D& basis,
                                                  std::span<const double> xi_grid,
                                                  std::size_t quad_n) {
  require_basis(basis);
  const double l0 = basis.lambda0();
  const double s = std::sqrt(l0);
  std::vector<RegionSample> out;
  for (double xi : xi_grid) {
    out.push_back({make_report(xi, boundary_eta(xi, l0), l0), "curve"});
  }
  auto measure = [&](const NodalSignal& g, const char* source) {
    out.push_back({energy_ratios(basis, g, quad_n), source});
  };
  measure(element_signal(basis, 0), "psi0");
  measure(build_time_limited_extremal(basis), "time_limited");
  for (double xi : xi_grid) {
    if (xi >= s && xi <= 1.0) {
      measure(build_boundary_signal(xi, basis), "boundary");
    } else if (xi > 0.0 && xi < s) {
      try {
        measure(build_eta_one_signal(xi, std::nullopt, basis), "eta_one");
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoAdmissibleIndex) throw;
      }
    }
  }
  const std::size_t zero_count = std::min<std::size_t>(basis.size(), 4);
  for (std::size_t n = 0; n < zero_count; ++n) {
    measure(build_zero_xi_signal(n, basis), "zero_xi");
  }
  return out;
}

}  // namespace qpswf
