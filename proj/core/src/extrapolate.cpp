#include "qpswf/extrapolate.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qpswf/concentration.hpp"
#include "qpswf/error.hpp"

namespace qpswf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same_shape(const SplitMatrix& a, const NodalPlane& plane) {
  return a.rows() == static_cast<Eigen::Index>(plane.x.size()) &&
         a.cols() == static_cast<Eigen::Index>(plane.y.size());
}

}  // namespace

ExtrapolationProblem problem_from_grid(const QSignal& observed, double d, double W) {
  if (!(d > 0.0) || !(W > 0.0)) throw Error(ErrorKind::BadParameters, "d and W must be positive");
  ExtrapolationProblem p;
  p.plane.x = NodalAxis::from_grid(observed.ax_x(), d, W);
  p.plane.y = NodalAxis::from_grid(observed.ax_y(), d, W);
  const auto& ix = p.plane.x.grid_indices();
  const auto& iy = p.plane.y.grid_indices();
  std::vector<bool> in_x(observed.nx(), false);
  std::vector<bool> in_y(observed.ny(), false);
  for (auto i : ix) in_x[i] = true;
  for (auto i : iy) in_y[i] = true;
  for (std::size_t a = 0; a < observed.nx(); ++a) {
    for (std::size_t b = 0; b < observed.ny(); ++b) {
      if (!(in_x[a] && in_y[b]) && norm_sq(observed(a, b)) != 0.0) {
        throw Error(ErrorKind::BadParameters, "observation is not zero outside D");
      }
    }
  }
  p.observed = SplitMatrix(static_cast<Eigen::Index>(ix.size()), static_cast<Eigen::Index>(iy.size()));
  for (std::size_t a = 0; a < ix.size(); ++a) {
    for (std::size_t b = 0; b < iy.size(); ++b) {
      p.observed.set(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b), observed(ix[a], iy[b]));
    }
  }
  return p;
}

NodalSignal pg_step(const NodalPlane& plane, const SplitMatrix& observed, const NodalSignal& prev) {
  if (!same_shape(observed, plane) || !same_shape(prev.band, plane) ||
      !same_shape(prev.limited, plane)) {
    throw Error(ErrorKind::GridMismatch, "observation and iterate do not match the plane");
  }
  NodalSignal g = limited_signal(observed);
  g += prev;
  g -= time_limit(plane, prev);
  return band_limit(plane, g);
}

QSignal pg_step(const QSignal& observed, const QSignal& prev, const Region& d_region, double W,
                std::size_t quad_n) {
  if (!observed.same_grid(prev)) throw Error(ErrorKind::GridMismatch, "grids differ");
  const auto wx = axis_weights(observed.ax_x(), d_region, true);
  const auto wy = axis_weights(observed.ax_y(), d_region, false);
  QSignal g = prev;
  for (std::size_t a = 0; a < observed.nx(); ++a) {
    if (wx[a] <= 0.0) continue;
    for (std::size_t b = 0; b < observed.ny(); ++b) {
      if (wy[b] > 0.0) g(a, b) = observed(a, b);
    }
  }
  return band_limit(g, W, quad_n);
}

ExtrapolationTrace pg_run(const ExtrapolationProblem& problem, std::size_t max_steps,
                          double stop_tol) {
  if (max_steps == 0) throw Error(ErrorKind::BadParameters, "max_steps must be at least 1");
  const NodalPlane& plane = problem.plane;
  const double W = plane.band();
  const bool probe = problem.truth && problem.probe_x.count > 0 && problem.probe_y.count > 0;

  ExtrapolationTrace trace;
  trace.initial_error_energy = kNaN;
  NodalSignal f = NodalSignal::zero(plane);
  if (problem.truth) {
    trace.initial_error_energy = energy(plane, *problem.truth);
  } else if (problem.truth_samples) {
    trace.initial_error_energy = energy(*problem.truth_samples);
  }

  for (std::size_t n = 1; n <= max_steps; ++n) {
    NodalSignal next = pg_step(plane, problem.observed, f);
    const double change = energy(plane, next - f);
    const double size = energy(plane, next);
    TraceRecord rec;
    rec.n = n;
    rec.delta = size > 0.0 ? std::sqrt(std::max(change, 0.0) / size) : (change > 0.0 ? 1.0 : 0.0);
    rec.error_energy = kNaN;
    rec.sup_error = kNaN;
    if (problem.truth) {
      const NodalSignal e = *problem.truth - next;
      rec.error_energy = std::max(0.0, energy(plane, e));
      if (probe) rec.sup_error = sup_modulus(sample(plane, e, problem.probe_x, problem.probe_y));
    } else if (problem.truth_samples) {
      const QSignal& t = *problem.truth_samples;
      const QSignal e = t - sample(plane, next, t.ax_x(), t.ax_y());
      rec.error_energy = energy(e);
      rec.sup_error = sup_modulus(e);
    }
    rec.bound = std::isnan(rec.error_energy) ? kNaN : pointwise_bound(rec.error_energy, W);
    rec.sqrt_w_bound = std::isnan(rec.error_energy) ? kNaN : sqrt_w_pointwise_bound(rec.error_energy, W);
    trace.records.push_back(rec);
    f = std::move(next);
    if (rec.delta < stop_tol) {
      trace.converged = true;
      break;
    }
  }
  trace.final_iterate = std::move(f);
  return trace;
}

NodalSignal closed_form_iterate(std::span<const double> a, std::span<const double> lambdas,
                                std::size_t n, const BasisSet2D& basis) {
  if (a.size() != lambdas.size() || a.size() > basis.size()) {
    throw Error(ErrorKind::LengthMismatch, "coefficients must match a prefix of the basis");
  }
  const NodalPlane plane = basis_plane(basis);
  NodalSignal f = NodalSignal::zero(plane);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double c = a[j] * (1.0 - std::pow(1.0 - lambdas[j], static_cast<double>(n)));
    f += c * element_signal(basis, j);
  }
  return f;
}

double error_energy(std::span<const double> a, std::span<const double> lambdas, std::size_t n) {
  if (a.size() != lambdas.size()) throw Error(ErrorKind::LengthMismatch, "length mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    s += a[j] * a[j] * std::pow(1.0 - lambdas[j], 2.0 * static_cast<double>(n));
  }
  return s;
}

double pointwise_bound(double energy, double W) {
  return W / std::numbers::pi * std::sqrt(std::max(energy, 0.0));
}

double sqrt_w_pointwise_bound(double energy, double W) {
  return std::sqrt(W * std::max(energy, 0.0)) / std::numbers::pi;
}

}  // namespace qpswf
