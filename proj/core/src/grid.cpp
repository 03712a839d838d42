#include "qpswf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qpswf/error.hpp"

namespace qpswf {

GridAxis::GridAxis(double start_, double step_, std::size_t count_)
    : start(start_), step(step_), count(count_) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start)) {
    throw Error(ErrorKind::NonUniformGrid, "grid axis step must be positive and finite");
  }
  if (count < 2) throw Error(ErrorKind::BadParameters, "grid axis needs at least 2 nodes");
}

GridAxis GridAxis::symmetric(double half_width, std::size_t count) {
  if (count < 3 || count % 2 == 0) {
    throw Error(ErrorKind::BadParameters, "symmetric grid needs an odd node count >= 3");
  }
  if (!(half_width > 0.0)) throw Error(ErrorKind::BadParameters, "half width must be positive");
  const double step = 2.0 * half_width / static_cast<double>(count - 1);
  return GridAxis(-half_width, step, count);
}

std::vector<double> GridAxis::coords() const {
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) out[n] = coord(n);
  return out;
}

std::vector<double> GridAxis::trapezoid_weights() const {
  std::vector<double> w(count, step);
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

GridAxis GridAxis::widened(std::size_t extra) const {
  return GridAxis(start - static_cast<double>(extra) * step, step, count + 2 * extra);
}

bool GridAxis::same_as(const GridAxis& other) const {
  const double tol = 1e-12 * std::max(step, other.step);
  return count == other.count && std::abs(step - other.step) <= tol &&
         std::abs(start - other.start) <= tol * static_cast<double>(count);
}

Region Region::centered_square(double half_width) {
  if (!(half_width > 0.0)) throw Error(ErrorKind::BadParameters, "region half width must be positive");
  Region r;
  r.kind = Kind::CenteredSquare;
  r.x_lo = r.y_lo = -half_width;
  r.x_hi = r.y_hi = half_width;
  return r;
}

Region Region::box(double x_lo, double x_hi, double y_lo, double y_hi) {
  if (!(x_hi > x_lo) || !(y_hi > y_lo)) throw Error(ErrorKind::BadParameters, "empty region box");
  Region r;
  r.kind = Kind::Box;
  r.x_lo = x_lo;
  r.x_hi = x_hi;
  r.y_lo = y_lo;
  r.y_hi = y_hi;
  return r;
}

std::vector<double> axis_weights(const GridAxis& axis, const Region& region, bool along_x) {
  if (region.kind == Region::Kind::FullGrid) return axis.trapezoid_weights();
  const double lo = along_x ? region.x_lo : region.y_lo;
  const double hi = along_x ? region.x_hi : region.y_hi;
  const double tol = 1e-9 * axis.step;
  if (lo < axis.start - tol || hi > axis.end() + tol) {
    throw Error(ErrorKind::RegionOutOfGrid, "region [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "] exceeds the grid");
  }
  std::vector<double> w(axis.count, 0.0);
  std::size_t first = axis.count;
  std::size_t last = 0;
  for (std::size_t n = 0; n < axis.count; ++n) {
    const double x = axis.coord(n);
    if (x >= lo - tol && x <= hi + tol) {
      w[n] = axis.step;
      first = std::min(first, n);
      last = std::max(last, n);
    }
  }
  if (first < axis.count) {
    w[first] *= 0.5;
    w[last] *= 0.5;
    if (first == last) w[first] = 0.0;
  }
  return w;
}

QSignal::QSignal(const GridAxis& ax_x, const GridAxis& ax_y)
    : QSignal(ax_x, ax_y, std::vector<Quaternion>(ax_x.count * ax_y.count)) {}

QSignal::QSignal(const GridAxis& ax_x, const GridAxis& ax_y, std::vector<Quaternion> values)
    : ax_x_(ax_x), ax_y_(ax_y), values_(std::move(values)) {
  if (values_.size() != ax_x.count * ax_y.count) {
    throw Error(ErrorKind::LengthMismatch, "sample count does not match the grid");
  }
  wx_ = ax_x_.trapezoid_weights();
  wy_ = ax_y_.trapezoid_weights();
}

QSignal QSignal::sample(const GridAxis& ax_x, const GridAxis& ax_y,
                        const std::function<Quaternion(double, double)>& f) {
  QSignal s(ax_x, ax_y);
  for (std::size_t ix = 0; ix < ax_x.count; ++ix) {
    const double x = ax_x.coord(ix);
    for (std::size_t iy = 0; iy < ax_y.count; ++iy) s(ix, iy) = f(x, ax_y.coord(iy));
  }
  return s;
}

bool QSignal::same_grid(const QSignal& other) const {
  return ax_x_.same_as(other.ax_x_) && ax_y_.same_as(other.ax_y_);
}

namespace {
void require_same_grid(const QSignal& a, const QSignal& b) {
  if (!a.same_grid(b)) throw Error(ErrorKind::GridMismatch, "signals live on different grids");
}
}  // namespace

QSignal& QSignal::operator+=(const QSignal& other) {
  require_same_grid(*this, other);
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] += other.values_[n];
  return *this;
}

QSignal& QSignal::operator-=(const QSignal& other) {
  require_same_grid(*this, other);
  for (std::size_t n = 0; n < values_.size(); ++n) values_[n] -= other.values_[n];
  return *this;
}

QSignal& QSignal::operator*=(double s) {
  for (auto& v : values_) v *= s;
  return *this;
}

QSignal operator+(QSignal a, const QSignal& b) { return a += b; }
QSignal operator-(QSignal a, const QSignal& b) { return a -= b; }
QSignal operator*(double s, QSignal a) { return a *= s; }

QSignal left_multiply(const Quaternion& q, QSignal f) {
  for (auto& v : f.values()) v = q * v;
  return f;
}

QSignal right_multiply(QSignal f, const Quaternion& q) {
  for (auto& v : f.values()) v = v * q;
  return f;
}

Quaternion inner_product(const QSignal& f, const QSignal& g, const Region& region) {
  require_same_grid(f, g);
  const auto wx = axis_weights(f.ax_x(), region, true);
  const auto wy = axis_weights(f.ax_y(), region, false);
  Quaternion acc;
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    if (wx[ix] == 0.0) continue;
    Quaternion row;
    for (std::size_t iy = 0; iy < f.ny(); ++iy) {
      if (wy[iy] == 0.0) continue;
      row += (f(ix, iy) * conj(g(ix, iy))) * wy[iy];
    }
    acc += row * wx[ix];
  }
  return acc;
}

double scalar_inner_product(const QSignal& f, const QSignal& g, const Region& region) {
  return inner_product(f, g, region).w;
}

double energy(const QSignal& f, const Region& region) {
  const auto wx = axis_weights(f.ax_x(), region, true);
  const auto wy = axis_weights(f.ax_y(), region, false);
  double acc = 0.0;
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    if (wx[ix] == 0.0) continue;
    double row = 0.0;
    for (std::size_t iy = 0; iy < f.ny(); ++iy) row += norm_sq(f(ix, iy)) * wy[iy];
    acc += row * wx[ix];
  }
  return acc;
}

double norm(const QSignal& f, const Region& region) { return std::sqrt(energy(f, region)); }

double angle(const QSignal& f, const QSignal& g) {
  require_same_grid(f, g);
  const double nf = norm(f);
  const double ng = norm(g);
  if (!(nf > std::numeric_limits<double>::min()) || !(ng > std::numeric_limits<double>::min())) {
    throw Error(ErrorKind::ZeroSignal, "angle of a zero signal is undefined");
  }
  const double c = scalar_inner_product(f, g) / (nf * ng);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double sup_modulus(const QSignal& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, modulus(v));
  return m;
}

}  // namespace qpswf
