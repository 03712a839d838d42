#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qpswf/quaternion.hpp"

namespace qpswf {

// Uniform 1D sample axis: coord(n) = start + n * step, n in [0, count).
struct GridAxis {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  GridAxis() = default;
  GridAxis(double start_, double step_, std::size_t count_);

  // Odd count symmetric about zero covering [-half_width, half_width].
  static GridAxis symmetric(double half_width, std::size_t count);

  double coord(std::size_t n) const { return start + static_cast<double>(n) * step; }
  double end() const { return coord(count - 1); }
  std::vector<double> coords() const;
  // Trapezoid weights over the whole axis.
  std::vector<double> trapezoid_weights() const;
  // Same axis with `extra` nodes appended on each side.
  GridAxis widened(std::size_t extra) const;

  bool same_as(const GridAxis& other) const;
};

// Axis-aligned integration region. Integrals over a sub-box use the trapezoid
// rule on the nodes it contains, so nodes on the box edge get half weight.
struct Region {
  enum class Kind { FullGrid, CenteredSquare, Box };

  Kind kind = Kind::FullGrid;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double y_lo = 0.0;
  double y_hi = 0.0;

  static Region full() { return {}; }
  static Region centered_square(double half_width);
  static Region box(double x_lo, double x_hi, double y_lo, double y_hi);

  double half_width() const { return x_hi; }
};

// Per-node weights of `region` along one axis (zero outside the region).
std::vector<double> axis_weights(const GridAxis& axis, const Region& region, bool along_x);

// Quaternion-valued samples on a tensor grid. values[ix * ny + iy] holds f(x_ix, y_iy).
class QSignal {
 public:
  QSignal() = default;
  QSignal(const GridAxis& ax_x, const GridAxis& ax_y);
  QSignal(const GridAxis& ax_x, const GridAxis& ax_y, std::vector<Quaternion> values);

  static QSignal sample(const GridAxis& ax_x, const GridAxis& ax_y,
                        const std::function<Quaternion(double, double)>& f);

  const GridAxis& ax_x() const { return ax_x_; }
  const GridAxis& ax_y() const { return ax_y_; }
  std::size_t nx() const { return ax_x_.count; }
  std::size_t ny() const { return ax_y_.count; }
  std::size_t size() const { return values_.size(); }

  Quaternion& operator()(std::size_t ix, std::size_t iy) { return values_[ix * ny() + iy]; }
  const Quaternion& operator()(std::size_t ix, std::size_t iy) const {
    return values_[ix * ny() + iy];
  }
  std::vector<Quaternion>& values() { return values_; }
  const std::vector<Quaternion>& values() const { return values_; }

  // Trapezoid product weights over the full grid.
  const std::vector<double>& weights_x() const { return wx_; }
  const std::vector<double>& weights_y() const { return wy_; }
  double quad_weight(std::size_t ix, std::size_t iy) const { return wx_[ix] * wy_[iy]; }

  bool same_grid(const QSignal& other) const;

  QSignal& operator+=(const QSignal& other);
  QSignal& operator-=(const QSignal& other);
  QSignal& operator*=(double s);

 private:
  GridAxis ax_x_;
  GridAxis ax_y_;
  std::vector<Quaternion> values_;
  std::vector<double> wx_;
  std::vector<double> wy_;
};

QSignal operator+(QSignal a, const QSignal& b);
QSignal operator-(QSignal a, const QSignal& b);
QSignal operator*(double s, QSignal a);
// Pointwise left / right multiplication by a constant quaternion.
QSignal left_multiply(const Quaternion& q, QSignal f);
QSignal right_multiply(QSignal f, const Quaternion& q);

// Left inner product: integral of f * conj(g) over the region.
Quaternion inner_product(const QSignal& f, const QSignal& g, const Region& region = Region::full());
double scalar_inner_product(const QSignal& f, const QSignal& g, const Region& region = Region::full());
double energy(const QSignal& f, const Region& region = Region::full());
double norm(const QSignal& f, const Region& region = Region::full());
// arccos of the normalized scalar inner product, in [0, pi].
double angle(const QSignal& f, const QSignal& g);

// Largest pointwise modulus.
double sup_modulus(const QSignal& f);

}  // namespace qpswf
