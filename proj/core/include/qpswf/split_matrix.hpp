#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "qpswf/grid.hpp"
#include "qpswf/quaternion.hpp"

namespace qpswf {

// Quaternion matrix stored as four real component matrices (w, i, j, k).
struct SplitMatrix {
  std::array<Eigen::MatrixXd, 4> c;

  SplitMatrix() = default;
  SplitMatrix(Eigen::Index rows, Eigen::Index cols) {
    for (auto& m : c) m = Eigen::MatrixXd::Zero(rows, cols);
  }

  Eigen::Index rows() const { return c[0].rows(); }
  Eigen::Index cols() const { return c[0].cols(); }

  Quaternion at(Eigen::Index r, Eigen::Index s) const {
    return {c[0](r, s), c[1](r, s), c[2](r, s), c[3](r, s)};
  }
  void set(Eigen::Index r, Eigen::Index s, const Quaternion& q) {
    c[0](r, s) = q.w;
    c[1](r, s) = q.x;
    c[2](r, s) = q.y;
    c[3](r, s) = q.z;
  }

  SplitMatrix& operator+=(const SplitMatrix& o) {
    for (int k = 0; k < 4; ++k) c[k] += o.c[k];
    return *this;
  }
  SplitMatrix& operator-=(const SplitMatrix& o) {
    for (int k = 0; k < 4; ++k) c[k] -= o.c[k];
    return *this;
  }
  SplitMatrix& operator*=(double s) {
    for (auto& m : c) m *= s;
    return *this;
  }
  double squared_norm() const {
    double s = 0.0;
    for (const auto& m : c) s += m.squaredNorm();
    return s;
  }
};

inline SplitMatrix operator+(SplitMatrix a, const SplitMatrix& b) { return a += b; }
inline SplitMatrix operator-(SplitMatrix a, const SplitMatrix& b) { return a -= b; }
inline SplitMatrix operator*(double s, SplitMatrix a) { return a *= s; }

// Real matrix times quaternion matrix (componentwise, since reals commute).
inline SplitMatrix sandwich(const Eigen::MatrixXd& left, const SplitMatrix& m,
                            const Eigen::MatrixXd& right_t) {
  SplitMatrix out;
  for (int k = 0; k < 4; ++k) out.c[k] = left * m.c[k] * right_t;
  return out;
}

// Sum over entries of x * conj(y).
Quaternion frobenius_inner(const SplitMatrix& x, const SplitMatrix& y);
// Elementwise product with a real matrix.
SplitMatrix hadamard(const SplitMatrix& x, const Eigen::MatrixXd& w);
// Left multiplication of every entry by q / right multiplication by q.
SplitMatrix left_multiply(const Quaternion& q, const SplitMatrix& m);
SplitMatrix right_multiply(const SplitMatrix& m, const Quaternion& q);

SplitMatrix to_split(const QSignal& f);
QSignal to_signal(const SplitMatrix& m, const GridAxis& ax_x, const GridAxis& ax_y);

}  // namespace qpswf
