#include "qpswf/split_matrix.hpp"

#include "qpswf/error.hpp"

namespace qpswf {

Quaternion frobenius_inner(const SplitMatrix& x, const SplitMatrix& y) {
  double d[4][4];
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 4; ++s) d[r][s] = x.c[r].cwiseProduct(y.c[s]).sum();
  }
  return {d[0][0] + d[1][1] + d[2][2] + d[3][3],
          -d[0][1] + d[1][0] - d[2][3] + d[3][2],
          -d[0][2] + d[1][3] + d[2][0] - d[3][1],
          -d[0][3] - d[1][2] + d[2][1] + d[3][0]};
}

SplitMatrix hadamard(const SplitMatrix& x, const Eigen::MatrixXd& w) {
  SplitMatrix out;
  for (int k = 0; k < 4; ++k) out.c[k] = x.c[k].cwiseProduct(w);
  return out;
}

SplitMatrix left_multiply(const Quaternion& q, const SplitMatrix& m) {
  SplitMatrix out;
  out.c[0] = q.w * m.c[0] - q.x * m.c[1] - q.y * m.c[2] - q.z * m.c[3];
  out.c[1] = q.w * m.c[1] + q.x * m.c[0] + q.y * m.c[3] - q.z * m.c[2];
  out.c[2] = q.w * m.c[2] - q.x * m.c[3] + q.y * m.c[0] + q.z * m.c[1];
  out.c[3] = q.w * m.c[3] + q.x * m.c[2] - q.y * m.c[1] + q.z * m.c[0];
  return out;
}

SplitMatrix right_multiply(const SplitMatrix& m, const Quaternion& q) {
  SplitMatrix out;
  out.c[0] = m.c[0] * q.w - m.c[1] * q.x - m.c[2] * q.y - m.c[3] * q.z;
  out.c[1] = m.c[0] * q.x + m.c[1] * q.w + m.c[2] * q.z - m.c[3] * q.y;
  out.c[2] = m.c[0] * q.y - m.c[1] * q.z + m.c[2] * q.w + m.c[3] * q.x;
  out.c[3] = m.c[0] * q.z + m.c[1] * q.y - m.c[2] * q.x + m.c[3] * q.w;
  return out;
}

SplitMatrix to_split(const QSignal& f) {
  SplitMatrix m(static_cast<Eigen::Index>(f.nx()), static_cast<Eigen::Index>(f.ny()));
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    for (std::size_t iy = 0; iy < f.ny(); ++iy) {
      m.set(static_cast<Eigen::Index>(ix), static_cast<Eigen::Index>(iy), f(ix, iy));
    }
  }
  return m;
}

QSignal to_signal(const SplitMatrix& m, const GridAxis& ax_x, const GridAxis& ax_y) {
  if (static_cast<std::size_t>(m.rows()) != ax_x.count ||
      static_cast<std::size_t>(m.cols()) != ax_y.count) {
    throw Error(ErrorKind::LengthMismatch, "matrix shape does not match the grid");
  }
  QSignal f(ax_x, ax_y);
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    for (std::size_t iy = 0; iy < f.ny(); ++iy) {
      f(ix, iy) = m.at(static_cast<Eigen::Index>(ix), static_cast<Eigen::Index>(iy));
    }
  }
  return f;
}

}  // namespace qpswf
