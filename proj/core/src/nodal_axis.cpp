#include "qpswf/nodal_axis.hpp"

#include <algorithm>
#include <cmath>

#include "qpswf/error.hpp"
#include "qpswf/gauss_legendre.hpp"
#include "qpswf/kernel.hpp"

namespace qpswf {

NodalAxis::NodalAxis(Family family, double half_width, double band, std::vector<double> nodes,
                     std::vector<double> weights)
    : family_(family),
      half_width_(half_width),
      band_(band),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)) {
  const auto n = static_cast<Eigen::Index>(nodes_.size());
  kernel_.resize(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q <= p; ++q) {
      const double v = sinc_kernel(nodes_[p] - nodes_[q], band_);
      kernel_(p, q) = v;
      kernel_(q, p) = v;
    }
  }
}

NodalAxis NodalAxis::gauss(double half_width, double band, std::size_t n) {
  if (!(half_width > 0.0) || !(band > 0.0)) {
    throw Error(ErrorKind::BadParameters, "half width and band must be positive");
  }
  auto rule = gauss_legendre(n, -half_width, half_width);
  NodalAxis axis(Family::GaussLegendre, half_width, band, rule.nodes, rule.weights);
  // Barycentric weights for Legendre points: (-1)^p sqrt((1 - t_p^2) w_p).
  axis.barycentric_.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const double t = rule.nodes[p] / half_width;
    const double b = std::sqrt((1.0 - t * t) * rule.weights[p] / half_width);
    axis.barycentric_[p] = (p % 2 == 0) ? b : -b;
  }
  return axis;
}

NodalAxis NodalAxis::from_grid(const GridAxis& grid, double half_width, double band) {
  if (!(half_width > 0.0) || !(band > 0.0)) {
    throw Error(ErrorKind::BadParameters, "half width and band must be positive");
  }
  const Region box = Region::box(-half_width, half_width, -half_width, half_width);
  const auto w = axis_weights(grid, box, true);
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<std::size_t> idx;
  const double tol = 1e-9 * grid.step;
  for (std::size_t n = 0; n < grid.count; ++n) {
    const double x = grid.coord(n);
    if (std::abs(x) <= half_width + tol) {
      nodes.push_back(x);
      weights.push_back(w[n]);
      idx.push_back(n);
    }
  }
  if (nodes.size() < 2) throw Error(ErrorKind::RegionOutOfGrid, "observation square holds < 2 nodes");
  NodalAxis axis(Family::Uniform, half_width, band, nodes, weights);
  axis.grid_indices_ = std::move(idx);
  return axis;
}

Eigen::MatrixXd NodalAxis::kernel_rows(std::span<const double> xs) const {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t p = 0; p < size(); ++p) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p)) =
          sinc_kernel(xs[i] - nodes_[p], band_);
    }
  }
  return m;
}

bool NodalAxis::contains(double x) const {
  return std::abs(x) <= half_width_ * (1.0 + 1e-12);
}

Eigen::MatrixXd NodalAxis::interpolation_rows(std::span<const double> xs) const {
  const auto n = static_cast<Eigen::Index>(size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(xs.size()), n);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const auto row = static_cast<Eigen::Index>(i);
    if (!contains(x)) continue;
    // Exact hit on a node.
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
    const double scale = 1e-13 * half_width_;
    if (it != nodes_.end() && std::abs(*it - x) <= scale) {
      m(row, it - nodes_.begin()) = 1.0;
      continue;
    }
    if (it != nodes_.begin() && std::abs(*(it - 1) - x) <= scale) {
      m(row, it - 1 - nodes_.begin()) = 1.0;
      continue;
    }
    if (family_ == Family::GaussLegendre) {
      double denom = 0.0;
      for (Eigen::Index p = 0; p < n; ++p) {
        const double t = barycentric_[p] / (x - nodes_[p]);
        m(row, p) = t;
        denom += t;
      }
      m.row(row) /= denom;
    } else {
      // Piecewise linear between neighbouring grid nodes; constant beyond the end nodes.
      if (it == nodes_.begin()) {
        m(row, 0) = 1.0;
      } else if (it == nodes_.end()) {
        m(row, n - 1) = 1.0;
      } else {
        const Eigen::Index hi = it - nodes_.begin();
        const double t = (x - nodes_[hi - 1]) / (nodes_[hi] - nodes_[hi - 1]);
        m(row, hi - 1) = 1.0 - t;
        m(row, hi) = t;
      }
    }
  }
  return m;
}

}  // namespace qpswf
