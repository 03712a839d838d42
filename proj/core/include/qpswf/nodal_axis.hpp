#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qpswf/grid.hpp"

namespace qpswf {

// Quadrature nodes on [-half_width, half_width] together with the sinc kernel
// of band W evaluated between them.
class NodalAxis {
 public:
  enum class Family { GaussLegendre, Uniform };

  NodalAxis() = default;
  static NodalAxis gauss(double half_width, double band, std::size_t n);
  // Grid nodes inside [-half_width, half_width] with trapezoid weights.
  static NodalAxis from_grid(const GridAxis& axis, double half_width, double band);

  Family family() const { return family_; }
  double half_width() const { return half_width_; }
  double band() const { return band_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  Eigen::Map<const Eigen::VectorXd> weight_vector() const {
    return {weights_.data(), static_cast<Eigen::Index>(weights_.size())};
  }
  // K(p, q) = k(s_p - s_q).
  const Eigen::MatrixXd& kernel() const { return kernel_; }
  // For from_grid axes: index of each node on the source grid.
  const std::vector<std::size_t>& grid_indices() const { return grid_indices_; }

  // Rows k(x_i - s_p).
  Eigen::MatrixXd kernel_rows(std::span<const double> xs) const;
  // Rows that interpolate node values at x_i; zero rows for |x_i| > half_width.
  Eigen::MatrixXd interpolation_rows(std::span<const double> xs) const;
  bool contains(double x) const;

 private:
  NodalAxis(Family family, double half_width, double band, std::vector<double> nodes,
            std::vector<double> weights);

  Family family_ = Family::GaussLegendre;
  double half_width_ = 0.0;
  double band_ = 0.0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> barycentric_;
  std::vector<std::size_t> grid_indices_;
  Eigen::MatrixXd kernel_;
};

}  // namespace qpswf
