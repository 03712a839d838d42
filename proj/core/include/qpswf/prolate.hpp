#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qpswf/grid.hpp"
#include "qpswf/nodal_axis.hpp"
#include "qpswf/quaternion.hpp"

namespace qpswf {

// Eigenvalues below this are treated as numerically zero: the extension
// formula divides by lambda and would amplify quadrature noise.
inline constexpr double kEigenvalueFloor = 1e-12;

// 1D prolate eigenpairs of the sinc operator restricted to [-T, T], band W.
struct ProlateBasis1D {
  double T = 0.0;
  double W = 0.0;
  NodalAxis axis;
  std::vector<double> eigvals;  // descending
  // Column k holds phi_k at the nodes; unit norm on the real line, so the
  // weighted node norm is sqrt(lambda_k).
  Eigen::MatrixXd values;
  // Finite Fourier multipliers: int_T exp(i kappa s x) phi_k(s) ds = mu_k phi_k(x)
  // with kappa = W / T. mu_k is real for even k and imaginary for odd k.
  std::vector<std::complex<double>> mu;

  double c() const { return T * W; }
  double kappa() const { return W / T; }
  std::size_t count() const { return eigvals.size(); }
  std::size_t usable_count() const;
  // w * phi_k / lambda_k: phi_k(x) = sum_p coeff_p k(x - s_p).
  Eigen::VectorXd extension_coefficients(std::size_t k) const;
};

Eigen::MatrixXd build_sinc_operator(double T, double W, std::size_t N);

// Eigenvalues come from the symmetrized sinc operator. Eigenvectors are taken
// from the finite Fourier operator split by parity, which commutes with it and
// keeps well separated eigenvalues where the sinc spectrum clusters near 1 or 0.
ProlateBasis1D eig_prolate_1d(double T, double W, std::size_t N, std::size_t count);

double extend_eigenfunction(const ProlateBasis1D& basis, std::size_t k, double x);
Eigen::VectorXd extend_eigenfunction(const ProlateBasis1D& basis, std::size_t k,
                                     std::span<const double> xs);

// psi = coeff * phi_m(x) phi_n(y).
struct Qpswf2D {
  std::size_t m = 0;
  std::size_t n = 0;
  double lambda2d = 0.0;
  std::complex<double> mu_x;  // i-complex: mu_m i^m
  std::complex<double> mu_y;  // j-complex (imaginary part along j): mu_n j^n
  Quaternion coeff;
  QSignal values;  // empty when the set was built without a grid
};

struct BasisSet2D {
  std::shared_ptr<const ProlateBasis1D> basis1d;
  Quaternion coeff;
  std::vector<Qpswf2D> items;

  std::size_t size() const { return items.size(); }
  double lambda0() const { return items.front().lambda2d; }
};

inline Quaternion default_coefficient() { return {0.5, 0.5, 0.5, 0.5}; }

// The `count` largest tensor products, ties broken by (m, n).
BasisSet2D build_qpswf_basis(std::shared_ptr<const ProlateBasis1D> basis1d, std::size_t count,
                             const Quaternion& coeff);
BasisSet2D build_qpswf_basis(std::shared_ptr<const ProlateBasis1D> basis1d, std::size_t count,
                             const Quaternion& coeff, const GridAxis& ax_x, const GridAxis& ax_y);
// Single-index family psi_n = coeff * phi_n(x) phi_n(y), n < count.
BasisSet2D build_diagonal_family(std::shared_ptr<const ProlateBasis1D> basis1d, std::size_t count,
                                 const Quaternion& coeff);

QSignal sample_element(const ProlateBasis1D& basis, const Qpswf2D& item, const GridAxis& ax_x,
                       const GridAxis& ax_y);

// Relative residual of lambda f - int_T k(x-s) k(y-t) f(s,t) ds dt on the grid of
// `samples`, where `inside` evaluates f on [-T, T]^2 and `samples` holds f.
double lowpass_residual(const QSignal& samples, const std::function<Quaternion(double, double)>& inside,
                        double lambda, double T, double W, std::size_t quad_n);
double verify_lowpass(const ProlateBasis1D& basis, const Qpswf2D& psi, std::size_t quad_n = 0);

struct FiniteQftReport {
  double residual = 0.0;             // with the fitted multipliers
  double multiplier_residual = 0.0;  // |lambda - kappa^2 |mu_x mu_y|^2 / (2 pi)^2| / lambda
  double stored_mismatch = 0.0;      // fitted vs stored multipliers, relative
  std::complex<double> mu_x;
  std::complex<double> mu_y;
};
FiniteQftReport verify_finite_qft(const ProlateBasis1D& basis, const Qpswf2D& psi,
                                  std::size_t quad_n = 0);

struct AllpassReport {
  double residual = 0.0;
  double tail_energy = 0.0;  // unit norm minus the energy inside the window
  double tail_bound = 0.0;   // sqrt(tail_energy / window energy) bounds the truncation part
};
// psi sampled on a grid that serves as the truncated integration window.
AllpassReport verify_allpass(const QSignal& psi, double W);

// Dense quaternion matrix.
struct QuaternionMatrix {
  std::size_t n = 0;
  std::vector<Quaternion> a;

  explicit QuaternionMatrix(std::size_t size = 0) : n(size), a(size * size) {}
  Quaternion& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  // max |G - diag(d)| entrywise.
  double max_deviation_from_diagonal(std::span<const double> d) const;
};

enum class GramDomain { RealPlane, TimeSquare };

// 1D Gram matrices of the first `count` eigenfunctions.
Eigen::MatrixXd gram_1d_real_line(const ProlateBasis1D& basis, std::size_t count);
Eigen::MatrixXd gram_1d_interval(const ProlateBasis1D& basis, std::size_t count);

QuaternionMatrix gram_matrix(const BasisSet2D& basis, GramDomain domain);
// From the sampled values (trapezoid over the region).
QuaternionMatrix gram_matrix(const BasisSet2D& basis, const Region& region);

}  // namespace qpswf
