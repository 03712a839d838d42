#pragma once

#include <cstddef>

#include "qpswf/grid.hpp"
#include "qpswf/nodal_axis.hpp"
#include "qpswf/prolate.hpp"
#include "qpswf/split_matrix.hpp"

namespace qpswf {

// Time square [-tau, tau]^2 and band square [-W, W]^2 discretised by one nodal
// axis per direction (both axes share tau and W).
struct NodalPlane {
  NodalAxis x;
  NodalAxis y;

  static NodalPlane square(const NodalAxis& axis) { return {axis, axis}; }
  double half_width() const { return x.half_width(); }
  double band() const { return x.band(); }
  // outer(w_x, w_y)
  Eigen::MatrixXd weight_outer() const;
};

// Signal in the closed space spanned by sinc atoms at the nodes and by
// functions supported on the time square:
//   f(x, y) = sum_pq A_pq k(x - s_p) k(y - t_q) + chi(x, y) G(x, y),
// with G known through its node values. Inner products are exact for the
// atom part (the kernel reproduces itself) and use the node quadrature for
// the supported part, so the time- and band-limiting operators act as exact
// orthogonal projections.
struct NodalSignal {
  SplitMatrix band;
  SplitMatrix limited;

  static NodalSignal zero(const NodalPlane& plane);

  NodalSignal& operator+=(const NodalSignal& o);
  NodalSignal& operator-=(const NodalSignal& o);
  NodalSignal& operator*=(double s);
};

NodalSignal operator+(NodalSignal a, const NodalSignal& b);
NodalSignal operator-(NodalSignal a, const NodalSignal& b);
NodalSignal operator*(double s, NodalSignal a);
NodalSignal left_multiply(const Quaternion& q, const NodalSignal& f);
NodalSignal right_multiply(const NodalSignal& f, const Quaternion& q);

// Values of f at the node grid of the time square.
SplitMatrix node_values(const NodalPlane& plane, const NodalSignal& f);

NodalSignal time_limit(const NodalPlane& plane, const NodalSignal& f);
NodalSignal band_limit(const NodalPlane& plane, const NodalSignal& f);

// Left inner products over the plane and over the time square.
Quaternion inner_product(const NodalPlane& plane, const NodalSignal& f, const NodalSignal& g);
Quaternion inner_product_on_square(const NodalPlane& plane, const NodalSignal& f,
                                   const NodalSignal& g);
double energy(const NodalPlane& plane, const NodalSignal& f);
double energy_on_square(const NodalPlane& plane, const NodalSignal& f);

// Sum over components of the Q-modulus energy inside [-W, W]^2 of exp(i r x) f,
// integrated from the component spectra with an n-point Gauss rule per axis.
double spectral_band_energy(const NodalPlane& plane, const NodalSignal& f, std::size_t quad_n,
                            double r = 0.0);

QSignal sample(const NodalPlane& plane, const NodalSignal& f, const GridAxis& ax_x,
               const GridAxis& ax_y);

// coeff * phi_m(x) phi_n(y) expressed through the atoms of the basis axis.
NodalSignal element_signal(const ProlateBasis1D& basis, std::size_t m, std::size_t n,
                           const Quaternion& coeff);
NodalSignal element_signal(const BasisSet2D& basis, std::size_t index);

// Signal with only a supported part, given by its node values.
NodalSignal limited_signal(const SplitMatrix& node_values);
// Band-limited signal from atom coefficients.
NodalSignal band_signal(const SplitMatrix& coefficients);

}  // namespace qpswf
