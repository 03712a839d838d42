#pragma once

#include <array>
#include <span>
#include <vector>

#include "qpswf/grid.hpp"
#include "qpswf/kernel.hpp"
#include "qpswf/split_matrix.hpp"

namespace qpswf {

// Two-sided quaternion Fourier transform with kernels exp(-i u x) on the left,
// exp(-j v y) on the right and the factor 1/(2 pi). Integrals in x and y use
// the trapezoid weights of the sample grid.
struct SpectrumQ {
  QSignal combined;
  std::array<QSignal, 4> components;

  const GridAxis& ax_u() const { return combined.ax_x(); }
  const GridAxis& ax_v() const { return combined.ax_y(); }
};

SpectrumQ forward_qft(const QSignal& f, const GridAxis& ax_u, const GridAxis& ax_v);
// Inverse transform of a combined spectrum (trapezoid weights in u and v).
QSignal inverse_qft(const QSignal& spectrum, const GridAxis& ax_x, const GridAxis& ax_y);

// Transforms of the four real components at arbitrary frequency nodes.
std::array<SplitMatrix, 4> component_spectra(const QSignal& f, std::span<const double> u,
                                             std::span<const double> v);
// F(f0) + i F(f1) + F(f2) j + i F(f3) j.
SplitMatrix assemble_spectrum(const std::array<SplitMatrix, 4>& parts);
// Inverse transform of a combined spectrum sampled at weighted nodes.
SplitMatrix inverse_at(const SplitMatrix& spectrum, std::span<const double> u,
                       std::span<const double> wu, std::span<const double> v,
                       std::span<const double> wv, std::span<const double> x,
                       std::span<const double> y);

// Sum over components of |F(f_r)|^2, stored in the spectrum's layout.
std::vector<double> q_modulus_field(const SpectrumQ& s);

// Frequency axis dual to a sample axis: same node count (made odd), symmetric,
// step 2 pi / (count * dx), reaching the Nyquist frequency.
GridAxis dual_axis(const GridAxis& ax);

// Relative gap between the sample-domain energy and the Q-modulus energy on
// the given frequency window. Throws WindowTooSmall when widening the window
// by a quarter on each side still adds more than 1e-10 of the energy.
double parseval_check(const QSignal& f, const GridAxis& ax_u, const GridAxis& ax_v);
double parseval_check(const QSignal& f);

// Sum over components of the Q-modulus energy inside [-W, W]^2, integrated with
// an n-point Gauss-Legendre rule per axis.
double band_energy(const QSignal& f, double W, std::size_t quad_n);

// Pointwise left multiplication by exp(i r x).
QSignal modulate(const QSignal& f, double r);

}  // namespace qpswf
