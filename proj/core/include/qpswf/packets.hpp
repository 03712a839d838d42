#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qpswf/grid.hpp"
#include "qpswf/quaternion.hpp"
#include "qpswf/random.hpp"

namespace qpswf {

// One separable term q * g(x) h(y) with
//   g(x) = exp(-(x - x0)^2 / (2 sigma^2)) cos(wx x + phase_x)
// and h likewise in y. The spectrum is known in closed form, which makes
// these useful as test signals with an exact transform.
struct GaussianPacket {
  Quaternion amplitude{1.0, 0.0, 0.0, 0.0};
  double x0 = 0.0;
  double y0 = 0.0;
  double sigma = 1.0;
  double wx = 0.0;
  double wy = 0.0;
  double phase_x = 0.0;
  double phase_y = 0.0;

  Quaternion value(double x, double y) const;
  // int exp(-i u x) g(x) dx, as an ordinary complex number.
  static std::complex<double> factor_transform(double u, double centre, double sigma, double w,
                                               double phase);
  // Largest |frequency| carrying more than exp(-36) of the envelope peak.
  double band_edge() const;
};

struct PacketSignal {
  std::vector<GaussianPacket> packets;

  Quaternion operator()(double x, double y) const;
  QSignal sample(const GridAxis& ax_x, const GridAxis& ax_y) const;
  // Combined two-sided spectrum at (u, v).
  Quaternion spectrum(double u, double v) const;
  // Sum over components of |F(f_r)(u, v)|^2.
  double q_modulus_sq(double u, double v) const;
  double band_edge() const;
};

// `count` packets with Gaussian quaternion amplitudes, centres within
// `centre_radius` of the origin and sigma in [sigma_lo, sigma_hi]. Carriers are
// chosen so the band edge stays inside `band`.
PacketSignal random_packet_signal(CounterRng& rng, std::size_t count, double band,
                                  double centre_radius, double sigma_lo, double sigma_hi);

}  // namespace qpswf
