#include "qpswf/packets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qpswf/error.hpp"

namespace qpswf {

namespace {

constexpr double kTailWidth = 8.5;  // exp(-8.5^2 / 2) ~ 2e-16

double envelope(double x, double c, double sigma, double w, double phase) {
  const double d = (x - c) / sigma;
  return std::exp(-0.5 * d * d) * std::cos(w * x + phase);
}

}  // namespace

Quaternion GaussianPacket::value(double x, double y) const {
  return amplitude * (envelope(x, x0, sigma, wx, phase_x) * envelope(y, y0, sigma, wy, phase_y));
}

std::complex<double> GaussianPacket::factor_transform(double u, double centre, double sigma,
                                                      double w, double phase) {
  const double amp = sigma * std::sqrt(2.0 * std::numbers::pi) / 2.0;
  const double dm = u - w;
  const double dp = u + w;
  const std::complex<double> a =
      std::polar(std::exp(-0.5 * sigma * sigma * dm * dm), phase - dm * centre);
  const std::complex<double> b =
      std::polar(std::exp(-0.5 * sigma * sigma * dp * dp), -phase - dp * centre);
  return amp * (a + b);
}

double GaussianPacket::band_edge() const {
  return std::max(std::abs(wx), std::abs(wy)) + kTailWidth / sigma;
}

Quaternion PacketSignal::operator()(double x, double y) const {
  Quaternion s{};
  for (const auto& p : packets) s += p.value(x, y);
  return s;
}

QSignal PacketSignal::sample(const GridAxis& ax_x, const GridAxis& ax_y) const {
  return QSignal::sample(ax_x, ax_y, [this](double x, double y) { return (*this)(x, y); });
}

namespace {

// Spectra of the four real components at (u, v).
std::array<Quaternion, 4> component_values(const PacketSignal& s, double u, double v) {
  std::array<Quaternion, 4> out{};
  for (const auto& p : s.packets) {
    const auto g = GaussianPacket::factor_transform(u, p.x0, p.sigma, p.wx, p.phase_x);
    const auto h = GaussianPacket::factor_transform(v, p.y0, p.sigma, p.wy, p.phase_y);
    // (a + b i)(c + d j)
    const Quaternion gh{g.real() * h.real(), g.imag() * h.real(), g.real() * h.imag(),
                        g.imag() * h.imag()};
    for (int r = 0; r < 4; ++r) out[r] += p.amplitude[r] * gh;
  }
  for (auto& q : out) q *= 1.0 / (2.0 * std::numbers::pi);
  return out;
}

}  // namespace

Quaternion PacketSignal::spectrum(double u, double v) const {
  const auto c = component_values(*this, u, v);
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  return c[0] + i * c[1] + c[2] * j + i * c[3] * j;
}

double PacketSignal::q_modulus_sq(double u, double v) const {
  const auto c = component_values(*this, u, v);
  double s = 0.0;
  for (const auto& q : c) s += norm_sq(q);
  return s;
}

double PacketSignal::band_edge() const {
  double e = 0.0;
  for (const auto& p : packets) e = std::max(e, p.band_edge());
  return e;
}

PacketSignal random_packet_signal(CounterRng& rng, std::size_t count, double band,
                                  double centre_radius, double sigma_lo, double sigma_hi) {
  if (!(sigma_lo > 0.0 && sigma_hi >= sigma_lo && band > 0.0 && centre_radius >= 0.0)) {
    throw Error(ErrorKind::BadParameters, "bad packet parameters");
  }
  if (kTailWidth / sigma_lo > band) {
    throw Error(ErrorKind::BadParameters, "packets this narrow are not band-limited to W");
  }
  PacketSignal s;
  for (std::size_t n = 0; n < count; ++n) {
    GaussianPacket p;
    p.amplitude = rng.normal_quaternion();
    p.sigma = rng.uniform(sigma_lo, sigma_hi);
    const double carrier = band - kTailWidth / p.sigma;
    p.wx = rng.uniform(-carrier, carrier);
    p.wy = rng.uniform(-carrier, carrier);
    p.phase_x = rng.uniform(0.0, 2.0 * std::numbers::pi);
    p.phase_y = rng.uniform(0.0, 2.0 * std::numbers::pi);
    p.x0 = rng.uniform(-centre_radius, centre_radius);
    p.y0 = rng.uniform(-centre_radius, centre_radius);
    s.packets.push_back(p);
  }
  return s;
}

}  // namespace qpswf
