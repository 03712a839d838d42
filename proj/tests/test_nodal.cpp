#include <cmath>
#include <memory>
#include <numbers>

#include <gtest/gtest.h>

#include "qpswf/error.hpp"
#include "qpswf/nodal_signal.hpp"
#include "qpswf/prolate.hpp"
#include "test_support.hpp"

using namespace qpswf;
using qpswf::oracle::quat_near;

namespace {

struct Fixture {
  ProlateBasis1D b = eig_prolate_1d(1.0, 2.0, 24, 8);
  NodalPlane plane = NodalPlane::square(b.axis);
};

SplitMatrix random_matrix(Eigen::Index n, CounterRng& rng) {
  SplitMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) m.set(r, s, rng.normal_quaternion());
  }
  return m;
}

NodalSignal random_signal(const NodalPlane& plane, std::uint64_t seed) {
  CounterRng rng(seed);
  const auto n = static_cast<Eigen::Index>(plane.x.size());
  NodalSignal f;
  f.band = random_matrix(n, rng);
  f.limited = random_matrix(n, rng);
  return f;
}

}  // namespace

TEST(NodalProperty, TimeAndBandLimitingAreOrthogonalProjections) {
  Fixture fx;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const NodalSignal f = random_signal(fx.plane, seed), g = random_signal(fx.plane, seed + 100);
    const double ef = energy(fx.plane, f);
    const NodalSignal df = time_limit(fx.plane, f), bf = band_limit(fx.plane, f);
    EXPECT_LE(energy(fx.plane, time_limit(fx.plane, df) - df), 1e-20 * ef);
    EXPECT_LE(energy(fx.plane, band_limit(fx.plane, bf) - bf), 1e-18 * ef);
    // Self-adjoint in the left inner product.
    EXPECT_TRUE(quat_near(inner_product(fx.plane, df, g), inner_product(fx.plane, f, time_limit(fx.plane, g)),
                          1e-10 * ef));
    EXPECT_TRUE(quat_near(inner_product(fx.plane, bf, g), inner_product(fx.plane, f, band_limit(fx.plane, g)),
                          1e-10 * ef));
    // Pythagoras for both projections.
    EXPECT_NEAR(energy(fx.plane, df) + energy(fx.plane, f - df), ef, 1e-11 * ef);
    EXPECT_NEAR(energy(fx.plane, bf) + energy(fx.plane, f - bf), ef, 1e-11 * ef);
    EXPECT_NEAR(energy_on_square(fx.plane, f), energy(fx.plane, df), 1e-11 * ef);
  }
}

TEST(NodalProperty, LeftQuaternionScalarsCommuteWithProjections) {
  Fixture fx;
  const NodalSignal f = random_signal(fx.plane, 7);
  const Quaternion q(0.2, -1.0, 0.4, 0.7);
  const NodalSignal a = band_limit(fx.plane, left_multiply(q, f));
  const NodalSignal b = left_multiply(q, band_limit(fx.plane, f));
  EXPECT_LE(energy(fx.plane, a - b), 1e-20 * energy(fx.plane, a));
}

TEST(Nodal, AtomsReproduceTheKernel) {
  // <k(. - s_p) k(. - t_q), k(. - s_r) k(. - t_s)> = k(s_p - s_r) k(t_q - t_s)
  Fixture fx;
  const auto n = static_cast<Eigen::Index>(fx.plane.x.size());
  SplitMatrix a(n, n), b(n, n);
  a.set(2, 5, Quaternion(1.0));
  b.set(7, 1, Quaternion::j());
  const Quaternion ip = inner_product(fx.plane, band_signal(a), band_signal(b));
  const auto& s = fx.plane.x.nodes();
  auto k = [](double d) { return std::sin(2.0 * d) / (std::numbers::pi * d); };
  const double expect = k(s[2] - s[7]) * k(s[5] - s[1]);
  EXPECT_TRUE(quat_near(ip, Quaternion(0, 0, -expect, 0), 1e-14));
}

TEST(Nodal, ElementSignalIsEigenfunctionOfTimeBandLimiting) {
  Fixture fx;
  for (std::size_t m = 0; m < 4; ++m) {
    const NodalSignal psi = element_signal(fx.b, m, 1, default_coefficient());
    const NodalSignal bdpsi = band_limit(fx.plane, time_limit(fx.plane, psi));
    const double lam = fx.b.eigvals[m] * fx.b.eigvals[1];
    EXPECT_NEAR(energy(fx.plane, psi), 1.0, 1e-11);
    EXPECT_LE(std::sqrt(energy(fx.plane, bdpsi - lam * psi)), 1e-11) << m;
    EXPECT_NEAR(energy_on_square(fx.plane, psi), lam, 1e-12);
  }
}

TEST(NodalProperty, SpectralBandEnergyMatchesExactProjection) {
  Fixture fx;
  for (std::uint64_t seed = 20; seed < 24; ++seed) {
    const NodalSignal f = random_signal(fx.plane, seed);
    const double exact = energy(fx.plane, band_limit(fx.plane, f));
    EXPECT_NEAR(spectral_band_energy(fx.plane, f, 96), exact, 1e-10 * exact) << seed;
  }
}

TEST(Nodal, ModulatedAtomKeepsTheOverlapFraction) {
  // exp(i r x) A k(x - s) k(y - t): the Q-modulus cross terms cancel, leaving
  // the overlap (2W - |r|) / 2W of the shifted band with [-W, W].
  Fixture fx;
  const auto n = static_cast<Eigen::Index>(fx.plane.x.size());
  SplitMatrix a(n, n);
  const Quaternion amp(0.3, -0.8, 0.5, 0.2);
  a.set(4, 9, amp);
  const NodalSignal f = band_signal(a);
  const double W = 2.0;
  const double e = norm_sq(amp) * std::pow(W / std::numbers::pi, 2);
  EXPECT_NEAR(energy(fx.plane, f), e, 1e-14);
  const std::size_t quad = 400;
  for (double r : {0.0, 0.5, 1.3, 3.0, 4.5}) {
    const double expect = e * std::max(0.0, 2 * W - std::abs(r)) / (2 * W);
    // The shifted indicator jumps inside the rule, so Gauss converges like W / n.
    const double tol = r == 0.0 ? 1e-12 : 4.0 * W / quad * e;
    EXPECT_NEAR(spectral_band_energy(fx.plane, f, quad, r), expect, tol) << "r=" << r;
  }
}

TEST(Nodal, SampleMatchesSeparableFormula) {
  Fixture fx;
  const NodalSignal psi = element_signal(fx.b, 1, 2, default_coefficient());
  const auto ax = GridAxis::symmetric(2.0, 9);
  const QSignal s = sample(fx.plane, psi, ax, ax);
  for (std::size_t i = 0; i < ax.count; ++i) {
    for (std::size_t j = 0; j < ax.count; ++j) {
      const double v = extend_eigenfunction(fx.b, 1, ax.coord(i)) * extend_eigenfunction(fx.b, 2, ax.coord(j));
      EXPECT_TRUE(quat_near(s(i, j), default_coefficient() * v, 1e-11));
    }
  }
}
