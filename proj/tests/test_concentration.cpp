#include <cmath>
#include <memory>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "qpswf/concentration.hpp"
#include "qpswf/error.hpp"
#include "qpswf/packets.hpp"
#include "test_support.hpp"

using namespace qpswf;

namespace {

const BasisSet2D& basis() {
  static const BasisSet2D set = [] {
    auto b = std::make_shared<const ProlateBasis1D>(eig_prolate_1d(1.0, 2.0, 32, 10));
    return build_qpswf_basis(b, 20, default_coefficient());
  }();
  return set;
}

SplitMatrix random_matrix(std::size_t n, CounterRng& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  SplitMatrix s(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) s.set(r, c, rng.normal_quaternion());
  }
  return s;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no qpswf::Error thrown";
  return ErrorKind::BadParameters;
}

constexpr double kTol = 1e-8;

}  // namespace

TEST(GridConcentration, BandLimitMatchesDirectSincConvolution) {
  CounterRng rng(4);
  const PacketSignal p = random_packet_signal(rng, 3, 7.0, 2.0, 1.4, 1.8);
  const auto ax = GridAxis::symmetric(16.0, 129);
  const QSignal f = p.sample(ax, ax);
  const double W = 1.5;
  const QSignal bl = band_limit(f, W);
  auto k = [&](double d) { return std::abs(d) < 1e-12 ? W / std::numbers::pi : std::sin(W * d) / (std::numbers::pi * d); };
  double worst = 0.0;
  for (std::size_t i = 40; i < 90; i += 7) {
    for (std::size_t j = 35; j < 95; j += 9) {
      Quaternion acc;
      for (std::size_t a = 0; a < ax.count; ++a) {
        const double kx = k(ax.coord(i) - ax.coord(a));
        for (std::size_t b = 0; b < ax.count; ++b) {
          acc += (f.quad_weight(a, b) * kx * k(ax.coord(j) - ax.coord(b))) * f(a, b);
        }
      }
      worst = std::max(worst, modulus(acc - bl(i, j)));
    }
  }
  EXPECT_LE(worst, 1e-9 * sup_modulus(f));
}

TEST(GridConcentration, TimeLimitAndErrors) {
  const auto ax = GridAxis::symmetric(2.0, 21);
  CounterRng rng(1);
  const QSignal f = QSignal::sample(ax, ax, [&](double, double) { return rng.normal_quaternion(); });
  const QSignal d = time_limit(f, 1.0);
  EXPECT_NEAR(energy(d, Region::centered_square(1.0)), energy(f, Region::centered_square(1.0)), 1e-12);
  EXPECT_EQ(d(0, 10), Quaternion());
  EXPECT_EQ(d(5, 15), f(5, 15));  // x = -1 lies on the edge
  EXPECT_EQ(kind_of([&] { time_limit(f, 3.0); }), ErrorKind::RegionOutOfGrid);
  EXPECT_EQ(kind_of([&] { band_limit(f, 40.0); }), ErrorKind::WindowTooSmall);
  EXPECT_EQ(kind_of([&] { energy_ratios(QSignal(ax, ax), 1.0, 1.0, 0.5); }), ErrorKind::ZeroSignal);
}

TEST(ConcentrationProperty, BandLimitedSignalsStayBelowSqrtLambda0) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  CounterRng rng(11);
  for (int t = 0; t < 25; ++t) {
    const NodalSignal f = band_signal(random_matrix(plane.x.size(), rng));
    const EnergyReport r = energy_ratios(set, f);
    EXPECT_LE(r.xi, std::sqrt(set.lambda0()) + kTol);
    EXPECT_NEAR(r.eta_q, 1.0, kTol);
    EXPECT_GE(r.angle_sum_deficit, -kTol);
  }
}

TEST(ConcentrationProperty, TimeLimitedSignalsStayBelowSqrtLambda0InBand) {
  // The dual statement: nothing supported on the square is band-limited.
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  CounterRng rng(12);
  for (int t = 0; t < 25; ++t) {
    const NodalSignal f = limited_signal(random_matrix(plane.x.size(), rng));
    const EnergyReport r = energy_ratios(set, f);
    EXPECT_NEAR(r.xi, 1.0, kTol);
    EXPECT_LE(r.eta_q, std::sqrt(set.lambda0()) + kTol);
  }
}

TEST(ConcentrationProperty, MixedSignalsAreAdmissible) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  CounterRng rng(13);
  for (int t = 0; t < 25; ++t) {
    NodalSignal f;
    f.band = random_matrix(plane.x.size(), rng);
    f.limited = random_matrix(plane.x.size(), rng);
    f.limited *= rng.uniform(0.0, 3.0);
    const EnergyReport r = energy_ratios(set, f);
    EXPECT_GE(r.angle_sum_deficit, -kTol) << t;
    EXPECT_FALSE(r.xi > 1.0 - 1e-6 && r.eta_q > 1.0 - 1e-6);
  }
}

TEST(Concentration, Psi0AttainsTheCorner) {
  const auto& set = basis();
  const EnergyReport r = energy_ratios(set, element_signal(set, 0));
  EXPECT_NEAR(r.xi * r.xi, set.lambda0(), kTol);
  EXPECT_NEAR(r.eta_q, 1.0, kTol);
  EXPECT_NEAR(r.angle_sum_deficit, 0.0, 1e-6);
  const LeastAngle la = least_angle_check(set);
  EXPECT_NEAR(la.achieved, la.theoretical, 1e-10);
  EXPECT_NEAR(la.theoretical, std::acos(std::sqrt(set.lambda0())), 1e-15);
}

TEST(Concentration, TimeLimitedExtremal) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  const NodalSignal g = build_time_limited_extremal(set);
  EXPECT_NEAR(energy(plane, g), 1.0, 1e-10);
  const EnergyReport r = energy_ratios(set, g);
  EXPECT_NEAR(r.xi, 1.0, kTol);
  EXPECT_NEAR(r.eta_q, std::sqrt(set.lambda0()), kTol);
}

TEST(Concentration, BoundarySignalsSitOnTheCurve) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  const double s = std::sqrt(set.lambda0());
  for (int k = 0; k <= 8; ++k) {
    const double xi = s + (1.0 - s) * k / 8.0;
    const NodalSignal g = build_boundary_signal(xi, set);
    EXPECT_NEAR(energy(plane, g), 1.0, 1e-10);
    const EnergyReport r = energy_ratios(set, g);
    EXPECT_NEAR(r.xi, xi, kTol);
    EXPECT_NEAR(r.eta_q, boundary_eta(xi, set.lambda0()), kTol);
    EXPECT_NEAR(r.angle_sum_deficit, 0.0, 1e-6) << xi;
  }
  EXPECT_EQ(kind_of([&] { build_boundary_signal(0.5 * s, set); }), ErrorKind::XiOutOfRange);
  EXPECT_EQ(kind_of([&] { build_boundary_signal(1.01, set); }), ErrorKind::XiOutOfRange);
}

TEST(ConcentrationProperty, BoundaryCurveIsSymmetric) {
  // arccos xi + arccos eta = arccos sqrt(l0) is symmetric in (xi, eta).
  for (double l0 : {0.1, 0.5, 0.93}) {
    const double s = std::sqrt(l0);
    for (int k = 0; k <= 10; ++k) {
      const double xi = s + (1 - s) * k / 10.0;
      const double eta = boundary_eta(xi, l0);
      EXPECT_NEAR(boundary_eta(eta, l0), xi, 1e-12);
      EXPECT_NEAR(std::acos(xi) + std::acos(eta), std::acos(s), 1e-12);
    }
    EXPECT_EQ(boundary_eta(0.5 * s, l0), 1.0);
  }
}

TEST(Concentration, ZeroXiSignalsForEveryParity) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  std::set<std::pair<bool, bool>> parities;
  for (std::size_t n = 0; n < 8; ++n) {
    const NodalSignal g = build_zero_xi_signal(n, set);
    EXPECT_NEAR(energy(plane, g), 1.0, 1e-10);
    const EnergyReport r = energy_ratios(set, g);
    EXPECT_LE(r.xi, 1e-10) << n;
    EXPECT_NEAR(r.eta_q * r.eta_q, 1.0 - set.items[n].lambda2d, 1e-8) << n;
    parities.insert({set.items[n].m % 2 == 1, set.items[n].n % 2 == 1});
  }
  EXPECT_GE(parities.size(), 3u);
  EXPECT_EQ(kind_of([&] { build_zero_xi_signal(set.size(), set); }), ErrorKind::BadIndex);
}

TEST(Concentration, EtaOneSignals) {
  const auto& set = basis();
  const double s = std::sqrt(set.lambda0());
  for (double frac : {0.9, 0.6, 0.3}) {
    const double xi = frac * s;
    const EnergyReport r = energy_ratios(set, build_eta_one_signal(xi, std::nullopt, set));
    EXPECT_NEAR(r.xi, xi, kTol);
    EXPECT_NEAR(r.eta_q, 1.0, kTol);
  }
  const double xi = 0.5 * s;
  std::size_t n = 1;
  while (!(set.items[n].lambda2d < xi * xi)) ++n;
  EXPECT_NEAR(energy_ratios(set, build_eta_one_signal(xi, n + 1, set)).xi, xi, kTol);
  EXPECT_EQ(kind_of([&] { build_eta_one_signal(xi, 0, set); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([&] { build_eta_one_signal(xi, 1, set); }), ErrorKind::BadIndex);
  EXPECT_EQ(kind_of([&] { build_eta_one_signal(1.1 * s, std::nullopt, set); }), ErrorKind::XiOutOfRange);
  EXPECT_EQ(kind_of([&] { build_eta_one_signal(1e-9, std::nullopt, set); }), ErrorKind::NoAdmissibleIndex);
}

TEST(ConcentrationProperty, ModulationKeepsXiButLeaksOutOfBand) {
  // |exp(i r x)| = 1 keeps the time fraction; the shifted spectrum leaves the band.
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  const NodalSignal psi = element_signal(set, 0);
  double prev = 1.0;
  for (double r : {0.5, 1.0, 2.0, 3.0}) {
    const double eta_sq = spectral_band_energy(plane, psi, 400, r);
    EXPECT_LT(eta_sq, prev) << r;
    const EnergyReport rep = make_report(std::sqrt(set.lambda0()), std::sqrt(eta_sq), set.lambda0());
    EXPECT_GE(rep.angle_sum_deficit, -1e-6);
    prev = eta_sq;
  }
}

TEST(Concentration, SweepCoversEverySource) {
  const auto& set = basis();
  std::vector<double> grid;
  for (int k = 0; k <= 20; ++k) grid.push_back(k / 20.0);
  const auto samples = sweep_admissible_region(set, grid);
  std::set<std::string> sources;
  for (const auto& s : samples) {
    sources.insert(s.source);
    EXPECT_GE(s.report.angle_sum_deficit, -1e-6) << s.source;
    if (s.source == "boundary") EXPECT_NEAR(s.report.angle_sum_deficit, 0.0, 1e-6);
  }
  EXPECT_EQ(sources, (std::set<std::string>{"curve", "psi0", "time_limited", "boundary", "eta_one", "zero_xi"}));
}
