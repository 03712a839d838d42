#include <cmath>
#include <memory>
#include <numbers>

#include <gtest/gtest.h>

#include "qpswf/concentration.hpp"
#include "qpswf/error.hpp"
#include "qpswf/extrapolate.hpp"
#include "qpswf/packets.hpp"
#include "test_support.hpp"

using namespace qpswf;

namespace {

const BasisSet2D& basis() {
  static const BasisSet2D set = [] {
    auto b = std::make_shared<const ProlateBasis1D>(eig_prolate_1d(1.0, 2.0, 32, 10));
    return build_qpswf_basis(b, 10, default_coefficient());
  }();
  return set;
}

std::vector<double> lambdas(const BasisSet2D& set) {
  std::vector<double> l;
  for (const auto& it : set.items) l.push_back(it.lambda2d);
  return l;
}

NodalSignal combination(std::span<const double> a, const BasisSet2D& set) {
  NodalSignal f = NodalSignal::zero(basis_plane(set));
  for (std::size_t j = 0; j < a.size(); ++j) f += a[j] * element_signal(set, j);
  return f;
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

}  // namespace

TEST(ExtrapolateProperty, IterateMatchesClosedFormAndErrorEnergy) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  const auto lam = lambdas(set);
  CounterRng rng(3);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<double> a(set.size());
    for (auto& x : a) x = rng.normal();
    const NodalSignal truth = combination(a, set);
    const SplitMatrix g = node_values(plane, truth);
    NodalSignal f = NodalSignal::zero(plane);
    for (std::size_t n = 1; n <= 50; ++n) {
      f = pg_step(plane, g, f);
      const NodalSignal closed = closed_form_iterate(a, lam, n, set);
      ASSERT_LE(std::sqrt(energy(plane, f - closed)), 1e-8) << "n=" << n;
      ASSERT_NEAR(energy(plane, truth - f), error_energy(a, lam, n), 1e-8) << "n=" << n;
    }
  }
}

TEST(ExtrapolateProperty, SingleModeDecaysGeometrically) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  for (std::size_t m : {0u, 2u, 5u}) {
    ExtrapolationProblem p;
    p.plane = plane;
    p.truth = element_signal(set, m);
    p.observed = node_values(plane, *p.truth);
    const auto trace = pg_run(p, 20, 0.0);
    const double ratio = std::pow(1.0 - set.items[m].lambda2d, 2);
    ASSERT_EQ(trace.records.size(), 20u);
    EXPECT_NEAR(trace.records[0].error_energy / trace.initial_error_energy, ratio, 1e-10);
    for (std::size_t n = 1; n < 8; ++n) {
      EXPECT_NEAR(trace.records[n].error_energy / trace.records[n - 1].error_energy, ratio, 1e-10)
          << "m=" << m << " n=" << n;
    }
  }
}

TEST(ExtrapolateProperty, PointwiseErrorStaysUnderBound) {
  const auto& set = basis();
  ExtrapolationProblem p;
  p.plane = basis_plane(set);
  std::vector<double> a{0.7, -0.2, 0.5, 0.1, -0.9, 0.3, 0.0, 0.4, -0.6, 0.8};
  p.truth = combination(a, set);
  p.observed = node_values(p.plane, *p.truth);
  p.probe_x = p.probe_y = GridAxis::symmetric(4.0, 33);
  const auto trace = pg_run(p, 40, 0.0);
  for (const auto& r : trace.records) {
    EXPECT_LE(r.sup_error, r.bound) << r.n;
    EXPECT_DOUBLE_EQ(r.bound, 2.0 / std::numbers::pi * std::sqrt(r.error_energy));
    EXPECT_DOUBLE_EQ(r.sqrt_w_bound, std::sqrt(2.0 * r.error_energy) / std::numbers::pi);
  }
  for (std::size_t n = 1; n < trace.records.size(); ++n) {
    EXPECT_LE(trace.records[n].error_energy, trace.records[n - 1].error_energy);
  }
}

TEST(Extrapolate, ZeroObservationConvergesImmediately) {
  const auto& set = basis();
  ExtrapolationProblem p;
  p.plane = basis_plane(set);
  p.observed = SplitMatrix(static_cast<Eigen::Index>(p.plane.x.size()), static_cast<Eigen::Index>(p.plane.y.size()));
  const auto trace = pg_run(p, 10);
  EXPECT_TRUE(trace.converged);
  EXPECT_EQ(trace.records.size(), 1u);
  EXPECT_TRUE(std::isnan(trace.records[0].error_energy));
  EXPECT_EQ(energy(p.plane, trace.final_iterate), 0.0);
  EXPECT_EQ(kind_of([&] { pg_run(p, 0); }), ErrorKind::BadParameters);
}

TEST(Extrapolate, ClosedFormAndBoundHelpers) {
  const auto& set = basis();
  const auto all = lambdas(set);
  const std::span<const double> lam = std::span<const double>(all).first(3);
  const std::vector<double> a{1.0, 0.0, 2.0};
  EXPECT_NEAR(error_energy(a, lam, 3), std::pow(1 - lam[0], 6) + 4 * std::pow(1 - lam[2], 6), 1e-15);
  EXPECT_NEAR(error_energy(a, lam, 0), 5.0, 1e-15);
  EXPECT_EQ(energy(basis_plane(set), closed_form_iterate(a, lam, 0, set)), 0.0);
  EXPECT_DOUBLE_EQ(pointwise_bound(4.0, 3.0), 6.0 / std::numbers::pi);
  EXPECT_DOUBLE_EQ(sqrt_w_pointwise_bound(4.0, 3.0), std::sqrt(12.0) / std::numbers::pi);
  const std::vector<double> short_l{0.5};
  EXPECT_EQ(kind_of([&] { closed_form_iterate(a, short_l, 2, set); }), ErrorKind::LengthMismatch);
}

TEST(Extrapolate, GridStepKeepsBandLimitedSignalFixed) {
  CounterRng rng(8);
  const PacketSignal p = random_packet_signal(rng, 3, 2.5, 2.0, 3.5, 4.5);
  ASSERT_LE(p.band_edge(), 2.5);
  const auto ax = GridAxis::symmetric(24.0, 193);
  const QSignal f = p.sample(ax, ax);
  const Region d = Region::centered_square(3.0);
  const QSignal g = time_limit(f, 3.0);
  const QSignal next = pg_step(g, f, d, 3.0);
  EXPECT_LE(norm(next - f) / norm(f), 1e-9);
  // From zero the first step is B_W of the observation alone.
  const QSignal first = pg_step(g, QSignal(ax, ax), d, 3.0);
  EXPECT_LE(norm(first - band_limit(g, 3.0)) / norm(first), 1e-12);
}

TEST(Extrapolate, ShapeErrors) {
  const auto& set = basis();
  const NodalPlane plane = basis_plane(set);
  const SplitMatrix wrong(3, 3);
  EXPECT_EQ(kind_of([&] { pg_step(plane, wrong, NodalSignal::zero(plane)); }), ErrorKind::GridMismatch);
  const auto a1 = GridAxis::symmetric(4.0, 41), a2 = GridAxis::symmetric(4.0, 43);
  EXPECT_EQ(kind_of([&] { pg_step(QSignal(a1, a1), QSignal(a2, a2), Region::centered_square(1.0), 1.0); }),
            ErrorKind::GridMismatch);
}

TEST(Extrapolate, ProblemFromGrid) {
  const auto ax = GridAxis::symmetric(4.0, 41);
  QSignal obs(ax, ax);
  obs(20, 20) = Quaternion(1.0);
  const auto p = problem_from_grid(obs, 1.0, 2.0);
  EXPECT_EQ(p.plane.x.size(), 11u);
  EXPECT_EQ(p.observed.rows(), 11);
  EXPECT_EQ(p.observed.at(5, 5), Quaternion(1.0));
  obs(0, 0) = Quaternion(0, 1, 0, 0);
  EXPECT_EQ(kind_of([&] { problem_from_grid(obs, 1.0, 2.0); }), ErrorKind::BadParameters);
}
