#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "qpswf/error.hpp"
#include "qpswf/grid.hpp"
#include "qpswf/qgrid_io.hpp"
#include "test_support.hpp"

using namespace qpswf;
using qpswf::oracle::quat_near;

namespace {

QSignal random_signal(const GridAxis& ax, const GridAxis& ay, std::uint64_t seed) {
  CounterRng rng(seed);
  return QSignal::sample(ax, ay, [&](double, double) { return rng.normal_quaternion(); });
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

TEST(GridAxis, SymmetricAxisSamplesOrigin) {
  const auto ax = GridAxis::symmetric(3.0, 61);
  EXPECT_DOUBLE_EQ(ax.step, 0.1);
  EXPECT_NEAR(ax.coord(30), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(ax.end(), 3.0);
  EXPECT_EQ(kind_of([] { GridAxis::symmetric(1.0, 10); }), ErrorKind::BadParameters);
  EXPECT_EQ(kind_of([] { GridAxis(0.0, 0.0, 5); }), ErrorKind::NonUniformGrid);
  EXPECT_EQ(kind_of([] { GridAxis(0.0, std::numeric_limits<double>::quiet_NaN(), 5); }),
            ErrorKind::NonUniformGrid);
}

TEST(GridAxis, WidenedKeepsNodes) {
  const auto ax = GridAxis::symmetric(1.0, 11);
  const auto w = ax.widened(3);
  EXPECT_EQ(w.count, 17u);
  EXPECT_NEAR(w.coord(3), ax.coord(0), 1e-15);
}

TEST(Grid, TrapezoidIntegralOfGaussian) {
  const auto ax = GridAxis::symmetric(8.0, 321);
  const QSignal f = QSignal::sample(ax, ax, [](double x, double y) {
    return Quaternion(std::exp(-(x * x + y * y) / 2), 0, 0, 0);
  });
  // int exp(-(x^2+y^2)) = pi
  EXPECT_NEAR(energy(f), std::numbers::pi, 1e-12);
}

TEST(Grid, InnerProductIsLeftConjugateForm) {
  const auto ax = GridAxis::symmetric(1.0, 3);
  QSignal f(ax, ax), g(ax, ax);
  f(1, 1) = Quaternion::i();
  g(1, 1) = Quaternion::j();
  // weight at the centre node is 1 * 1; i * conj(j) = i * (-j) = -k
  EXPECT_TRUE(quat_near(inner_product(f, g), -Quaternion::k(), 1e-15));
  EXPECT_TRUE(quat_near(inner_product(g, f), Quaternion::k(), 1e-15));
  EXPECT_DOUBLE_EQ(scalar_inner_product(f, g), 0.0);
  EXPECT_NEAR(angle(f, g), std::numbers::pi / 2, 1e-15);
}

TEST(GridProperty, InnerProductAxioms) {
  const auto ax = GridAxis::symmetric(2.0, 21);
  const auto ay = GridAxis::symmetric(1.5, 15);
  CounterRng rng(5);
  for (int t = 0; t < 20; ++t) {
    const QSignal f = random_signal(ax, ay, 100 + t), g = random_signal(ax, ay, 200 + t);
    const Quaternion q = rng.normal_quaternion();
    EXPECT_TRUE(quat_near(inner_product(f, g), conj(inner_product(g, f)), 1e-12));
    EXPECT_TRUE(quat_near(inner_product(left_multiply(q, f), g), q * inner_product(f, g), 1e-11));
    EXPECT_TRUE(quat_near(inner_product(f, left_multiply(q, g)), inner_product(f, g) * conj(q), 1e-11));
    // Right multiplication by a unit quaternion keeps f * conj(f) and the energy.
    const Quaternion u = q / modulus(q);
    EXPECT_NEAR(energy(right_multiply(f, u)), energy(f), 1e-11);
    EXPECT_NEAR(inner_product(f, f).w, energy(f), 1e-12);
    const double a = angle(f, g);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, std::numbers::pi);
  }
}

TEST(Grid, BoxRegionsTileTheGrid) {
  const auto ax = GridAxis::symmetric(2.0, 41);
  const QSignal f = random_signal(ax, ax, 9);
  const double parts = energy(f, Region::box(-2, 0, -2, 0)) + energy(f, Region::box(0, 2, -2, 0)) +
                       energy(f, Region::box(-2, 0, 0, 2)) + energy(f, Region::box(0, 2, 0, 2));
  EXPECT_NEAR(parts, energy(f), 1e-12 * energy(f));
  EXPECT_NEAR(energy(f, Region::centered_square(2.0)), energy(f), 1e-12 * energy(f));
  EXPECT_LT(energy(f, Region::centered_square(1.0)), energy(f));
}

TEST(Grid, ErrorKinds) {
  const auto ax = GridAxis::symmetric(1.0, 11);
  const auto other = GridAxis::symmetric(1.0, 13);
  const QSignal f(ax, ax), g(other, other);
  EXPECT_EQ(kind_of([&] { inner_product(f, g); }), ErrorKind::GridMismatch);
  EXPECT_EQ(kind_of([&] { energy(f, Region::centered_square(1.5)); }), ErrorKind::RegionOutOfGrid);
  EXPECT_EQ(kind_of([&] { angle(f, f); }), ErrorKind::ZeroSignal);
  EXPECT_EQ(kind_of([&] { QSignal(ax, ax, std::vector<Quaternion>(3)); }), ErrorKind::LengthMismatch);
}

TEST(Grid, SupModulus) {
  const auto ax = GridAxis::symmetric(1.0, 5);
  QSignal f(ax, ax);
  f(2, 3) = Quaternion(0, 3, 0, 4);
  EXPECT_DOUBLE_EQ(sup_modulus(f), 5.0);
}

TEST(QgridIo, RoundTripIsBitExact) {
  const GridAxis ax(-1.25, 0.1, 7), ay(3.0, 0.37, 5);
  CounterRng rng(77);
  QSignal f = QSignal::sample(ax, ay, [&](double, double) {
    return Quaternion(rng.normal() * 1e300, rng.normal() * 1e-300, rng.uniform(), -0.0);
  });
  f(0, 0) = Quaternion(std::numeric_limits<double>::denorm_min(), std::numeric_limits<double>::max(),
                       std::numeric_limits<double>::infinity(), std::numeric_limits<double>::quiet_NaN());
  std::stringstream ss;
  write_qgrid(ss, f);
  const QSignal g = read_qgrid(ss);
  ASSERT_EQ(g.nx(), f.nx());
  ASSERT_EQ(g.ny(), f.ny());
  EXPECT_EQ(g.ax_x().start, ax.start);
  EXPECT_EQ(g.ax_y().step, ay.step);
  EXPECT_EQ(std::memcmp(g.values().data(), f.values().data(), f.size() * sizeof(Quaternion)), 0);

  const auto path = std::filesystem::temp_directory_path() / "qpswf_roundtrip.qgrid";
  write_qgrid(path, f);
  const QSignal h = read_qgrid(path);
  EXPECT_EQ(std::memcmp(h.values().data(), f.values().data(), f.size() * sizeof(Quaternion)), 0);
  std::filesystem::remove(path);
}

TEST(QgridIo, MalformedInputs) {
  const auto ax = GridAxis::symmetric(1.0, 3);
  std::stringstream good;
  write_qgrid(good, QSignal(ax, ax));
  const std::string bytes = good.str();

  auto read_bytes = [](const std::string& s) {
    std::stringstream in(s);
    return read_qgrid(in);
  };
  EXPECT_EQ(kind_of([&] { read_bytes("XXXX" + bytes.substr(4)); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([&] { read_bytes(bytes.substr(0, bytes.size() - 1)); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([&] { read_bytes(bytes + "z"); }), ErrorKind::MalformedInput);
  std::string bad_version = bytes;
  bad_version[4] = 9;
  EXPECT_EQ(kind_of([&] { read_bytes(bad_version); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([&] { read_bytes(""); }), ErrorKind::MalformedInput);
  EXPECT_EQ(kind_of([&] { read_qgrid(std::filesystem::path("/nonexistent/file.qgrid")); }),
            ErrorKind::MalformedInput);
}
