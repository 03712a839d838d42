#include <gtest/gtest.h>

#include "qpswf/quaternion.hpp"
#include "qpswf/random.hpp"
#include "test_support.hpp"

using namespace qpswf;
using qpswf::oracle::quat_near;

TEST(Quaternion, UnitProductTable) {
  const Quaternion one(1.0), i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  EXPECT_EQ(i * i, -one);
  EXPECT_EQ(j * j, -one);
  EXPECT_EQ(k * k, -one);
  EXPECT_EQ(i * j * k, -one);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * j, -i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(i * k, -j);
}

TEST(Quaternion, ComponentAccessAndConjugate) {
  Quaternion q(1.0, -2.0, 3.0, -4.0);
  EXPECT_EQ(q[0], 1.0);
  EXPECT_EQ(q[3], -4.0);
  q[2] = 7.0;
  EXPECT_EQ(q.y, 7.0);
  EXPECT_EQ(conj(q), Quaternion(1.0, 2.0, -7.0, 4.0));
  EXPECT_DOUBLE_EQ(norm_sq(q), 1 + 4 + 49 + 16);
  EXPECT_TRUE(quat_near(q * inverse(q), Quaternion(1.0), 1e-15));
}

TEST(Quaternion, ExpHelpersAreUnitRotations) {
  EXPECT_TRUE(quat_near(exp_i(std::numbers::pi / 2), Quaternion::i(), 1e-15));
  EXPECT_TRUE(quat_near(exp_j(std::numbers::pi / 2), Quaternion::j(), 1e-15));
  EXPECT_TRUE(quat_near(exp_i(0.3) * exp_i(0.4), exp_i(0.7), 1e-15));
}

TEST(QuaternionProperty, AssociativeDistributiveAndMultiplicativeModulus) {
  CounterRng rng(2024);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion a = rng.normal_quaternion(), b = rng.normal_quaternion(),
                     c = rng.normal_quaternion();
    const double scale = modulus(a) * modulus(b) * modulus(c) + 1.0;
    ASSERT_TRUE(quat_near((a * b) * c, a * (b * c), 1e-14 * scale));
    ASSERT_TRUE(quat_near(a * (b + c), a * b + a * c, 1e-14 * scale));
    ASSERT_NEAR(modulus(a * b), modulus(a) * modulus(b), 1e-14 * (modulus(a) * modulus(b) + 1.0));
    ASSERT_TRUE(quat_near(conj(a * b), conj(b) * conj(a), 1e-14 * scale));
  }
}

TEST(QuaternionProperty, NonCommutativeInGeneral) {
  CounterRng rng(7);
  int differing = 0;
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = rng.normal_quaternion(), b = rng.normal_quaternion();
    if (modulus(a * b - b * a) > 1e-6) ++differing;
  }
  EXPECT_EQ(differing, 100);
}
