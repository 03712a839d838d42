#pragma once

#include <cmath>
#include <ostream>

namespace qpswf {

// Real quaternion w + x i + y j + z k with the Hamilton product
// (i^2 = j^2 = k^2 = ijk = -1).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double operator[](int c) const {
    return c == 0 ? w : c == 1 ? x : c == 2 ? y : z;
  }
  constexpr double& operator[](int c) {
    return c == 0 ? w : c == 1 ? x : c == 2 ? y : z;
  }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= 1.0 / s; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double modulus(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline Quaternion inverse(const Quaternion& q) { return conj(q) / norm_sq(q); }

constexpr double scalar_part(const Quaternion& q) { return q.w; }

// cos(t) + i sin(t) and cos(t) + j sin(t).
inline Quaternion exp_i(double t) { return {std::cos(t), std::sin(t), 0.0, 0.0}; }
inline Quaternion exp_j(double t) { return {std::cos(t), 0.0, std::sin(t), 0.0}; }

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

}  // namespace qpswf
