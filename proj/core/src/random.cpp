#include "qpswf/random.hpp"

#include <cmath>
#include <numbers>

namespace qpswf {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return mix(seed_ + counter_ * kGolden);
}

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() {
  // 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Quaternion CounterRng::normal_quaternion() {
  Quaternion q;
  q.w = normal();
  q.x = normal();
  q.y = normal();
  q.z = normal();
  return q;
}

CounterRng CounterRng::split(std::uint64_t index) const {
  return CounterRng(mix(seed_ ^ mix(index + kGolden)));
}

}  // namespace qpswf
