#pragma once

#include <cstdint>

#include "qpswf/quaternion.hpp"

namespace qpswf {

// Counter-based SplitMix64. Draw n of stream `seed` is mix(seed + (n + 1) * golden),
// so a stream can be replayed or split without carrying hidden state around.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal via Box-Muller; consumes two draws per call.
  double normal();
  Quaternion normal_quaternion();

  // Independent stream for sub-task `index`.
  CounterRng split(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace qpswf
