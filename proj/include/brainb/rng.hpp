#pragma once

#include <cstdint>
#include <random>

namespace brainb {

// Seeded generator with distribution code of our own, so that sequences are
// identical across standard libraries (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 1) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [lo, hi] by rejection sampling on the raw 64-bit output.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform in [0, 1) with 53 random bits.
  double uniform01();

  // Standard normal via Box-Muller (one value per call, no caching).
  double normal();

  bool operator==(const Rng&) const = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace brainb
