#pragma once

// Deterministic RNG used by every sampler. Substreams are derived from a
// base seed and a trial counter, so parallel trials never share generator
// state and reruns with the same seed are bit-identical.

#include <cstdint>

#include "urkit/numerics.hpp"

namespace urkit {

// Trial k of a run seeded with `seed` uses seed ^ (k+1)*0x9E3779B97F4A7C15.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k);

// splitmix64 core with Box-Muller normals; output is independent of the
// platform's std::normal_distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform01();          // in [0, 1)
  double uniform(double lo, double hi);
  double normal();             // standard normal
  Complex complex_gaussian();  // independent N(0,1) real and imaginary parts

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace urkit
