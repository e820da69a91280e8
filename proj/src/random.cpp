#include "urkit/random.hpp"

#include <cmath>
#include <numbers>

namespace urkit {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t k) {
  return seed ^ ((k + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t Rng::next_u64() {
  // splitmix64 (Steele, Lea, Flood 2014); full 64-bit period.
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 shifted into (0, 1] so log stays finite.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_gaussian() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im);
}

}  // namespace urkit
