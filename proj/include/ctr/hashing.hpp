#pragma once

#include <cmath>
#include <cstdint>

namespace ctr {

// 64-bit avalanche mix (the split-mix finalizer). This exact bit recipe is
// part of the on-disk contract: sampling decisions must agree between any two
// implementations, so the function is fixed here and documented in the README.
//
//   z += 0x9E3779B97F4A7C15
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z =  z ^ (z >> 31)
inline uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Keyed stream of deterministic uniforms: same (salt, key) always yields the
// same value; distinct salts give decorrelated streams.
struct HashStream {
  uint64_t salt = 0;
};

// Uniform in [0,1) with 53 random bits: mix64(mix64(salt) ^ key) >> 11, scaled
// by 2^-53.
inline double hash_uniform(HashStream stream, uint64_t key) {
  uint64_t h = mix64(mix64(stream.salt) ^ key);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Counter-based RNG built on hash_uniform. State is two integers, so it
// serializes trivially into checkpoints and replays bit-identically.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : stream_{seed} {}
  CounterRng(uint64_t seed, uint64_t counter) : stream_{seed}, counter_(counter) {}

  double uniform() { return hash_uniform(stream_, counter_++); }

  double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // integer in [0, n)
  uint64_t uniform_index(uint64_t n) {
    return static_cast<uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

  // Box-Muller; consumes two uniforms per call.
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  uint64_t seed() const { return stream_.salt; }
  uint64_t counter() const { return counter_; }

 private:
  HashStream stream_;
  uint64_t counter_ = 0;
};

}  // namespace ctr
