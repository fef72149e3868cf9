#pragma once

#include <cstdint>

namespace linkpred {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used both as a stream
// generator and to mix seeds; the output is reproducible on any platform,
// unlike the distributions in <random>.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Derive the seed for run index `run` from an experiment master seed.
// Documented contract: run_seed(s, i) = splitmix64(s ^ splitmix64(i + 1)).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 1));
}

// Small deterministic RNG (splitmix64 stream). We avoid std::uniform_*
// distributions on purpose: their outputs differ between standard library
// implementations, and split/sample reproducibility is part of the contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  // Uniform integer in [0, n), n > 0. Rejection-free multiply-shift would be
  // biased for huge n; the rejection loop below is exact.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace linkpred
