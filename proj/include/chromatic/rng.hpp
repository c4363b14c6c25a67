#pragma once

#include <cstdint>

namespace chromatic {

// Deterministic 64-bit generator (splitmix64 core). Streams derived with
// split() are decorrelated for distinct stream ids, so parallel trials
// replay bit-identically from (seed, trial index) on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Derive an independent stream; does not advance this generator.
  Rng split(std::uint64_t stream) const;

  std::uint64_t next_u64();

  // Uniform in [0, n), unbiased via rejection. n must be positive.
  std::uint64_t below(std::uint64_t n);

  // Uniform in [0, 1) with 53 random bits.
  double next_double();

  // Rate-1 exponential variate.
  double exponential();

 private:
  std::uint64_t state_;
};

}  // namespace chromatic
