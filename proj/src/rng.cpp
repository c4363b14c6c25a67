#include "chromatic/rng.hpp"

#include <cmath>

namespace chromatic {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::split(std::uint64_t stream) const {
  return Rng(mix(state_ ^ mix(stream * kGolden + 0x2545f4914f6cdd1dULL)));
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::exponential() {
  return -std::log1p(-next_double());
}

}  // namespace chromatic
