#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "chromatic/rng.hpp"

using chromatic::Rng;

TEST_CASE("same seed replays the same sequence") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    if (a.next_u64() == b.next_u64()) ++equal;
  }
  CHECK(equal == 0);
}

TEST_CASE("split does not advance the parent") {
  Rng a(7);
  Rng b(7);
  (void)a.split(3);
  (void)a.split(4);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams are distinct and reproducible") {
  const Rng base(99);
  Rng s0 = base.split(0);
  Rng s1 = base.split(1);
  Rng s0again = base.split(0);
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = s0.next_u64();
    CHECK(x == s0again.next_u64());
    if (x == s1.next_u64()) ++equal;
  }
  CHECK(equal == 0);
}

TEST_CASE("below stays in range and covers small supports") {
  Rng r(5);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto x = r.below(7);
    CHECK(x < 7);
    seen.insert(x);
  }
  CHECK(seen.size() == 7);
  CHECK(r.below(1) == 0);
}

TEST_CASE("next_double lies in [0,1) and is roughly uniform") {
  Rng r(11);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = r.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    sum += x;
  }
  CHECK(std::abs(sum / 10000 - 0.5) < 0.02);
}

TEST_CASE("exponential variates are positive with mean near 1") {
  Rng r(13);
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double x = r.exponential();
    CHECK(x > 0.0);
    sum += x;
  }
  CHECK(std::abs(sum / 20000 - 1.0) < 0.05);
}
