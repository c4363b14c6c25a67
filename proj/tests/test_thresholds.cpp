#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "chromatic/thresholds.hpp"

using namespace chromatic;

TEST_CASE("k_d against an independent scan") {
  // Oracle: smallest k with d < 2k log k, computed directly.
  auto oracle = [](double d) {
    for (int k = 2;; ++k) {
      if (d < 2.0 * k * std::log(static_cast<double>(k))) return k;
    }
  };
  for (double d : {0.5, 1.0, 2.0, 2.7, 3.0, 4.0, 5.5, 7.0, 10.0, 25.0, 100.0,
                   1000.0}) {
    CHECK(k_d(d) == oracle(d));
  }
}

TEST_CASE("k_d endpoint convention: d == 2k log k belongs to the next k") {
  // 4 log 2 = 2.772588722239781; the inequality is strict, so this d is
  // already outside k = 2.
  const double edge = 4.0 * std::log(2.0);
  CHECK(k_d(edge) == 3);
  CHECK(k_d(edge - 1e-9) == 2);
  CHECK(k_d(6.0 * std::log(3.0)) == 4);
}

TEST_CASE("k_d rejects non-positive and non-finite d") {
  CHECK_THROWS_AS(k_d(0.0), std::invalid_argument);
  CHECK_THROWS_AS(k_d(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(k_d(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(k_d(std::nan("")), std::invalid_argument);
}

TEST_CASE("u_k closed form") {
  CHECK(u_k(2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(u_k(3) ==
        doctest::Approx(std::log(3.0) / (std::log(3.0) - std::log(2.0)))
            .epsilon(1e-15));
  // u_k ~ k log k for large k.
  CHECK(u_k(1000) / (1000 * std::log(1000.0)) == doctest::Approx(1.0).epsilon(1e-2));
  CHECK_THROWS_AS(u_k(1), std::invalid_argument);
}

TEST_CASE("threshold profile fields") {
  const auto p = threshold_profile(3);
  CHECK(p.k == 3);
  CHECK(p.c_k == doctest::Approx(3.0 * std::log(3.0)).epsilon(1e-15));
  CHECK(p.band_lo == doctest::Approx(5.0 * std::log(3.0)).epsilon(1e-15));
  CHECK(p.band_hi == doctest::Approx(6.0 * std::log(3.0)).epsilon(1e-15));
  CHECK(p.band_lo < p.band_hi);
  CHECK_THROWS_AS(threshold_profile(0), std::invalid_argument);
}

TEST_CASE("predicted band is always {k_d, k_d + 1}") {
  for (double d : {0.5, 1.0, 3.0, 4.0, 5.0, 5.5, 6.0, 6.5, 9.0, 12.0}) {
    const Band b = predicted_band(d);
    CHECK(b.lo == k_d(d));
    CHECK(b.hi == b.lo + 1);
    if (b.exact) CHECK(b.exact_chi == b.lo + 1);
  }
}

TEST_CASE("exact-chi window [(2k-1) log k, 2k log k)") {
  // k = 3: [5 log 3, 6 log 3) = [5.4931, 6.5917).
  CHECK_FALSE(predicted_band(5.49).exact);
  CHECK(predicted_band(5.4932).exact);
  CHECK(predicted_band(6.0).exact);
  CHECK(predicted_band(6.0).exact_chi == 4);
  CHECK(predicted_band(6.59).exact);
  // At 6 log 3 the band moves to k = 4 and the window no longer applies.
  const Band above = predicted_band(6.5917);
  CHECK(above.lo == 4);
  CHECK_FALSE(above.exact);
  // Left endpoint is inclusive.
  CHECK(predicted_band(5.0 * std::log(3.0)).exact);
}
