#include "chromatic/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace chromatic {

namespace {

// 2k log k in extended precision.
long double upper_edge(long double k) { return 2.0L * k * std::log(k); }

}  // namespace

int k_d(double d) {
  if (!std::isfinite(d) || d <= 0.0) {
    throw std::invalid_argument("k_d: d must be positive and finite");
  }
  const long double dl = d;
  int k = 2;  // 2*1*log 1 = 0 never exceeds a positive d
  while (!(dl < upper_edge(k) - static_cast<long double>(kEndpointTol))) {
    ++k;
  }
  return k;
}

double u_k(int k) {
  if (k < 2) {
    throw std::invalid_argument("u_k: requires k >= 2");
  }
  const long double lk = std::log(static_cast<long double>(k));
  const long double lk1 = std::log(static_cast<long double>(k - 1));
  return static_cast<double>(lk / (lk - lk1));
}

ThresholdProfile threshold_profile(int k) {
  if (k < 2) {
    throw std::invalid_argument("threshold_profile: requires k >= 2");
  }
  const long double lk = std::log(static_cast<long double>(k));
  ThresholdProfile p;
  p.k = k;
  p.u_k = u_k(k);
  p.c_k = static_cast<double>(k * lk);
  p.band_lo = static_cast<double>((2.0L * k - 1.0L) * lk);
  p.band_hi = static_cast<double>(2.0L * k * lk);
  return p;
}

Band predicted_band(double d) {
  const int k = k_d(d);
  Band b{k, k + 1, false, 0};
  const long double dl = d;
  // Exact-chi window for some integer j: [(2j-1) log j, 2j log j).
  // d < 2k log k and d >= 2(k-1)log(k-1), so only j = k can match.
  const long double lk = std::log(static_cast<long double>(k));
  const long double lo = (2.0L * k - 1.0L) * lk;
  if (dl >= lo - static_cast<long double>(kEndpointTol)) {
    b.exact = true;
    b.exact_chi = k + 1;
  }
  return b;
}

}  // namespace chromatic
