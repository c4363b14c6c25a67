#pragma once

#include <utility>

namespace chromatic {

// Closed-form threshold quantities for the chromatic number of sparse
// random graphs, in expected-degree units for G(n, d/n) and edges-per-vertex
// units for G(n, m = cn).
//
// Endpoint convention: d exactly equal to 2k log k belongs to the next k
// (the defining inequality d < 2k log k is strict). All comparisons are
// carried out in extended precision with tolerance kEndpointTol so that a
// double within 1 ulp of an interval endpoint is classified consistently.

inline constexpr double kEndpointTol = 1e-12;

struct ThresholdProfile {
  int k;
  double u_k;      // first-moment bound, edges per vertex in G(n,m)
  double c_k;      // k log k
  double band_lo;  // (2k-1) log k, expected-degree units
  double band_hi;  // 2k log k, expected-degree units
};

struct Band {
  int lo;            // k_d
  int hi;            // k_d + 1
  bool exact;        // d in [(2k-1) log k, 2k log k) for some k
  int exact_chi;     // k + 1 when exact, else 0
};

// Smallest integer k with d < 2k log k. Requires d > 0 and finite.
int k_d(double d);

// log k / (log k - log(k-1)). Requires k >= 2.
double u_k(int k);

ThresholdProfile threshold_profile(int k);

// {k_d, k_d + 1}, flagging the exact prediction chi = k+1 when d lies in
// the interval [(2k-1) log k, 2k log k).
Band predicted_band(double d);

}  // namespace chromatic
