#include "chromatic/hfunction.hpp"

#include <cmath>

namespace chromatic {

HFunction HFunction::neg_x_log_x() {
  HFunction h;
  h.value = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
  h.d1 = [](double x) { return -std::log(x) - 1.0; };
  h.d2 = [](double x) { return -1.0 / x; };
  h.d3 = [](double x) { return 1.0 / (x * x); };
  h.d4 = [](double x) { return -2.0 / (x * x * x); };
  h.d5 = [](double x) { return 6.0 / (x * x * x * x); };
  h.d6 = [](double x) { return -24.0 / (x * x * x * x * x); };
  return h;
}

HypothesisReport validate_hypotheses(const HFunction& h, int grid_points) {
  HypothesisReport r;

  // h'(0+) = infinity: divergence along a geometric grid x = 2^{-j}.
  double prev = h.d1(std::pow(2.0, -8));
  bool diverges = true;
  for (int j = 12; j <= 40; j += 4) {
    const double cur = h.d1(std::pow(2.0, -j));
    if (!(cur > prev + 1.0)) {
      diverges = false;
      break;
    }
    prev = cur;
  }
  // The divergence is logarithmic (about log 2 per halving), so the final
  // sample is only required to clear every interior slope by a wide margin.
  r.d1_diverges_at_zero = diverges && prev > 20.0;

  r.d1_finite_at_one = std::isfinite(h.d1(1.0 - 1e-9));

  r.d3_positive = true;
  r.d4_negative = true;
  r.d6_negative = true;
  for (int i = 1; i <= grid_points; ++i) {
    const double x = static_cast<double>(i) / (grid_points + 1);
    if (!(h.d3(x) > 0.0)) r.d3_positive = false;
    if (!(h.d4(x) < 0.0)) r.d4_negative = false;
    if (!(h.d6(x) < 0.0)) r.d6_negative = false;
  }
  return r;
}

}  // namespace chromatic
