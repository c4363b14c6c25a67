#pragma once

#include <functional>

namespace chromatic {

// Concave building block h on [0,1] together with its derivatives on (0,1).
// The row-maximizer reduction requires h'(0+) = infinity, h'(1-) finite,
// h^(3) > 0, h^(4) < 0 and h^(6) < 0; validate_hypotheses checks these
// numerically before any machinery relies on them.
struct HFunction {
  std::function<double(double)> value;  // defined on [0,1]
  std::function<double(double)> d1, d2, d3, d4, d5, d6;  // on (0,1)

  // Canonical instance h(x) = -x log x with analytic derivatives.
  static HFunction neg_x_log_x();
};

struct HypothesisReport {
  bool d1_diverges_at_zero = false;
  bool d1_finite_at_one = false;
  bool d3_positive = false;
  bool d4_negative = false;
  bool d6_negative = false;

  bool ok() const {
    return d1_diverges_at_zero && d1_finite_at_one && d3_positive &&
           d4_negative && d6_negative;
  }
};

HypothesisReport validate_hypotheses(const HFunction& h, int grid_points = 200);

}  // namespace chromatic
