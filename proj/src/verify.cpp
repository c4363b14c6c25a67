#include "chromatic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chromatic/thresholds.hpp"

namespace chromatic {

namespace {

double c_threshold(int k) {  // c_{k-1}
  return (k - 1.0) * std::log(k - 1.0);
}

}  // namespace

Theorem7Report verify_theorem7(int k, double c, int trials,
                               std::uint64_t seed, int polish_starts) {
  if (k < 2) throw std::invalid_argument("verify_theorem7: requires k >= 2");
  Theorem7Report rep;
  rep.k = k;
  rep.c = c;
  rep.trials = trials;
  rep.g_uniform = g_c_uniform(k, c);
  rep.max_found = -std::numeric_limits<double>::infinity();

  Rng rng = Rng(seed).split(0x7468376d);
  Eigen::MatrixXd best_sample;
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXd A = sample_stochastic(k, rng);
    const double v = g_c(A, c);
    if (v > rep.max_found) {
      rep.max_found = v;
      rep.argmax = A;
      best_sample = A;
    }
  }
  for (int s = 0; s < polish_starts; ++s) {
    Eigen::MatrixXd start =
        (s == 0 && best_sample.size() > 0) ? best_sample
                                           : sample_stochastic(k, rng);
    const Eigen::MatrixXd polished = ascend_g_c(std::move(start), c);
    const double v = g_c(polished, c);
    if (v > rep.max_found) {
      rep.max_found = v;
      rep.argmax = polished;
    }
  }
  rep.margin = rep.g_uniform - rep.max_found;
  rep.pass = rep.margin >= -kInequalityTol;
  return rep;
}

ExpoGapReport verify_expo_gap(int k, double c, const Eigen::MatrixXd& A) {
  const double ck1 = c_threshold(k);
  if (!(c < ck1)) {
    throw std::invalid_argument("verify_expo_gap: requires c < c_{k-1}");
  }
  const double beta = (ck1 - c) / (2.0 * (k - 1.0) * (k - 1.0));
  ExpoGapReport r;
  r.lhs = g_c(A, c);
  r.rhs = g_c_uniform(k, c) - beta * (A.squaredNorm() - 1.0);
  r.slack = r.rhs - r.lhs;
  r.pass = r.slack >= -kInequalityTol;
  return r;
}

ExpoGapSweep verify_expo_gap_random(int k, double c, int draws,
                                    std::uint64_t seed) {
  ExpoGapSweep sweep;
  sweep.worst_slack = std::numeric_limits<double>::infinity();
  Rng rng = Rng(seed).split(0x6578706f);
  for (int t = 0; t < draws; ++t) {
    const Eigen::MatrixXd A = sample_birkhoff(k, rng);
    const ExpoGapReport r = verify_expo_gap(k, c, A);
    if (!r.pass) ++sweep.violations;
    if (r.slack < sweep.worst_slack) {
      sweep.worst_slack = r.slack;
      sweep.worst = r;
    }
  }
  return sweep;
}

CounterexampleReport counterexample_check(int k) {
  if (k < 3) {
    throw std::invalid_argument(
        "counterexample_check: requires k >= 3 (the matrix degenerates at "
        "k = 2)");
  }
  CounterexampleReport rep;
  rep.k = k;
  rep.c = u_k(k) - 1.0;
  const Eigen::MatrixXd A =
      uniform_matrix(k) / (k - 1.0) +
      Eigen::MatrixXd::Identity(k, k) * ((k - 2.0) / (k - 1.0));
  rep.g_uniform = g_c_uniform(k, rep.c);
  rep.g_matrix = g_c(A, rep.c);
  rep.gap = rep.g_matrix - rep.g_uniform;
  // g_c is affine in c, so the transition point solves a linear equation.
  const double h_a = entropy(A), e_a = energy(A);
  const double h_j = std::log(static_cast<double>(k));
  const double e_j = 2.0 * std::log(1.0 - 1.0 / k);
  rep.transition_c = (h_j - h_a) / (e_a - e_j);
  rep.violation = rep.gap > 0.0;
  return rep;
}

NeverUseReport verify_neveruse(int k) {
  if (k < 3) throw std::invalid_argument("verify_neveruse: requires k >= 3");
  NeverUseReport r;
  r.k = k;
  const double t1 = k / 2.0;
  const double t2 = (k - 1.0) / (k - 2.0) * std::log(k - 1.0);
  const double t3 = k / (k - 1.0) * std::log(static_cast<double>(k));
  r.min_term = std::min({t1, t2, t3});
  r.scaled = r.min_term * (k - 1.0) * (k - 1.0) / k;
  r.closed_form =
      std::pow(k - 1.0, 3) / (k * (k - 2.0)) * std::log(k - 1.0);
  r.c_threshold = c_threshold(k);
  r.identity_holds = std::abs(r.scaled - r.closed_form) <=
                     1e-12 * std::max(1.0, std::abs(r.closed_form));
  r.exceeds_threshold = r.scaled > r.c_threshold;
  r.pass = r.identity_holds && r.exceeds_threshold;
  return r;
}

DerivativeSignReport verify_f_third_derivative(int k, const HFunction& h,
                                               int grid) {
  if (!validate_hypotheses(h).ok()) {
    throw std::invalid_argument(
        "verify_f_third_derivative: h fails the hypothesis flags");
  }
  DerivativeSignReport rep;
  rep.k = k;
  rep.grid = grid;
  rep.all_negative = true;
  rep.worst_upper = -std::numeric_limits<double>::infinity();

  const double lo = 1.0 / k;
  const double span = 1.0 - lo;
  auto f = [&](double r) { return f_of_r(r, k, h); };
  auto third = [&](double r, double s) {
    return (-f(r - 2 * s) + 2 * f(r - s) - 2 * f(r + s) + f(r + 2 * s)) /
           (2 * s * s * s);
  };

  for (int i = 1; i <= grid; ++i) {
    const double r = lo + span * i / (grid + 1);
    const double dist = std::min(r - lo, 1.0 - r);
    const double s = std::min(1e-3 * span, 0.4 * dist / 2.0);
    const double coarse = third(r, s);
    const double fine = third(r, s / 2);
    const double richardson = (4.0 * fine - coarse) / 3.0;
    // Extrapolation defect plus a round-off allowance for the stencil.
    const double half = s / 2;
    const double roundoff =
        64.0 * std::numeric_limits<double>::epsilon() *
        std::max(1.0, std::abs(f(r))) / (half * half * half);
    const double bar = std::abs(fine - coarse) + roundoff;
    const double upper = richardson + bar;
    if (upper > rep.worst_upper) {
      rep.worst_upper = upper;
      rep.worst_r = r;
    }
    if (!(upper < 0.0)) rep.all_negative = false;
  }
  return rep;
}

double psi_of(double x, int k, const HFunction& h) {
  return f_of_r(1.0 / k + (k - 1.0) * x / k, k, h);
}

PsiHypotheses validate_psi(int k, const HFunction& h) {
  PsiHypotheses out;
  // psi'(x) = f'(1/k + (k-1)x/k) (k-1)/k; divergence to -infinity at 1-.
  // The divergence is logarithmic: each decade of 1-x costs roughly
  // (k-1)/(2k) log 10, so require a strict per-decade drop plus a final
  // value well below any interior slope.
  double prev = f_prime(1.0 / k + (k - 1.0) * (1.0 - 1e-4) / k, k, h);
  out.d1_diverges_at_one = true;
  const double decade_drop = 0.25 * (k - 1.0) / k * std::log(10.0);
  for (int j = 6; j <= 12; ++j) {
    const double x = 1.0 - std::pow(10.0, -j);
    const double cur = f_prime(1.0 / k + (k - 1.0) * x / k, k, h);
    if (!(cur < prev - decade_drop)) {
      out.d1_diverges_at_one = false;
      break;
    }
    prev = cur;
  }
  if (prev > -5.0) out.d1_diverges_at_one = false;

  out.d3_negative = true;
  for (int i = 1; i <= 100; ++i) {
    const double x = static_cast<double>(i) / 102.0;
    const double s = 1e-4;
    const double d3 =
        (-psi_of(x - 2 * s, k, h) + 2 * psi_of(x - s, k, h) -
         2 * psi_of(x + s, k, h) + psi_of(x + 2 * s, k, h)) /
        (2 * s * s * s);
    if (!(d3 < 0.0)) {
      out.d3_negative = false;
      break;
    }
  }
  return out;
}

namespace {

// max over real m in [0, k - gamma] of m psi(0) + (k-m) psi(gamma/(k-m)).
double lemma11_bound(int k, double gamma, const HFunction& h) {
  const double psi0 = psi_of(0.0, k, h);
  auto obj = [&](double m) {
    const double km = k - m;
    if (km < 1e-12) return m * psi0;
    return m * psi0 + km * psi_of(std::min(gamma / km, 1.0), k, h);
  };
  const double m_hi = k - gamma;
  double best = obj(0.0);
  double best_m = 0.0;
  const int grid = 2000;
  for (int i = 1; i <= grid; ++i) {
    const double m = m_hi * i / grid;
    const double v = obj(m);
    if (v > best) {
      best = v;
      best_m = m;
    }
  }
  double a = std::max(0.0, best_m - m_hi / grid);
  double b = std::min(m_hi, best_m + m_hi / grid);
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    const double x1 = a + (b - a) / 3, x2 = b - (b - a) / 3;
    if (obj(x1) < obj(x2)) {
      a = x1;
    } else {
      b = x2;
    }
  }
  return std::max(best, obj(0.5 * (a + b)));
}

}  // namespace

Lemma11Report verify_lemma11(int k, double gamma, int trials,
                             std::uint64_t seed) {
  if (!(gamma > 0.0 && gamma <= k)) {
    throw std::invalid_argument("verify_lemma11: gamma must lie in (0, k]");
  }
  const HFunction h = HFunction::neg_x_log_x();
  if (!validate_psi(k, h).ok()) {
    throw std::invalid_argument("verify_lemma11: psi hypothesis failure");
  }
  Lemma11Report rep;
  rep.k = k;
  rep.gamma = gamma;
  rep.trials = trials;
  const double bound = lemma11_bound(k, gamma, h);
  rep.worst_slack = std::numeric_limits<double>::infinity();

  Rng rng = Rng(seed).split(0x6c6d3131);
  auto sample = [&](Eigen::VectorXd& s) {
    // Dirichlet scaled to total gamma, rejecting coordinates above 1. For
    // gamma near k, sample the deficit from the all-ones vector instead.
    const bool deficit = gamma > k / 2.0;
    const double mass = deficit ? k - gamma : gamma;
    for (int attempt = 0; attempt < 100000; ++attempt) {
      double sum = 0.0;
      for (int i = 0; i < k; ++i) {
        s[i] = rng.exponential();
        sum += s[i];
      }
      s *= mass / sum;
      if (deficit) s = Eigen::VectorXd::Ones(k) - s;
      if (s.minCoeff() >= 0.0 && s.maxCoeff() <= 1.0) return;
    }
    s = Eigen::VectorXd::Constant(k, gamma / k);
  };

  Eigen::VectorXd s(k);
  for (int t = 0; t < trials; ++t) {
    sample(s);
    double psi_sum = 0.0;
    for (int i = 0; i < k; ++i) psi_sum += psi_of(s[i], k, h);
    const double slack = bound - psi_sum;
    if (slack < rep.worst_slack) rep.worst_slack = slack;
    if (slack < -kInequalityTol) ++rep.violations;
  }

  // The bound's own configuration with integer m: equality check.
  const int m_int = std::min(k - 1, static_cast<int>(k - gamma));
  {
    double psi_sum = m_int * psi_of(0.0, k, h);
    const double level = gamma / (k - m_int);
    for (int i = m_int; i < k; ++i) psi_sum += psi_of(level, k, h);
    const double integer_bound =
        m_int * psi_of(0.0, k, h) + (k - m_int) * psi_of(level, k, h);
    rep.self_slack = integer_bound - psi_sum;
  }
  rep.pass = rep.violations == 0;
  return rep;
}

Lemma12Report verify_lemma12(int k, double gamma) {
  if (!(gamma > 0.0 && gamma < k)) {
    throw std::invalid_argument("verify_lemma12: gamma must lie in (0, k)");
  }
  const HFunction h = HFunction::neg_x_log_x();
  if (!validate_psi(k, h).ok()) {
    throw std::invalid_argument("verify_lemma12: psi hypothesis failure");
  }
  Lemma12Report rep;
  rep.k = k;
  rep.gamma = gamma;

  // The claim: any attained maximizer of g(a, b, l) = l psi(a) + (k-l)
  // psi(b) on the constraint set has a = gamma/l. The a = gamma/l family
  // is a measure-zero curve, so a 2-D grid over (l, a) never lands on it
  // exactly; instead we compare values. The curve maximum is computed
  // directly, then an unrestricted zoom search over (l, a) with b implied
  // by the mass constraint looks for anything strictly better. The claim
  // survives iff the unrestricted search finds no excess beyond 1e-9.
  auto curve_value = [&](double l) -> double {
    // a = gamma/l, b = 0; needs a <= 1, so l >= gamma.
    if (l < gamma || l <= 0.0 || l > k) return -1e300;
    return l * psi_of(gamma / l, k, h) + (k - l) * psi_of(0.0, k, h);
  };
  double curve_max = -std::numeric_limits<double>::infinity();
  double curve_l = gamma;
  {
    const int grid = 4000;
    for (int i = 0; i <= grid; ++i) {
      const double l = gamma + (k - gamma) * i / grid;
      const double v = curve_value(l);
      if (v > curve_max) {
        curve_max = v;
        curve_l = l;
      }
    }
    double a = std::max(gamma, curve_l - (k - gamma) / grid);
    double b = std::min(static_cast<double>(k), curve_l + (k - gamma) / grid);
    for (int it = 0; it < 200; ++it) {
      const double x1 = a + (b - a) / 3.0, x2 = b - (b - a) / 3.0;
      if (curve_value(x1) < curve_value(x2)) {
        a = x1;
      } else {
        b = x2;
      }
    }
    const double refined = 0.5 * (a + b);
    if (curve_value(refined) > curve_max) {
      curve_max = curve_value(refined);
      curve_l = refined;
    }
  }

  auto eval = [&](double l, double a) -> double {
    if (l <= 0.0 || l > k || a <= 0.0 || a > 1.0) return -1e300;
    double b;
    if (k - l < 1e-12) {
      if (std::abs(l * a - gamma) > 1e-9) return -1e300;
      b = 0.0;
    } else {
      b = (gamma - l * a) / (k - l);
    }
    if (b < 0.0 || b >= a || b > 1.0) return -1e300;
    return l * psi_of(a, k, h) + (k - l) * psi_of(b, k, h);
  };

  double lo_l = 1e-6, hi_l = k, lo_a = 1e-6, hi_a = 1.0;
  double grid_max = -std::numeric_limits<double>::infinity();
  double grid_l = 0.0, grid_a = 0.0;
  for (int stage = 0; stage < 6; ++stage) {
    const int grid = 200;
    for (int i = 0; i <= grid; ++i) {
      const double l = lo_l + (hi_l - lo_l) * i / grid;
      for (int j = 0; j <= grid; ++j) {
        const double a = lo_a + (hi_a - lo_a) * j / grid;
        const double v = eval(l, a);
        if (v > grid_max) {
          grid_max = v;
          grid_l = l;
          grid_a = a;
        }
      }
    }
    const double wl = (hi_l - lo_l) / grid * 2.5;
    const double wa = (hi_a - lo_a) / grid * 2.5;
    lo_l = std::max(1e-9, grid_l - wl);
    hi_l = std::min(static_cast<double>(k), grid_l + wl);
    lo_a = std::max(1e-9, grid_a - wa);
    hi_a = std::min(1.0, grid_a + wa);
  }

  rep.pass = grid_max <= curve_max + kInequalityTol;
  if (rep.pass) {
    // The attained maximum (up to tolerance) lies on the claimed curve.
    rep.value = curve_max;
    rep.best_l = curve_l;
    rep.best_a = gamma / curve_l;
    rep.best_b = 0.0;
    rep.deviation = 0.0;
  } else {
    // Genuine refutation: report where the better off-curve point sits.
    rep.value = grid_max;
    rep.best_l = grid_l;
    rep.best_a = grid_a;
    rep.best_b = (k - grid_l < 1e-12)
                     ? 0.0
                     : (gamma - grid_l * grid_a) / (k - grid_l);
    rep.deviation = std::abs(grid_a - gamma / grid_l);
  }
  return rep;
}

Prop9Report verify_prop9(double r, int k, std::uint64_t seed) {
  Prop9Report rep;
  rep.k = k;
  rep.r = r;
  const HFunction h = HFunction::neg_x_log_x();
  const RowMaximizer m = maximize_row(r, k, h, seed);
  Eigen::VectorXd found = m.s;
  Eigen::VectorXd expected = s_star(r, k);
  std::sort(found.data(), found.data() + k);
  std::sort(expected.data(), expected.data() + k);
  rep.deviation = (found - expected).cwiseAbs().maxCoeff();
  rep.converged = m.converged;
  rep.pass = rep.deviation < kMaximizerTol;
  return rep;
}

RemarkOptimalityReport remark_optimality_scan(int k, double c_step,
                                              int rho_grid) {
  if (k < 3) {
    throw std::invalid_argument("remark_optimality_scan: requires k >= 3");
  }
  RemarkOptimalityReport rep;
  rep.k = k;
  rep.c_step = c_step;
  rep.band_lo = c_threshold(k);
  rep.band_hi = rep.band_lo + 1.0;
  rep.first_violating_c = std::numeric_limits<double>::infinity();

  // m = k-1 requires rho <= (2k-1)/k.
  const double rho_hi = (2.0 * k - 1.0) / k;
  const double c_max = rep.band_hi + 2.0;
  for (double c = c_step; c <= c_max; c += c_step) {
    const double gj = g_c_uniform(k, c);
    bool violated = false;
    for (int i = 1; i <= rho_grid; ++i) {
      const double rho = 1.0 + (rho_hi - 1.0) * i / rho_grid;
      const Eigen::MatrixXd A = b_rho_matrix(rho, k - 1, k);
      if (g_c(A, c) > gj) {
        violated = true;
        break;
      }
    }
    if (violated) {
      rep.first_violating_c = c;
      break;
    }
  }
  rep.in_band = rep.first_violating_c >= rep.band_lo &&
                rep.first_violating_c < rep.band_hi;
  return rep;
}

}  // namespace chromatic
