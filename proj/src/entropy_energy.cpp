#include "chromatic/entropy_energy.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

namespace chromatic {

namespace {

constexpr double kGradFloor = 1e-18;

double hhat(const Eigen::VectorXd& s, const HFunction& h) {
  double v = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) v += h.value(s[i]);
  return v;
}

}  // namespace

Eigen::MatrixXd uniform_matrix(int k) {
  return Eigen::MatrixXd::Constant(k, k, 1.0 / k);
}

Eigen::VectorXd s_star(double r, int k) {
  const double lo = 1.0 / k;
  if (r < lo - kConstraintTol || r > 1.0 + kConstraintTol) {
    throw std::invalid_argument("s_star: r must lie in [1/k, 1]");
  }
  r = std::clamp(r, lo, 1.0);
  const double x = (1.0 + std::sqrt((k - 1.0) * (k * r - 1.0))) / k;
  const double y = (1.0 - x) / (k - 1.0);
  Eigen::VectorXd s = Eigen::VectorXd::Constant(k, y);
  s[0] = x;
  return s;
}

double f_of_r(double r, int k, const HFunction& h) {
  const Eigen::VectorXd s = s_star(r, k);
  return h.value(s[0]) + (k - 1.0) * h.value(s[1]);
}

double f_prime(double r, int k, const HFunction& h) {
  const Eigen::VectorXd s = s_star(r, k);
  const double disc = (k - 1.0) * (k * r - 1.0);
  if (disc <= 0.0) {
    throw std::domain_error("f_prime: diverges at r = 1/k");
  }
  const double xp = (k - 1.0) / (2.0 * std::sqrt(disc));
  return xp * (h.d1(s[0]) - h.d1(s[1]));
}

double eta(double y, int k) {
  const double hi = 1.0 - 1.0 / k;
  if (y < -kConstraintTol || y > hi + kConstraintTol) {
    throw std::invalid_argument("eta: y must lie in [0, 1 - 1/k]");
  }
  if (y < 1e-12) return k / 2.0;
  const HFunction h = HFunction::neg_x_log_x();
  const double fk = std::log(static_cast<double>(k));  // f(1/k) = k h(1/k)
  return (fk - f_of_r(1.0 / k + y, k, h)) / y;
}

double zeta(double y, int k) {
  const double hi = 1.0 - 1.0 / k;
  if (y <= 0.0 || y > hi + kConstraintTol) {
    throw std::invalid_argument("zeta: y must lie in (0, 1 - 1/k]");
  }
  const HFunction h = HFunction::neg_x_log_x();
  const double fk = std::log(static_cast<double>(k));
  return f_of_r(1.0 / k + y, k, h) - fk - y * f_prime(1.0 / k + y, k, h);
}

namespace {

// Objective of the theorem-8 bound at real m; handles the m -> k limit.
double q_of_m(double m, double rho, int k, const HFunction& h) {
  const double hk = h.value(1.0 / k);
  const double km = k - m;
  if (km < 1e-12) return k * k * hk;
  double r = (k * rho - m) / (k * km);
  r = std::clamp(r, 1.0 / k, 1.0);
  return m * k * hk + km * f_of_r(r, k, h);
}

}  // namespace

Theorem8Bound theorem8_bound(double rho, int k, const HFunction& h) {
  if (rho < 1.0 - kConstraintTol || rho > k + kConstraintTol) {
    throw std::invalid_argument("theorem8_bound: rho must lie in [1, k]");
  }
  if (!validate_hypotheses(h).ok()) {
    throw std::invalid_argument(
        "theorem8_bound: h fails the hypothesis flags (need h'(0+)=inf, "
        "h'(1-) finite, h3>0, h4<0, h6<0)");
  }
  rho = std::clamp(rho, 1.0, static_cast<double>(k));
  const double m_hi = k * (k - rho) / (k - 1.0);

  Theorem8Bound out;
  out.m_hi = m_hi;
  const int grid = 2000;
  double best_m = 0.0, best_v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double m = m_hi * i / grid;
    const double v = q_of_m(m, rho, k, h);
    if (v > best_v) {
      best_v = v;
      best_m = m;
    }
  }
  // Golden-section refinement between the grid neighbors of the best point.
  double a = std::max(0.0, best_m - m_hi / grid);
  double b = std::min(m_hi, best_m + m_hi / grid);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = q_of_m(x1, rho, k, h), f2 = q_of_m(x2, rho, k, h);
  for (int it = 0; it < 200 && b - a > 1e-13 * (1.0 + m_hi); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = q_of_m(x2, rho, k, h);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = q_of_m(x1, rho, k, h);
    }
  }
  const double m_star = 0.5 * (a + b);
  const double v_star = q_of_m(m_star, rho, k, h);
  if (v_star >= best_v) {
    best_v = v_star;
    best_m = m_star;
  }
  out.value = best_v;
  out.argmax_m = best_m;
  return out;
}

Eigen::MatrixXd b_rho_matrix(double rho, int m, int k) {
  if (m < 0 || m > k) throw std::invalid_argument("b_rho_matrix: bad m");
  Eigen::MatrixXd A = Eigen::MatrixXd::Constant(k, k, 1.0 / k);
  if (m == k) return A;
  const double r = (k * rho - m) / (k * static_cast<double>(k - m));
  const Eigen::VectorXd s = s_star(r, k);
  for (int i = m; i < k; ++i) A.row(i) = s.transpose();
  return A;
}

Eigen::VectorXd project_simplex(Eigen::VectorXd v) {
  const Eigen::Index k = v.size();
  std::vector<double> u(v.data(), v.data() + k);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, theta = 0.0;
  int rho = 0;
  for (int i = 0; i < k; ++i) {
    css += u[i];
    const double t = (css - 1.0) / (i + 1);
    if (u[i] - t > 0.0) {
      rho = i + 1;
      theta = t;
    }
  }
  for (Eigen::Index i = 0; i < k; ++i) v[i] = std::max(v[i] - theta, 0.0);
  return v;
}

Eigen::VectorXd project_simplex_sphere(Eigen::VectorXd v, double r) {
  // Active-set scheme: project onto {sum = 1, |s - center|^2 = r - 1/na}
  // within the current support; coordinates driven negative are pinned to
  // zero and the projection repeats on the smaller support. Alternating
  // clipping alone can stall on a cycle for r close to 1, returning points
  // with the wrong norm.
  const Eigen::Index k = v.size();
  std::vector<bool> active(static_cast<std::size_t>(k), true);
  Eigen::Index na = k;
  if (r <= 1.0 / k + 1e-14) return Eigen::VectorXd::Constant(k, 1.0 / k);

  for (Eigen::Index round = 0; round < k; ++round) {
    const double center = 1.0 / static_cast<double>(na);
    const double rad2 = r - center;
    if (rad2 <= 0.0) {
      // Support too small for the norm target; uniform on it is closest.
      for (Eigen::Index i = 0; i < k; ++i) v[i] = active[i] ? center : 0.0;
      return v;
    }
    const double radius = std::sqrt(rad2);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (active[i]) sum += v[i];
    }
    const double shift = (sum - 1.0) / na;
    double dn2 = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (active[i]) {
        v[i] -= shift;
        const double d = v[i] - center;
        dn2 += d * d;
      }
    }
    double dn = std::sqrt(dn2);
    if (dn < 1e-15) {
      // Degenerate direction: pick any zero-sum direction in the support.
      int seen = 0;
      for (Eigen::Index i = 0; i < k; ++i) {
        if (!active[i]) continue;
        v[i] = center + ((seen++ % 2 == 0) ? 1.0 : -1.0) * 1e-8;
      }
      if (seen % 2 == 1) {  // fix the leftover coordinate's sum contribution
        for (Eigen::Index i = k - 1; i >= 0; --i) {
          if (active[i]) {
            v[i] = center;
            break;
          }
        }
      }
      dn = 0.0;
      for (Eigen::Index i = 0; i < k; ++i) {
        if (active[i]) dn += (v[i] - center) * (v[i] - center);
      }
      dn = std::sqrt(dn);
    }
    bool clipped = false;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (!active[i]) {
        v[i] = 0.0;
        continue;
      }
      v[i] = center + (v[i] - center) * (radius / dn);
      if (v[i] < -1e-13) clipped = true;
    }
    if (!clipped) {
      for (Eigen::Index i = 0; i < k; ++i) v[i] = std::max(v[i], 0.0);
      return v;
    }
    for (Eigen::Index i = 0; i < k; ++i) {
      if (active[i] && v[i] < -1e-13) {
        active[i] = false;
        v[i] = 0.0;
        --na;
      }
    }
    if (na <= 1) break;
  }
  for (Eigen::Index i = 0; i < k; ++i) v[i] = std::max(v[i], 0.0);
  const double s = v.sum();
  if (s > 0.0) v /= s;
  return v;
}

Eigen::MatrixXd sample_stochastic(int k, Rng& rng) {
  Eigen::MatrixXd A(k, k);
  for (int i = 0; i < k; ++i) {
    double sum = 0.0;
    for (int j = 0; j < k; ++j) {
      A(i, j) = rng.exponential();
      sum += A(i, j);
    }
    A.row(i) /= sum;
  }
  return A;
}

Eigen::MatrixXd sample_birkhoff(int k, Rng& rng) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k, k);
  const int count = k * k;
  std::vector<double> w(count);
  double wsum = 0.0;
  for (double& x : w) {
    x = rng.exponential();
    wsum += x;
  }
  std::vector<int> perm(k);
  for (int t = 0; t < count; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = k - 1; i > 0; --i) {
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    }
    const double weight = w[t] / wsum;
    for (int i = 0; i < k; ++i) A(i, perm[i]) += weight;
  }
  return A;
}

RowMaximizer maximize_row(double r, int k, const HFunction& h,
                          std::uint64_t seed, int starts) {
  const double lo = 1.0 / k;
  if (r < lo - kConstraintTol || r > 1.0 + kConstraintTol) {
    throw std::invalid_argument("maximize_row: r must lie in [1/k, 1]");
  }
  r = std::clamp(r, lo, 1.0);

  RowMaximizer best;
  best.value = -std::numeric_limits<double>::infinity();

  if (r <= lo + 1e-14) {  // single feasible point
    best.s = Eigen::VectorXd::Constant(k, lo);
    best.value = hhat(best.s, h);
    best.converged = true;
    return best;
  }
  if (r >= 1.0 - 1e-14) {  // feasible points are the basis vectors
    best.s = Eigen::VectorXd::Zero(k);
    best.s[0] = 1.0;
    best.value = hhat(best.s, h);
    best.converged = true;
    return best;
  }

  Rng rng = Rng(seed).split(0x726f77);
  for (int start = 0; start < starts; ++start) {
    Eigen::VectorXd s(k);
    for (int i = 0; i < k; ++i) s[i] = rng.exponential();
    s /= s.sum();
    s = project_simplex_sphere(s, r);

    double val = hhat(s, h);
    double step = 0.1;
    bool tight = false;
    for (int iter = 0; iter < 20000; ++iter) {
      Eigen::VectorXd g(k);
      for (int i = 0; i < k; ++i) g[i] = h.d1(std::max(s[i], kGradFloor));
      // Tangent of the sum/norm constraints: remove span{1, s - center}.
      g.array() -= g.mean();
      Eigen::VectorXd d = s.array() - 1.0 / k;
      const double dn = d.squaredNorm();
      if (dn > 1e-24) g -= d * (g.dot(d) / dn);
      const double gnorm = g.norm();
      if (gnorm < 1e-12) {
        tight = true;
        break;
      }
      bool moved = false;
      while (step > 1e-15) {
        Eigen::VectorXd cand = project_simplex_sphere(s + step * g, r);
        const double cv = hhat(cand, h);
        if (cv > val + 1e-15) {
          s = cand;
          val = cv;
          moved = true;
          step *= 1.3;
          break;
        }
        step *= 0.5;
      }
      if (!moved) {
        tight = step <= 1e-15 || gnorm < 1e-8;
        break;
      }
    }
    if (val > best.value) {
      best.value = val;
      best.s = s;
      best.converged = tight;
    }
  }
  return best;
}

Eigen::MatrixXd ascend_g_c(Eigen::MatrixXd A, double c, int max_iters) {
  const int k = static_cast<int>(A.rows());
  double val = g_c(A, c);
  double step = 0.1;
  for (int iter = 0; iter < max_iters; ++iter) {
    const double arg = 1.0 - 2.0 / k + A.squaredNorm() / (k * static_cast<double>(k));
    Eigen::MatrixXd G(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const double a = std::max(A(i, j), kGradFloor);
        G(i, j) = -(std::log(a) + 1.0) / k + c * (2.0 * A(i, j) / (k * static_cast<double>(k))) / arg;
      }
    }
    bool moved = false;
    while (step > 1e-15) {
      Eigen::MatrixXd cand = A + step * G;
      for (int i = 0; i < k; ++i) {
        cand.row(i) = project_simplex(cand.row(i).transpose()).transpose();
      }
      const double cv = g_c(cand, c);
      if (cv > val + 1e-15) {
        A = cand;
        val = cv;
        moved = true;
        step *= 1.3;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return A;
}

}  // namespace chromatic
