#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

#include "chromatic/hfunction.hpp"
#include "chromatic/rng.hpp"

namespace chromatic {

inline constexpr double kConstraintTol = 1e-12;
inline constexpr double kInequalityTol = 1e-9;
inline constexpr double kMaximizerTol = 1e-6;

// Entropy of a k x k stochastic matrix: -(1/k) sum a_ij log a_ij, with the
// convention 0 log 0 = 0.
template <typename Derived>
double entropy(const Eigen::MatrixBase<Derived>& A) {
  const auto k = A.rows();
  double s = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      const double a = A(i, j);
      if (a > 0.0) s += a * std::log(a);
    }
  }
  return -s / static_cast<double>(k);
}

// Energy: log(1 - 2/k + (1/k^2) sum a_ij^2). The argument is positive for
// every stochastic matrix; a non-positive argument signals a bad input.
template <typename Derived>
double energy(const Eigen::MatrixBase<Derived>& A) {
  const double k = static_cast<double>(A.rows());
  const double arg = 1.0 - 2.0 / k + A.squaredNorm() / (k * k);
  if (!(arg > 0.0)) {
    throw std::domain_error("energy: non-positive log argument");
  }
  return std::log(arg);
}

template <typename Derived>
double g_c(const Eigen::MatrixBase<Derived>& A, double c) {
  return entropy(A) + c * energy(A);
}

inline double g_c_uniform(int k, double c) {
  return std::log(static_cast<double>(k)) +
         2.0 * c * std::log(1.0 - 1.0 / k);
}

// Constant 1/k matrix J_k.
Eigen::MatrixXd uniform_matrix(int k);

// The unique simplex vector of the form (x, y, ..., y) with squared 2-norm
// r: x = (1 + sqrt((k-1)(kr-1)))/k, y = (1-x)/(k-1). Requires 1/k <= r <= 1.
Eigen::VectorXd s_star(double r, int k);

// f(r) = h(x_r) + (k-1) h(y_r) on [1/k, 1].
double f_of_r(double r, int k, const HFunction& h);

// Analytic f'(r) = x'(r) (h'(x_r) - h'(y_r)); diverges as r -> 1/k.
double f_prime(double r, int k, const HFunction& h);

// eta(y) = (f(1/k) - f(1/k + y))/y for the canonical h = -x log x, with the
// continuous extension eta(0) = k/2. Domain [0, 1 - 1/k].
double eta(double y, int k);

// zeta(y) = f(1/k + y) - f(1/k) - y f'(1/k + y), canonical h.
double zeta(double y, int k);

struct Theorem8Bound {
  double value = 0.0;
  double argmax_m = 0.0;  // real-valued maximizer
  double m_hi = 0.0;      // k(k - rho)/(k - 1)
};

// max over real m in [0, k(k-rho)/(k-1)] of
//   m k h(1/k) + (k-m) f((k rho - m)/(k(k-m))),
// by dense grid plus golden-section refinement. Refuses when the hypothesis
// flags of h fail.
Theorem8Bound theorem8_bound(double rho, int k, const HFunction& h);

// Value of the bound's own construction B_rho(m): m uniform rows, k-m rows
// equal to s*((k rho - m)/(k(k-m))).
Eigen::MatrixXd b_rho_matrix(double rho, int m, int k);

struct RowMaximizer {
  Eigen::VectorXd s;
  double value = 0.0;
  bool converged = false;
};

// Numerically maximize sum h(s_i) over the simplex slice {s >= 0,
// sum s = 1, sum s^2 = r} by multi-start projected gradient ascent.
RowMaximizer maximize_row(double r, int k, const HFunction& h,
                          std::uint64_t seed = 1, int starts = 50);

// Project v onto {s >= 0, sum s = 1, sum s^2 = r} by alternating the
// sphere-in-hyperplane projection with clipping.
Eigen::VectorXd project_simplex_sphere(Eigen::VectorXd v, double r);

// Euclidean projection onto the probability simplex.
Eigen::VectorXd project_simplex(Eigen::VectorXd v);

// Row-stochastic matrix with independent Dirichlet(1,...,1) rows.
Eigen::MatrixXd sample_stochastic(int k, Rng& rng);

// Doubly stochastic sample: random convex combination of up to k^2
// permutation matrices (support-covering, not uniform on the polytope).
Eigen::MatrixXd sample_birkhoff(int k, Rng& rng);

// Projected gradient ascent on g_c over row-stochastic matrices starting
// from A; returns the polished matrix.
Eigen::MatrixXd ascend_g_c(Eigen::MatrixXd A, double c, int max_iters = 2000);

}  // namespace chromatic
