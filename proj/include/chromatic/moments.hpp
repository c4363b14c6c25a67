#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace chromatic {

// k x k nonnegative-integer matrix with all row and column sums n/k,
// row-major storage. Encodes the overlap of two balanced partitions.
struct ContingencyMatrix {
  int k = 0;
  int margin = 0;                // n/k
  std::vector<long> cells;       // k*k entries, row-major

  long at(int i, int j) const { return cells[i * k + j]; }
};

struct ExactMoment {
  mpq_class value;
  int n = 0, k = 0, m = 0;
};

struct MomentRatio {
  mpq_class ratio;               // E[Z^2] / (E[Z])^2
  mpq_class paley_zygmund;       // (E[Z])^2 / E[Z^2], lower bound on Pr[Z>0]
  int n = 0, k = 0, m = 0;
  double c = 0.0;
};

struct LaplaceProbeRow {
  int n = 0;
  double sum = 0.0;              // S(n), the exact sum in double precision
  double normalized = 0.0;       // S(n) * n^{k-1} / (k^2 e^{phi(J_k)})^n
};

struct LaplaceProbe {
  int k = 0;
  double c = 0.0;
  std::vector<LaplaceProbeRow> rows;
  double max_normalized = 0.0;
};

mpz_class factorial(long n);

// n! / prod(cells!), cells summing to n.
mpz_class multinomial(long n, const std::vector<long>& cells);

// Number of balanced partitions n!/((n/k)!)^k. Requires k | n.
mpz_class balanced_partition_count(int n, int k);

// Upper bound (n/k+1)^{(k-1)^2} on the number of contingency matrices.
mpz_class contingency_count_bound(int n, int k);

inline constexpr double kContingencyGuard = 1e8;

// Visit every k x k matrix with all margins n/k exactly once, in
// lexicographic order on row-major entries. Requires k | n; refuses when
// the count bound exceeds the guard.
void enumerate_contingency(int n, int k,
                           const std::function<void(const ContingencyMatrix&)>& visit,
                           double guard = kContingencyGuard);

// E[Z] = n!/((n/k)!)^k * (1 - 1/k)^m, exact.
ExactMoment expected_Z(int n, int k, int m);

// E[Z^2] = sum over contingency matrices of
//   n!/prod(l_ij!) * (1 - 2/k + sum (l_ij/n)^2)^m, exact.
ExactMoment expected_Z2(int n, int k, int m, double guard = kContingencyGuard);

// m = floor(c*n).
MomentRatio second_moment_ratio(int n, int k, double c,
                                double guard = kContingencyGuard);

// Desk-scale scaling check of the Laplace-method sum with phi = c*E:
// S(n) = sum_L n!/prod(l!) * (1 - 2/k + sum (l/n)^2)^{cn}, reported with
// the normalization n^{k-1} / (k^2 e^{phi(J_k)})^n.
LaplaceProbe laplace_scaling_probe(int k, double c, const std::vector<int>& ns,
                                   double guard = kContingencyGuard);

// Stirling-style multinomial bound (validity assertion, not used in
// computation): n!/prod(l!) <= prod (l/n)^{-l}. Returns true when it holds.
bool stirling_bound_holds(int n, const ContingencyMatrix& L);

}  // namespace chromatic
