#include "chromatic/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace chromatic {

namespace {

mpq_class mpq_pow(const mpq_class& base, unsigned long e) {
  mpq_class out = 1;
  mpq_class b = base;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  out.canonicalize();
  return out;
}

// Single-edge probability that a uniform ordered edge is bichromatic in
// both partitions of an overlap matrix L: 1 - 2/k + sum (l_ij/n)^2.
mpq_class bichromatic_pair_probability(int n, int k,
                                       const std::vector<long>& cells) {
  mpz_class sum_sq = 0;
  for (long l : cells) sum_sq += mpz_class(l) * l;
  const mpz_class n2 = mpz_class(n) * n;
  mpq_class p(k * n2 - 2 * n2 + k * sum_sq, k * n2);
  p.canonicalize();
  return p;
}

void fill_rows(int k, int margin, int row, std::vector<long>& cells,
               std::vector<long>& col_left,
               const std::function<void(const ContingencyMatrix&)>& visit,
               ContingencyMatrix& scratch) {
  if (row == k - 1) {
    // Last row forced by the column margins; row sum matches automatically.
    for (int j = 0; j < k; ++j) cells[row * k + j] = col_left[j];
    scratch.cells = cells;
    visit(scratch);
    return;
  }
  // Fill the free cells of this row, last cell forced by the row margin.
  std::function<void(int, long)> fill_cell = [&](int j, long row_left) {
    if (j == k - 1) {
      if (row_left > col_left[j]) return;
      cells[row * k + j] = row_left;
      col_left[j] -= row_left;
      fill_rows(k, margin, row + 1, cells, col_left, visit, scratch);
      col_left[j] += row_left;
      return;
    }
    const long hi = std::min<long>(row_left, col_left[j]);
    for (long v = 0; v <= hi; ++v) {
      cells[row * k + j] = v;
      col_left[j] -= v;
      fill_cell(j + 1, row_left - v);
      col_left[j] += v;
    }
  };
  fill_cell(0, margin);
}

}  // namespace

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

mpz_class multinomial(long n, const std::vector<long>& cells) {
  mpz_class out = factorial(n);
  for (long c : cells) out /= factorial(c);
  return out;
}

mpz_class balanced_partition_count(int n, int k) {
  if (k < 1 || n % k != 0) {
    throw std::invalid_argument("balanced_partition_count: requires k | n");
  }
  mpz_class out = factorial(n);
  const mpz_class part = factorial(n / k);
  for (int i = 0; i < k; ++i) out /= part;
  return out;
}

mpz_class contingency_count_bound(int n, int k) {
  mpz_class b;
  mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(n / k + 1),
                static_cast<unsigned long>((k - 1) * (k - 1)));
  return b;
}

void enumerate_contingency(
    int n, int k, const std::function<void(const ContingencyMatrix&)>& visit,
    double guard) {
  if (k < 1 || n < 0 || n % k != 0) {
    throw std::invalid_argument("enumerate_contingency: requires k | n");
  }
  const mpz_class bound = contingency_count_bound(n, k);
  if (bound > mpz_class(static_cast<unsigned long>(guard))) {
    throw std::runtime_error(
        "enumerate_contingency: count bound " + bound.get_str() +
        " exceeds the guard");
  }
  const int margin = n / k;
  std::vector<long> cells(static_cast<std::size_t>(k) * k, 0);
  std::vector<long> col_left(k, margin);
  ContingencyMatrix scratch;
  scratch.k = k;
  scratch.margin = margin;
  fill_rows(k, margin, 0, cells, col_left, visit, scratch);
}

ExactMoment expected_Z(int n, int k, int m) {
  if (k < 1 || n % k != 0) {
    throw std::invalid_argument("expected_Z: requires k | n");
  }
  mpq_class value = balanced_partition_count(n, k);
  value *= mpq_pow(mpq_class(k - 1, k), static_cast<unsigned long>(m));
  value.canonicalize();
  return {value, n, k, m};
}

ExactMoment expected_Z2(int n, int k, int m, double guard) {
  mpq_class total = 0;
  enumerate_contingency(
      n, k,
      [&](const ContingencyMatrix& L) {
        mpq_class term = multinomial(n, L.cells);
        term *= mpq_pow(bichromatic_pair_probability(n, k, L.cells),
                        static_cast<unsigned long>(m));
        total += term;
      },
      guard);
  total.canonicalize();
  return {total, n, k, m};
}

MomentRatio second_moment_ratio(int n, int k, double c, double guard) {
  const int m = static_cast<int>(std::floor(c * n));
  const mpq_class ez = expected_Z(n, k, m).value;
  const mpq_class ez2 = expected_Z2(n, k, m, guard).value;
  MomentRatio r;
  r.ratio = ez2 / (ez * ez);
  r.ratio.canonicalize();
  r.paley_zygmund = (ez * ez) / ez2;
  r.paley_zygmund.canonicalize();
  r.n = n;
  r.k = k;
  r.m = m;
  r.c = c;
  return r;
}

LaplaceProbe laplace_scaling_probe(int k, double c, const std::vector<int>& ns,
                                   double guard) {
  LaplaceProbe probe;
  probe.k = k;
  probe.c = c;
  for (int n : ns) {
    double sum = 0.0;
    enumerate_contingency(
        n, k,
        [&](const ContingencyMatrix& L) {
          double log_mult = std::lgamma(n + 1.0);
          double arg = 1.0 - 2.0 / k;
          for (long l : L.cells) {
            log_mult -= std::lgamma(l + 1.0);
            arg += (static_cast<double>(l) / n) * (static_cast<double>(l) / n);
          }
          sum += std::exp(log_mult + c * n * std::log(arg));
        },
        guard);
    // phi(J_k) = c * 2 log(1 - 1/k); denominator (k^2 e^{phi})^n.
    const double log_denominator =
        n * (2.0 * std::log(static_cast<double>(k)) +
             2.0 * c * std::log(1.0 - 1.0 / k));
    LaplaceProbeRow row;
    row.n = n;
    row.sum = sum;
    row.normalized =
        std::exp(std::log(sum) + (k - 1) * std::log(static_cast<double>(n)) -
                 log_denominator);
    probe.max_normalized = std::max(probe.max_normalized, row.normalized);
    probe.rows.push_back(row);
  }
  return probe;
}

bool stirling_bound_holds(int n, const ContingencyMatrix& L) {
  // log(n!/prod l!) <= -n * sum (l/n) log(l/n), with 0 log 0 = 0.
  double lhs = std::lgamma(n + 1.0);
  double rhs = 0.0;
  for (long l : L.cells) {
    lhs -= std::lgamma(l + 1.0);
    if (l > 0) {
      const double x = static_cast<double>(l) / n;
      rhs -= n * x * std::log(x);
    }
  }
  return lhs <= rhs + 1e-9;
}

}  // namespace chromatic
