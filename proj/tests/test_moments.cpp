#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "chromatic/moments.hpp"

using namespace chromatic;

namespace {

// All assignments of n vertices to k classes of size exactly n/k, built by
// direct recursion; independent of the library's enumeration machinery.
std::vector<std::vector<int>> balanced_partitions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> part(n, -1), sizes(k, 0);
  const int cap = n / k;
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      out.push_back(part);
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[c] == cap) continue;
      part[v] = c;
      ++sizes[c];
      rec(v + 1);
      --sizes[c];
      part[v] = -1;
    }
  };
  rec(0);
  return out;
}

mpq_class mpq_power(mpq_class base, int e) {
  mpq_class out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  out.canonicalize();
  return out;
}

// Brute-force E[Z]: sum over partitions of Pr[every edge bichromatic]^1,
// with the single-edge probability counted directly over the n^2 ordered
// endpoint draws.
mpq_class brute_EZ(int n, int k, int m) {
  mpq_class total = 0;
  for (const auto& part : balanced_partitions(n, k)) {
    long good = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (part[u] != part[v]) ++good;
      }
    }
    total += mpq_power(mpq_class(good, static_cast<long>(n) * n), m);
  }
  total.canonicalize();
  return total;
}

// Brute-force E[Z^2]: sum over ordered pairs of partitions of
// Pr[every edge bichromatic in both]^m.
mpq_class brute_EZ2(int n, int k, int m) {
  const auto parts = balanced_partitions(n, k);
  mpq_class total = 0;
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      long good = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          if (a[u] != a[v] && b[u] != b[v]) ++good;
        }
      }
      total += mpq_power(mpq_class(good, static_cast<long>(n) * n), m);
    }
  }
  total.canonicalize();
  return total;
}

}  // namespace

TEST_CASE("factorial and multinomial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == mpz_class("2432902008176640000"));
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial(6, {1, 2, 3}) == 60);
  CHECK(multinomial(3, {3, 0, 0}) == 1);
}

TEST_CASE("balanced partition count") {
  CHECK(balanced_partition_count(4, 2) == 6);
  CHECK(balanced_partition_count(6, 3) == 90);
  CHECK(balanced_partition_count(6, 2) == 20);
  CHECK(balanced_partition_count(0, 3) == 1);
  CHECK_THROWS_AS(balanced_partition_count(5, 2), std::invalid_argument);
  // Matches the explicit enumeration.
  CHECK(balanced_partition_count(6, 3) ==
        mpz_class(static_cast<long>(balanced_partitions(6, 3).size())));
}

TEST_CASE("contingency enumeration: counts, margins, order, uniqueness") {
  int count = 0;
  std::vector<std::vector<long>> seen;
  enumerate_contingency(4, 2, [&](const ContingencyMatrix& L) {
    ++count;
    CHECK(L.k == 2);
    CHECK(L.margin == 2);
    CHECK(L.at(0, 0) + L.at(0, 1) == 2);
    CHECK(L.at(0, 0) + L.at(1, 0) == 2);
    CHECK(L.at(1, 0) + L.at(1, 1) == 2);
    seen.push_back(L.cells);
  });
  CHECK(count == 3);  // l_00 in {0, 1, 2}
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);

  // k = 3, margin 1: exactly the six permutation matrices.
  int perms = 0;
  enumerate_contingency(3, 3, [&](const ContingencyMatrix&) { ++perms; });
  CHECK(perms == 6);

  CHECK_THROWS_AS(enumerate_contingency(5, 2, [](const ContingencyMatrix&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      enumerate_contingency(4000, 4, [](const ContingencyMatrix&) {}),
      std::runtime_error);
}

TEST_CASE("grouping identity at small sizes") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{
           {2, 2}, {4, 2}, {6, 2}, {3, 3}, {6, 3}}) {
    mpz_class total = 0;
    enumerate_contingency(n, k, [&](const ContingencyMatrix& L) {
      total += multinomial(n, L.cells);
    });
    const mpz_class bpc = balanced_partition_count(n, k);
    CHECK(total == bpc * bpc);
  }
}

TEST_CASE("first moment matches the brute-force oracle exactly") {
  for (int n : {2, 4, 6}) {
    for (int m = 0; m <= 4; ++m) {
      CHECK(expected_Z(n, 2, m).value == brute_EZ(n, 2, m));
    }
  }
  for (int m = 0; m <= 4; ++m) {
    CHECK(expected_Z(6, 3, m).value == brute_EZ(6, 3, m));
  }
  // Hand value: n = 4, k = 2, m = 2: 6 * (1/2)^2 = 3/2.
  CHECK(expected_Z(4, 2, 2).value == mpq_class(3, 2));
  CHECK_THROWS_AS(expected_Z(5, 2, 1), std::invalid_argument);
}

TEST_CASE("second moment matches the brute-force oracle exactly") {
  for (int n : {2, 4, 6}) {
    for (int m = 0; m <= 3; ++m) {
      CHECK(expected_Z2(n, 2, m).value == brute_EZ2(n, 2, m));
    }
  }
  for (int m = 0; m <= 3; ++m) {
    CHECK(expected_Z2(3, 3, m).value == brute_EZ2(3, 3, m));
  }
  // m = 0 collapses to the squared count of balanced partitions.
  const mpz_class bpc = balanced_partition_count(6, 2);
  CHECK(expected_Z2(6, 2, 0).value == mpq_class(bpc * bpc));
}

TEST_CASE("ratio bookkeeping: m = floor(c n), Paley-Zygmund inverse") {
  const auto r = second_moment_ratio(6, 2, 0.9);
  CHECK(r.m == 5);
  CHECK(r.n == 6);
  mpq_class product = r.ratio * r.paley_zygmund;
  product.canonicalize();
  CHECK(product == 1);
  // E[Z^2] >= (E[Z])^2 always (variance is nonnegative).
  CHECK(r.ratio >= 1);
}

TEST_CASE("stirling-style multinomial bound on enumerated matrices") {
  enumerate_contingency(8, 2, [&](const ContingencyMatrix& L) {
    CHECK(stirling_bound_holds(8, L));
  });
  enumerate_contingency(6, 3, [&](const ContingencyMatrix& L) {
    CHECK(stirling_bound_holds(6, L));
  });
}

TEST_CASE("laplace probe rows carry the advertised normalization") {
  const auto probe = laplace_scaling_probe(2, 0.5, {4, 8});
  REQUIRE(probe.rows.size() == 2);
  for (const auto& row : probe.rows) {
    CHECK(row.sum > 0.0);
    CHECK(row.normalized > 0.0);
    CHECK(row.normalized <= probe.max_normalized);
  }
  // Independent recomputation for n = 4: normalized = S * 4 / (4 e^{phi})^4.
  const double phi = 2.0 * 0.5 * std::log(0.5);
  const double expected =
      probe.rows[0].sum * 4.0 / std::pow(4.0 * std::exp(phi), 4.0);
  CHECK(probe.rows[0].normalized == doctest::Approx(expected).epsilon(1e-12));
}
