#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "chromatic/coloring.hpp"
#include "chromatic/graphs.hpp"

using namespace chromatic;

namespace {

// Independent oracle: count proper assignments by iterating over all k^n
// colorings of the multigraph.
mpz_class brute_count(const Multigraph& g, int k) {
  std::vector<int> color(g.n, 0);
  mpz_class count = 0;
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges) {
      if (color[u] == color[v]) {
        proper = false;
        break;
      }
    }
    if (proper) ++count;
    int i = 0;
    while (i < g.n && ++color[i] == k) color[i++] = 0;
    if (i == g.n) break;
  }
  return count;
}

Multigraph cycle(int n) {
  Multigraph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.edges.emplace_back(std::min(i, (i + 1) % n),
                                                   std::max(i, (i + 1) % n));
  return g;
}

SimpleGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return make_simple_graph(n, std::move(e));
}

SimpleGraph petersen() {
  return make_simple_graph(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},          // outer cycle
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},          // spokes
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});        // inner star
}

}  // namespace

TEST_CASE("chromatic numbers of standard graphs") {
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(chromatic_number(complete(7)) == 7);
  CHECK(chromatic_number(make_simple_graph(1, {})) == 1);
  CHECK(chromatic_number(make_simple_graph(5, {})) == 1);
  CHECK(chromatic_number(petersen()) == 3);
  // Odd cycle: 3; even cycle: 2.
  CHECK(chromatic_number(simplify(cycle(5)).first) == 3);
  CHECK(chromatic_number(simplify(cycle(6)).first) == 2);
  // Complete bipartite K_{3,3}.
  CHECK(chromatic_number(make_simple_graph(
            6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                {2, 3}, {2, 4}, {2, 5}})) == 2);
}

TEST_CASE("decision form agrees with the chromatic number") {
  const auto g = petersen();
  CHECK_FALSE(is_k_colorable(g, 2));
  CHECK(is_k_colorable(g, 3));
  CHECK(is_k_colorable(g, 4));
  CHECK_FALSE(is_k_colorable(complete(5), 4));
  CHECK(is_k_colorable(complete(5), 5));
}

TEST_CASE("k = 0 and empty graphs") {
  const auto empty = make_simple_graph(3, {});
  CHECK_FALSE(is_k_colorable(empty, 0));
  const SimpleGraph none{0, {}};
  CHECK(is_k_colorable(none, 0));
  CHECK(chromatic_number(none) == 0);
}

TEST_CASE("budgeted decision matches the unlimited one when it completes") {
  const auto g = sample_gnp(40, 0.15, 3);
  for (int k = 2; k <= 4; ++k) {
    const auto budgeted = is_k_colorable(g, k, 30.0);
    REQUIRE(budgeted.has_value());
    CHECK(*budgeted == is_k_colorable(g, k));
  }
  CHECK(chromatic_number(g, -1.0) == chromatic_number(g));
}

TEST_CASE("exact counts match the k^n brute force") {
  // Triangle: k(k-1)(k-2).
  Multigraph tri;
  tri.n = 3;
  tri.edges = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 1; k <= 5; ++k) {
    CHECK(count_colorings(tri, k) == brute_count(tri, k));
  }
  CHECK(count_colorings(tri, 4) == 4 * 3 * 2);

  // Cycles, paths and a random multigraph with repeats.
  for (int k = 2; k <= 4; ++k) {
    CHECK(count_colorings(cycle(5), k) == brute_count(cycle(5), k));
    CHECK(count_colorings(cycle(6), k) == brute_count(cycle(6), k));
    const auto g = sample_gnm(7, 10, 21);
    CHECK(count_colorings(g, k) == brute_count(g, k));
  }
}

TEST_CASE("chromatic polynomial identities") {
  // C_n with k colors: (k-1)^n + (-1)^n (k-1).
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k <= 4; ++k) {
      const long expect = static_cast<long>(std::pow(k - 1.0, n)) +
                          (n % 2 == 0 ? (k - 1) : -(k - 1));
      CHECK(count_colorings(cycle(n), k) == expect);
    }
  }
  // Empty graph on n vertices: k^n.
  Multigraph empty;
  empty.n = 4;
  CHECK(count_colorings(empty, 3) == 81);
}

TEST_CASE("a loop kills every coloring") {
  Multigraph g;
  g.n = 2;
  g.edges = {{0, 0}};
  CHECK(count_colorings(g, 3) == 0);
  CHECK(count_balanced_colorings(g, 2) == 0);
}

TEST_CASE("balanced counts against a filtered brute force") {
  // Independent check: brute force over k^n, keeping balanced ones.
  auto brute_balanced = [](const Multigraph& g, int k) {
    std::vector<int> color(g.n, 0);
    mpz_class count = 0;
    while (true) {
      bool proper = true;
      for (const auto& [u, v] : g.edges) {
        if (color[u] == color[v]) {
          proper = false;
          break;
        }
      }
      if (proper) {
        std::vector<int> sizes(k, 0);
        for (int c : color) ++sizes[c];
        bool balanced = true;
        for (int s : sizes) balanced = balanced && (s == g.n / k);
        if (balanced) ++count;
      }
      int i = 0;
      while (i < g.n && ++color[i] == k) color[i++] = 0;
      if (i == g.n) break;
    }
    return count;
  };
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto g = sample_gnm(6, 7, seed);
    CHECK(count_balanced_colorings(g, 2) == brute_balanced(g, 2));
    CHECK(count_balanced_colorings(g, 3) == brute_balanced(g, 3));
  }
  // K2 with k = 2: both proper assignments are balanced.
  Multigraph k2;
  k2.n = 2;
  k2.edges = {{0, 1}};
  CHECK(count_balanced_colorings(k2, 2) == 2);
}

TEST_CASE("balanced counting requires k | n; enumeration guard trips") {
  Multigraph g;
  g.n = 5;
  CHECK_THROWS_AS(count_balanced_colorings(g, 2), std::invalid_argument);
  Multigraph big;
  big.n = 64;
  CHECK_THROWS_AS(count_colorings(big, 4), std::runtime_error);
}
