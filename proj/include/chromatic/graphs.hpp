#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chromatic/rng.hpp"

namespace chromatic {

// Random multigraph with m edges, each formed by two independent uniform
// draws from [0, n). Loops and repeated edges are kept; the pair is stored
// with the smaller endpoint first but the sample space is the n^2 ordered
// draws.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
};

// Loop-free graph with distinct edges, endpoints sorted, edge list sorted.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  std::vector<std::vector<int>> adjacency() const;
};

Multigraph sample_gnm(int n, int m, std::uint64_t seed);

// Each of the C(n,2) possible edges present independently with probability p.
SimpleGraph sample_gnp(int n, double p, std::uint64_t seed);

// Remove loops and duplicate copies; returns the simple graph and the
// number q of blemishes removed (result has exactly m - q edges).
std::pair<SimpleGraph, int> simplify(const Multigraph& g);

SimpleGraph make_simple_graph(int n, std::vector<std::pair<int, int>> edges);

}  // namespace chromatic
