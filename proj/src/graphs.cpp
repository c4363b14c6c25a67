#include "chromatic/graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromatic {

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Multigraph sample_gnm(int n, int m, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_gnm: n must be >= 1");
  if (m < 0) throw std::invalid_argument("sample_gnm: m must be >= 0");
  Rng rng(seed);
  Multigraph g;
  g.n = n;
  g.edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  return g;
}

SimpleGraph sample_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("sample_gnp: p must lie in [0,1]");
  }
  Rng rng(seed);
  SimpleGraph g;
  g.n = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_double() < p) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

std::pair<SimpleGraph, int> simplify(const Multigraph& g) {
  std::vector<std::pair<int, int>> kept;
  kept.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    if (e.first != e.second) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  SimpleGraph s;
  s.n = g.n;
  s.edges = std::move(kept);
  const int q = g.m() - s.m();
  return {std::move(s), q};
}

SimpleGraph make_simple_graph(int n, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) {
      throw std::invalid_argument("make_simple_graph: bad edge");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  SimpleGraph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

}  // namespace chromatic
