#include "chromatic/io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace chromatic {

namespace {

template <typename G>
void write_impl(const G& g, std::ostream& out) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace

void write_edge_list(const Multigraph& g, std::ostream& out) {
  write_impl(g, out);
}

void write_edge_list(const SimpleGraph& g, std::ostream& out) {
  write_impl(g, out);
}

Multigraph read_edge_list(std::istream& in) {
  Multigraph g;
  long m = 0;
  if (!(in >> g.n >> m) || g.n < 0 || m < 0) {
    throw std::runtime_error("read_edge_list: bad header (expected \"n m\")");
  }
  g.edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) {
      throw std::runtime_error("read_edge_list: truncated edge list");
    }
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      throw std::runtime_error("read_edge_list: endpoint out of range");
    }
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  return g;
}

}  // namespace chromatic
