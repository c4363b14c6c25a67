#include "chromatic/coloring.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace chromatic {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  bool limited = false;
  Clock::time_point at{};

  static Deadline unlimited() { return {}; }
  static Deadline in(double seconds) {
    if (seconds <= 0.0) return unlimited();
    Deadline d;
    d.limited = true;
    d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const { return limited && Clock::now() >= at; }
};

struct TimedOut {};

// Decision solver for one connected instance. Colors are bitmask-encoded,
// so k is limited to 64 (far beyond desk scale).
class DecisionSolver {
 public:
  DecisionSolver(const std::vector<std::vector<int>>& adj, int k,
                 const Deadline& deadline)
      : adj_(adj),
        k_(k),
        n_(static_cast<int>(adj.size())),
        deadline_(deadline),
        color_(adj.size(), -1),
        forbidden_(adj.size(), 0) {
    degree_.reserve(adj.size());
    for (const auto& nb : adj) degree_.push_back(static_cast<int>(nb.size()));
  }

  bool solve() { return recurse(0, 0); }

 private:
  bool recurse(int colored, int used_colors) {
    if ((++nodes_ & 1023) == 0 && deadline_.expired()) throw TimedOut{};
    if (colored == n_) return true;

    const int u = pick_vertex();
    const int palette = std::min(k_, used_colors + 1);
    const std::uint64_t taken = forbidden_[u];
    for (int c = 0; c < palette; ++c) {
      if (taken & (1ULL << c)) continue;
      if (!assign(u, c)) {
        unassign(u, c);
        continue;
      }
      if (recurse(colored + 1, std::max(used_colors, c + 1))) return true;
      unassign(u, c);
    }
    return false;
  }

  // Max saturation, then max degree, then lowest index.
  int pick_vertex() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int u = 0; u < n_; ++u) {
      if (color_[u] != -1) continue;
      const int sat = std::popcount(forbidden_[u]);
      if (sat > best_sat || (sat == best_sat && degree_[u] > best_deg)) {
        best = u;
        best_sat = sat;
        best_deg = degree_[u];
      }
    }
    return best;
  }

  // Forward checking: fail if some uncolored neighbor loses its last color.
  bool assign(int u, int c) {
    color_[u] = c;
    const std::uint64_t bit = 1ULL << c;
    const std::uint64_t full = (k_ == 64) ? ~0ULL : ((1ULL << k_) - 1);
    bool ok = true;
    for (int v : adj_[u]) {
      forbidden_[v] |= bit;
      if (color_[v] == -1 && (forbidden_[v] & full) == full) ok = false;
    }
    return ok;
  }

  void unassign(int u, int c) {
    color_[u] = -1;
    const std::uint64_t bit = 1ULL << c;
    for (int v : adj_[u]) {
      bool still = false;
      for (int w : adj_[v]) {
        if (w != u && color_[w] == c) {
          still = true;
          break;
        }
      }
      if (!still) forbidden_[v] &= ~bit;
    }
  }

  const std::vector<std::vector<int>>& adj_;
  int k_;
  int n_;
  Deadline deadline_;
  std::vector<int> color_;
  std::vector<std::uint64_t> forbidden_;
  std::vector<int> degree_;
  std::uint64_t nodes_ = 0;
};

// Peel vertices of degree < k; the instance is k-colorable iff its k-core
// is. Returns the adjacency lists of the surviving components.
std::vector<std::vector<std::vector<int>>> core_components(
    const SimpleGraph& g, int k) {
  auto adj = g.adjacency();
  const int n = g.n;
  std::vector<int> deg(n);
  std::vector<bool> removed(n, false);
  std::vector<int> queue;
  for (int u = 0; u < n; ++u) {
    deg[u] = static_cast<int>(adj[u].size());
    if (deg[u] < k) {
      removed[u] = true;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const int u = queue.back();
    queue.pop_back();
    for (int v : adj[u]) {
      if (!removed[v] && --deg[v] < k) {
        removed[v] = true;
        queue.push_back(v);
      }
    }
  }

  std::vector<std::vector<std::vector<int>>> comps;
  std::vector<int> label(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || label[s] != -1) continue;
    std::vector<int> members;
    label[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int v : adj[u]) {
        if (!removed[v] && label[v] == -1) {
          label[v] = 0;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<int> index(n, -1);
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
      index[members[i]] = i;
    }
    std::vector<std::vector<int>> local(members.size());
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
      for (int v : adj[members[i]]) {
        if (!removed[v]) local[i].push_back(index[v]);
      }
      std::sort(local[i].begin(), local[i].end());
    }
    comps.push_back(std::move(local));
  }
  return comps;
}

bool decide(const SimpleGraph& g, int k, const Deadline& deadline) {
  if (k < 1) return g.n == 0;
  if (k > 64) return true;  // desk-scale graphs here have chi far below 64
  if (g.edges.empty()) return true;
  if (k == 1) return false;
  for (auto& comp : core_components(g, k)) {
    DecisionSolver solver(comp, k, deadline);
    if (!solver.solve()) return false;
  }
  return true;
}

// Greedy clique around the highest-degree vertices; a lower bound on chi.
int greedy_clique_bound(const SimpleGraph& g) {
  if (g.n == 0) return 0;
  auto adj = g.adjacency();
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  std::vector<int> order(g.n);
  for (int i = 0; i < g.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return adj[a].size() != adj[b].size() ? adj[a].size() > adj[b].size()
                                          : a < b;
  });
  auto adjacent = [&](int u, int v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  };
  std::vector<int> clique;
  for (int u : order) {
    bool ok = true;
    for (int v : clique) {
      if (!adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (ok) clique.push_back(u);
  }
  return static_cast<int>(clique.size());
}

// DSATUR greedy coloring; number of colors used is an upper bound on chi.
int greedy_coloring_bound(const SimpleGraph& g) {
  if (g.n == 0) return 0;
  auto adj = g.adjacency();
  std::vector<int> color(g.n, -1);
  std::vector<std::uint64_t> forbidden(g.n, 0);
  int used = 0;
  for (int step = 0; step < g.n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int u = 0; u < g.n; ++u) {
      if (color[u] != -1) continue;
      const int sat = std::popcount(forbidden[u]);
      const int deg = static_cast<int>(adj[u].size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = u;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = 0;
    while (c < 64 && (forbidden[best] & (1ULL << c))) ++c;
    color[best] = c;
    used = std::max(used, c + 1);
    if (c < 64) {
      for (int v : adj[best]) forbidden[v] |= (1ULL << c);
    }
  }
  return used;
}

int chi(const SimpleGraph& g, const Deadline& deadline) {
  if (g.n == 0) return 0;
  if (g.edges.empty()) return 1;
  const int lb = std::max(2, greedy_clique_bound(g));
  const int ub = greedy_coloring_bound(g);
  for (int k = lb; k < ub; ++k) {
    if (decide(g, k, deadline)) return k;
  }
  return ub;
}

struct Counter {
  const std::vector<std::vector<int>>& earlier;  // earlier-indexed neighbors
  int k;
  int n;
  std::vector<int> color;
  std::vector<int> class_size;
  int cap;  // n/k for balanced counting, n for unrestricted
  mpz_class total = 0;

  Counter(const std::vector<std::vector<int>>& earlier, int k, int n, int cap)
      : earlier(earlier), k(k), n(n), color(n, -1), class_size(k, 0),
        cap(cap) {}

  void run(int v) {
    if (v == n) {
      ++total;
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (class_size[c] == cap) continue;
      bool ok = true;
      for (int u : earlier[v]) {
        if (color[u] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[v] = c;
      ++class_size[c];
      run(v + 1);
      --class_size[c];
      color[v] = -1;
    }
  }
};

void check_guard(int n, int k, double guard) {
  if (n * std::log(static_cast<double>(std::max(k, 2))) >
      std::log(guard) + 1e-9) {
    throw std::runtime_error(
        "count_colorings: k^n exceeds the enumeration guard");
  }
}

mpz_class count_impl(const Multigraph& g, int k, double guard, bool balanced) {
  if (k < 1) throw std::invalid_argument("count: k must be >= 1");
  if (balanced && g.n % k != 0) {
    throw std::invalid_argument("count_balanced_colorings: requires k | n");
  }
  check_guard(g.n, k, guard);
  for (const auto& e : g.edges) {
    if (e.first == e.second) return 0;  // loop: no valid assignment
  }
  std::vector<std::vector<int>> earlier(g.n);
  for (const auto& [u, v] : g.edges) earlier[std::max(u, v)].push_back(std::min(u, v));
  Counter counter(earlier, k, g.n, balanced ? g.n / k : g.n);
  counter.run(0);
  return counter.total;
}

}  // namespace

bool is_k_colorable(const SimpleGraph& g, int k) {
  return decide(g, k, Deadline::unlimited());
}

std::optional<bool> is_k_colorable(const SimpleGraph& g, int k,
                                   double budget_seconds) {
  try {
    return decide(g, k, Deadline::in(budget_seconds));
  } catch (const TimedOut&) {
    return std::nullopt;
  }
}

int chromatic_number(const SimpleGraph& g) {
  return chi(g, Deadline::unlimited());
}

std::optional<int> chromatic_number(const SimpleGraph& g,
                                    double budget_seconds) {
  try {
    return chi(g, Deadline::in(budget_seconds));
  } catch (const TimedOut&) {
    return std::nullopt;
  }
}

mpz_class count_colorings(const Multigraph& g, int k, double guard) {
  return count_impl(g, k, guard, /*balanced=*/false);
}

mpz_class count_balanced_colorings(const Multigraph& g, int k, double guard) {
  return count_impl(g, k, guard, /*balanced=*/true);
}

}  // namespace chromatic
