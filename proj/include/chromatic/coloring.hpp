#pragma once

#include <gmpxx.h>

#include <optional>

#include "chromatic/graphs.hpp"

namespace chromatic {

// Exact k-colorability via backtracking with saturation-degree vertex
// ordering. Tie-breaking among max-saturation vertices: max degree, then
// lowest index. Color symmetry is broken by allowing each new color only in
// increasing order. The instance is reduced first: vertices of degree < k
// are peeled off and connected components are solved independently.
bool is_k_colorable(const SimpleGraph& g, int k);

// Same decision with a wall-clock budget; nullopt when the budget is hit.
// budget_seconds <= 0 means unlimited.
std::optional<bool> is_k_colorable(const SimpleGraph& g, int k,
                                   double budget_seconds);

// Minimum k with is_k_colorable(g, k), bracketed by a greedy clique lower
// bound and a greedy-coloring upper bound.
int chromatic_number(const SimpleGraph& g);
std::optional<int> chromatic_number(const SimpleGraph& g,
                                    double budget_seconds);

// Exact number of assignments of k colors to the vertices of a multigraph
// with no monochromatic edge. A loop makes every assignment invalid.
// Plain exhaustive enumeration with pruning; the guard rejects instances
// with k^n > enumeration_guard.
inline constexpr double kDefaultEnumerationGuard = 1e9;

mpz_class count_colorings(const Multigraph& g, int k,
                          double enumeration_guard = kDefaultEnumerationGuard);

// Count restricted to balanced partitions (every color class of size
// exactly n/k; requires k | n).
mpz_class count_balanced_colorings(
    const Multigraph& g, int k,
    double enumeration_guard = kDefaultEnumerationGuard);

}  // namespace chromatic
