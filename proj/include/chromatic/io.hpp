#pragma once

#include <iosfwd>

#include "chromatic/graphs.hpp"

namespace chromatic {

// Edge-list interchange format: first line "n m", then one "u v" pair per
// line. Loops and repeated pairs are legal (multigraph); use simplify() to
// obtain a simple graph.
void write_edge_list(const Multigraph& g, std::ostream& out);
void write_edge_list(const SimpleGraph& g, std::ostream& out);
Multigraph read_edge_list(std::istream& in);

}  // namespace chromatic
