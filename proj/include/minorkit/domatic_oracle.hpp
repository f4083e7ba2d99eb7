#pragma once

#include "minorkit/graph.hpp"

namespace minorkit {

// Brute-force domatic number for tiny graphs, used to validate the search
// solver.  For d = n down to 1 it enumerates every assignment of vertices to
// d labeled sets (or to none) and tests the domination conditions directly;
// no degree bound or other theorem is assumed.
// pre: 1 <= n <= cap (and n <= 62 structurally).  Exponential in n.
int domatic_oracle(const Graph & g, int cap = 10);

} // namespace minorkit
