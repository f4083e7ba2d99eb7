#pragma once

#include "minorkit/graph.hpp"

namespace minorkit {

// Brute-force Hadwiger number for tiny graphs, used to validate the search
// solver.  It shares no code with the solver: for h = n down to 1 it
// enumerates every assignment of vertices to h labeled groups (or to none)
// and tests the minor-model conditions directly from their definition.
// pre: 1 <= n <= cap (and n <= 62 structurally).  Exponential in n.
int hadwiger_oracle(const Graph & g, int cap = 9);

} // namespace minorkit
