#pragma once

#include <optional>
#include <vector>

#include "minorkit/model.hpp"

namespace minorkit {

// v dominates w when v == w or they are adjacent.
bool dominates(const Graph & g, int v, int w);

// True when every vertex of g is dominated by some member of `set`.
// Validates the set (distinct, in range) and throws on violation.
bool is_dominating_set(const Graph & g, const std::vector<int> & set);

// A family of pairwise-disjoint dominating sets, each sorted ascending.
struct DomaticFamily {
    std::vector<std::vector<int>> sets;

    int order() const { return int(sets.size()); }
};

// Checks disjointness and that every set dominates g; names the first
// violated condition on failure.
Verdict verify_domatic_family(const Graph & g, const DomaticFamily & fam);

// Complete deterministic search for d disjoint dominating sets.  Labels
// vertices with a class (or none) under coverage propagation: a partial
// labeling dies as soon as some vertex can no longer be dominated in some
// class.  Branches on the unassigned vertex with the fewest viable labels;
// classes are interchangeable, so a vertex may only open class u + 1 when u
// classes are in use.  pre: n >= 1, d >= 1.
std::optional<DomaticFamily> find_disjoint_dominating_sets(const Graph & g, int d);

struct DomaticResult {
    int value = 0;
    DomaticFamily family;
};

// Largest d for which d disjoint dominating sets exist, with a witness.
// pre: n >= 1.
DomaticResult domatic_number(const Graph & g);

} // namespace minorkit
