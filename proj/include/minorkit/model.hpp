#pragma once

#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

// Result of a structural check: ok, or a violation with a human-readable
// reason naming the first offending object.
struct Verdict {
    bool ok = false;
    std::string reason;

    static Verdict valid() { return {true, ""}; }
    static Verdict violation(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

// A clique-minor model: h branch sets, each a sorted list of vertex ids.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;

    int order() const { return int(branch_sets.size()); }
};

// Checks that the branch sets witness a K_h minor in g, for h = model.order():
// every set nonempty, sets pairwise disjoint, each set connected, and every
// pair of sets joined by at least one edge.  The reason string of a failed
// verdict names the first violated condition.
Verdict verify_clique_minor_model(const Graph & g, const MinorModel & model);

} // namespace minorkit
