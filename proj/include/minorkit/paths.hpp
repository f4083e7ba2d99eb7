#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minorkit/minor_solver.hpp"
#include "minorkit/model.hpp"

namespace minorkit {

// A graph plus k terminal pairs (s_i, t_i).  All 2k terminals are distinct.
struct DisjointPathsInstance {
    Graph graph;
    std::vector<std::pair<int, int>> pairs;

    int pair_count() const { return int(pairs.size()); }
};

// Validates terminal distinctness and range; throws std::invalid_argument.
DisjointPathsInstance make_paths_instance(Graph g,
                                          std::vector<std::pair<int, int>> pairs);

// One path per terminal pair, given as the full vertex sequence s_i .. t_i.
struct PathSet {
    std::vector<std::vector<int>> paths;
};

// Checks that path i runs from s_i to t_i along edges, repeats no vertex, and
// that the paths are pairwise vertex-disjoint.
Verdict verify_path_set(const DisjointPathsInstance & inst, const PathSet & ps);

struct PathsSearchResult {
    SearchStatus status = SearchStatus::indeterminate;
    std::optional<PathSet> paths; // engaged exactly when status == found
    std::uint64_t nodes = 0;
};

// Complete deterministic backtracking search: routes the pairs in input
// order, extending the current path by its lowest-id admissible neighbor
// first.  A branch is cut when some unrouted pair becomes separated in the
// graph minus the vertices already committed.  Status is indeterminate only
// when budget.max_nodes is exhausted.
PathsSearchResult find_disjoint_paths(const DisjointPathsInstance & inst,
                                      SearchBudget budget = {});

} // namespace minorkit
