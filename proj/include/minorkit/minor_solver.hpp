#pragma once

#include <cstdint>
#include <optional>

#include "minorkit/model.hpp"

namespace minorkit {

// Which of the two complete engines may run.  `both` dovetails them and the
// first to finish decides; the single-engine modes exist to force a strategy
// (and let each engine be validated on its own).
enum class SearchEngine { both, branch_only, contraction_only };

// Search controls shared by the exact solvers.  max_nodes is the unit of
// work: one search-tree node expansion.  near_spanning_threshold selects when
// the contraction-enumeration engine joins the search (h >= n - threshold);
// it is ignored under contraction_only, which always runs that engine.
struct SearchBudget {
    std::uint64_t max_nodes = 10'000'000;
    int near_spanning_threshold = 4;
    SearchEngine engine = SearchEngine::both;
};

enum class SearchStatus { found, not_found, indeterminate };

struct MinorSearchResult {
    SearchStatus status = SearchStatus::indeterminate;
    std::optional<MinorModel> model; // engaged exactly when status == found
    std::uint64_t nodes = 0;         // search-tree nodes charged
};

// Largest h compatible with the edge count: h <= n and C(h, 2) <= m.  Any
// K_h minor needs at least C(h, 2) edges, so values above this are refuted
// without search.
int hadwiger_upper_bound(const Graph & g);

// Decides whether g has a K_h minor.  Deterministic: the same input always
// explores the same tree and returns the same witness.  Two complete engines
// run dovetailed in fixed node quanta and the first to finish decides:
//  - a branch-set extension search over vertices in id order, and
//  - for near-spanning h (n - h <= budget.near_spanning_threshold), an
//    exhaustive enumeration of <= n - h edge contractions followed by a
//    clique-subgraph test.
// Status is indeterminate only when the node budget is exhausted first.
MinorSearchResult find_clique_minor(const Graph & g, int h, SearchBudget budget = {});

enum class BoundKind { exact, lower_bound };

// Largest h for which a K_h minor was found, with its witness.  kind is exact
// when every refutation above the found value completed within the budget,
// and lower_bound when some of those searches ran out of budget.
struct HadwigerResult {
    BoundKind kind = BoundKind::exact;
    int value = 0;
    MinorModel model;
    std::uint64_t nodes = 0; // total across the descent
};

// pre: g has at least one vertex.
HadwigerResult hadwiger_number(const Graph & g, SearchBudget budget = {});

} // namespace minorkit
