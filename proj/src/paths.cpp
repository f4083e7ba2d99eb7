#include "minorkit/paths.hpp"

#include <stdexcept>
#include <string>

namespace minorkit {

DisjointPathsInstance make_paths_instance(Graph g,
                                          std::vector<std::pair<int, int>> pairs) {
    int n = g.vertex_count();
    Bitset seen(n);
    for (auto [s, t] : pairs) {
        for (int v : {s, t}) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("make_paths_instance: terminal " +
                                            std::to_string(v) + " out of range");
            if (seen.test(v))
                throw std::invalid_argument("make_paths_instance: terminal " +
                                            std::to_string(v) + " used twice");
            seen.set(v);
        }
    }
    return {std::move(g), std::move(pairs)};
}

Verdict verify_path_set(const DisjointPathsInstance & inst, const PathSet & ps) {
    const Graph & g = inst.graph;
    int k = inst.pair_count();
    if (int(ps.paths.size()) != k)
        return Verdict::violation("expected " + std::to_string(k) + " paths, got " +
                                  std::to_string(ps.paths.size()));
    Bitset used(g.vertex_count());
    for (int i = 0; i < k; ++i) {
        const auto & p = ps.paths[i];
        auto where = "path " + std::to_string(i);
        if (p.size() < 2) return Verdict::violation(where + " has fewer than two vertices");
        for (int v : p) {
            if (v < 0 || v >= g.vertex_count())
                return Verdict::violation(where + " contains out-of-range vertex " +
                                          std::to_string(v));
            if (used.test(v))
                return Verdict::violation(where + " reuses vertex " + std::to_string(v));
            used.set(v);
        }
        if (p.front() != inst.pairs[i].first || p.back() != inst.pairs[i].second)
            return Verdict::violation(where + " does not run from its source to its sink");
        for (std::size_t j = 0; j + 1 < p.size(); ++j)
            if (!g.adjacent(p[j], p[j + 1]))
                return Verdict::violation(where + " uses the non-edge " +
                                          std::to_string(p[j]) + " -- " +
                                          std::to_string(p[j + 1]));
    }
    return Verdict::valid();
}

namespace {

struct PathsSearch {
    const DisjointPathsInstance & inst;
    const Graph & g;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    Bitset used;              // vertices on committed or in-progress paths
    Bitset reserved;          // terminals of not-yet-routed pairs
    std::vector<std::vector<int>> routed;

    PathsSearch(const DisjointPathsInstance & i, std::uint64_t b)
        : inst(i), g(i.graph), k(i.pair_count()), budget(b),
          used(g.vertex_count()), reserved(g.vertex_count()) {
        for (auto [s, t] : inst.pairs) {
            reserved.set(s);
            reserved.set(t);
        }
    }

    // Is `to` reachable from `from` outside blocked?  (from itself may be
    // blocked; the walk just cannot re-enter blocked vertices.)
    bool reachable(int from, int to, const Bitset & blocked) const {
        if (from == to) return true;
        Bitset seen(g.vertex_count());
        seen.set(from);
        Bitset frontier = seen;
        while (frontier.any()) {
            Bitset nx(g.vertex_count());
            frontier.for_each([&](int v) { nx |= g.neighbors(v); });
            if (nx.test(to)) return true;
            nx.subtract(blocked);
            nx.subtract(seen);
            seen |= nx;
            frontier = nx;
        }
        return false;
    }

    // Every unrouted pair j must still connect through vertices that are
    // free and not another pair's terminal.  `head` is the live end of the
    // in-progress path for pair i (or -1 between pairs).
    bool pairs_still_linkable(int i, int head) const {
        for (int j = i; j < k; ++j) {
            auto [s, t] = inst.pairs[j];
            Bitset blocked = used;
            blocked |= reserved;
            blocked.reset(t);
            int from = (j == i && head >= 0) ? head : s;
            // s stays blocked as the walk's start; other terminals stay out.
            if (!reachable(from, t, blocked)) return false;
        }
        return true;
    }

    bool route(int i) {
        if (i == k) return true;
        auto [s, t] = inst.pairs[i];
        reserved.reset(s);
        reserved.reset(t);
        used.set(s);
        routed.push_back({s});
        if (pairs_still_linkable(i, s) && extend(i, s, t)) return true;
        routed.pop_back();
        used.reset(s);
        reserved.set(s);
        reserved.set(t);
        return false;
    }

    bool extend(int i, int head, int t) {
        if (out_of_budget) return false;
        if (++nodes >= budget) {
            out_of_budget = true;
            return false;
        }
        std::vector<int> cand = g.neighbors(head).to_vector();
        for (int v : cand) {
            if (used.test(v) || (reserved.test(v) && v != t)) continue;
            if (v == t) {
                routed.back().push_back(t);
                used.set(t);
                if (route(i + 1)) return true;
                used.reset(t);
                routed.back().pop_back();
                if (out_of_budget) return false;
                continue;
            }
            routed.back().push_back(v);
            used.set(v);
            if (pairs_still_linkable(i, v) && extend(i, v, t)) return true;
            used.reset(v);
            routed.back().pop_back();
            if (out_of_budget) return false;
        }
        return false;
    }
};

} // namespace

PathsSearchResult find_disjoint_paths(const DisjointPathsInstance & inst,
                                      SearchBudget budget) {
    PathsSearchResult res;
    if (inst.pair_count() == 0) {
        res.status = SearchStatus::found;
        res.paths = PathSet{};
        return res;
    }
    PathsSearch search(inst, budget.max_nodes);
    bool ok = search.route(0);
    res.nodes = search.nodes;
    if (ok) {
        PathSet ps{std::move(search.routed)};
        Verdict v = verify_path_set(inst, ps);
        if (!v.ok)
            throw std::logic_error("internal error: search produced invalid paths: " +
                                   v.reason);
        res.status = SearchStatus::found;
        res.paths = std::move(ps);
    } else if (search.out_of_budget) {
        res.status = SearchStatus::indeterminate;
    } else {
        res.status = SearchStatus::not_found;
    }
    return res;
}

} // namespace minorkit
