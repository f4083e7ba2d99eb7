#include "minorkit/domatic.hpp"

#include <algorithm>
#include <stdexcept>

namespace minorkit {

bool dominates(const Graph & g, int v, int w) {
    if (v < 0 || v >= g.vertex_count() || w < 0 || w >= g.vertex_count())
        throw std::invalid_argument("dominates: vertex out of range");
    return v == w || g.adjacent(v, w);
}

bool is_dominating_set(const Graph & g, const std::vector<int> & set) {
    validate_vertex_set(g, set, "is_dominating_set");
    int n = g.vertex_count();
    Bitset covered(n);
    for (int v : set) {
        covered.set(v);
        covered |= g.neighbors(v);
    }
    return covered.count() == n;
}

Verdict verify_domatic_family(const Graph & g, const DomaticFamily & fam) {
    int n = g.vertex_count();
    Bitset used(n);
    for (int i = 0; i < fam.order(); ++i) {
        const auto & set = fam.sets[i];
        if (set.empty())
            return Verdict::violation("set " + std::to_string(i) + " is empty");
        Bitset covered(n), mine(n);
        for (int v : set) {
            if (v < 0 || v >= n)
                return Verdict::violation("set " + std::to_string(i) +
                                          " contains out-of-range vertex " +
                                          std::to_string(v));
            if (mine.test(v))
                return Verdict::violation("set " + std::to_string(i) +
                                          " repeats vertex " + std::to_string(v));
            if (used.test(v))
                return Verdict::violation("vertex " + std::to_string(v) +
                                          " appears in two sets");
            mine.set(v);
            used.set(v);
            covered.set(v);
            covered |= g.neighbors(v);
        }
        if (covered.count() != n) {
            Bitset missing(n);
            for (int v = 0; v < n; ++v)
                if (!covered.test(v)) missing.set(v);
            return Verdict::violation("set " + std::to_string(i) +
                                      " does not dominate vertex " +
                                      std::to_string(missing.first()));
        }
    }
    return Verdict::valid();
}

namespace {

// Backtracking state for the class-labeling search.
struct DomaticSearch {
    const Graph & g;
    int n, d;
    std::vector<int> label;              // -1 unassigned, 0 unused, 1..d class
    std::vector<std::vector<int>> cand;  // cand[w][c-1] = |{u in N[w]: label -1 or c}|
    std::vector<std::vector<int>> covc;  // covc[w][c-1] = assigned dominators
    int uncovered;                       // (w, c) pairs with covc == 0
    int used_classes = 0;

    DomaticSearch(const Graph & g_, int d_)
        : g(g_), n(g_.vertex_count()), d(d_), label(n, -1),
          cand(n, std::vector<int>(d)), covc(n, std::vector<int>(d, 0)),
          uncovered(n * d) {
        for (int w = 0; w < n; ++w)
            std::fill(cand[w].begin(), cand[w].end(), g.degree(w) + 1);
    }

    // Applies label c to v; returns false (after fully applying) when some
    // (w, class) pair has no remaining candidate dominators.
    bool assign(int v, int c) {
        label[v] = c;
        bool ok = true;
        auto touch = [&](int w) {
            for (int cc = 1; cc <= d; ++cc) {
                if (cc == c) {
                    if (covc[w][cc - 1]++ == 0) --uncovered;
                } else {
                    if (--cand[w][cc - 1] == 0 && covc[w][cc - 1] == 0) ok = false;
                }
            }
        };
        touch(v);
        g.neighbors(v).for_each(touch);
        return ok;
    }

    void unassign(int v) {
        int c = label[v];
        auto untouch = [&](int w) {
            for (int cc = 1; cc <= d; ++cc) {
                if (cc == c) {
                    if (--covc[w][cc - 1] == 0) ++uncovered;
                } else {
                    ++cand[w][cc - 1];
                }
            }
        };
        untouch(v);
        g.neighbors(v).for_each(untouch);
        label[v] = -1;
    }

    // Would assigning c to v immediately strand some (w, class) pair?
    bool feasible(int v, int c) {
        bool ok = true;
        auto probe = [&](int w) {
            for (int cc = 1; cc <= d && ok; ++cc)
                if (cc != c && cand[w][cc - 1] == 1 && covc[w][cc - 1] == 0) ok = false;
        };
        probe(v);
        if (ok) g.neighbors(v).for_each([&](int w) { if (ok) probe(w); });
        return ok;
    }

    bool solve() {
        if (uncovered == 0) return true; // unassigned vertices stay unused
        // most-constrained vertex first
        int best = -1, best_opts = d + 2;
        for (int v = 0; v < n; ++v) {
            if (label[v] != -1) continue;
            int cap = std::min(d, used_classes + 1);
            int opts = feasible(v, 0) ? 1 : 0;
            for (int c = 1; c <= cap; ++c)
                if (feasible(v, c)) ++opts;
            if (opts < best_opts) {
                best_opts = opts;
                best = v;
            }
        }
        if (best < 0) return false; // everything assigned but coverage missing
        if (best_opts == 0) return false;
        int cap = std::min(d, used_classes + 1);
        for (int c = 1; c <= cap; ++c) {
            int prev_used = used_classes;
            used_classes = std::max(used_classes, c);
            if (assign(best, c) && solve()) return true;
            unassign(best);
            used_classes = prev_used;
        }
        if (assign(best, 0) && solve()) return true;
        unassign(best);
        return false;
    }
};

} // namespace

std::optional<DomaticFamily> find_disjoint_dominating_sets(const Graph & g, int d) {
    int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("find_disjoint_dominating_sets: graph must have "
                                    "at least one vertex");
    if (d < 1) throw std::invalid_argument("find_disjoint_dominating_sets: d must be >= 1");
    if (d == 1) {
        DomaticFamily fam;
        fam.sets.emplace_back();
        for (int v = 0; v < n; ++v) fam.sets[0].push_back(v);
        return fam;
    }
    // Each vertex w is dominated by at most deg(w) + 1 disjoint sets, so more
    // than min_degree + 1 sets are impossible (classical bound, used here
    // only as a shortcut; the search below is complete without it).
    if (d > g.min_degree() + 1) return std::nullopt;

    DomaticSearch search(g, d);
    if (!search.solve()) return std::nullopt;
    DomaticFamily fam;
    fam.sets.assign(d, {});
    for (int v = 0; v < n; ++v)
        if (search.label[v] >= 1) fam.sets[search.label[v] - 1].push_back(v);
    Verdict check = verify_domatic_family(g, fam);
    if (!check.ok || fam.order() != d)
        throw std::logic_error("internal error: search produced an invalid family: " +
                               check.reason);
    return fam;
}

DomaticResult domatic_number(const Graph & g) {
    int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("domatic_number: graph must have at least one vertex");
    for (int d = std::min(n, g.min_degree() + 1); d >= 1; --d)
        if (auto fam = find_disjoint_dominating_sets(g, d)) return {d, std::move(*fam)};
    return {1, {}}; // unreachable: d = 1 always succeeds
}

} // namespace minorkit
