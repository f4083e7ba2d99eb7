#include "minorkit/graph.hpp"

#include <random>
#include <stdexcept>

namespace minorkit {

namespace {

[[noreturn]] void bad(const std::string & msg) { throw std::invalid_argument(msg); }

void check_vertex(int v, int n, const std::string & what) {
    if (v < 0 || v >= n)
        bad(what + ": vertex " + std::to_string(v) + " out of range [0, " +
            std::to_string(n) + ")");
}

} // namespace

Graph make_graph(int n, const std::vector<Edge> & edges) {
    if (n < 0) bad("make_graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.rows_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        check_vertex(u, n, "make_graph");
        check_vertex(v, n, "make_graph");
        if (u == v) bad("make_graph: self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].test(v))
            bad("make_graph: duplicate edge " + std::to_string(u) + " -- " +
                std::to_string(v));
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        ++g.m_;
    }
    return g;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        rows_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph empty_graph(int n) { return make_graph(n, {}); }

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

Graph path_graph(int n) {
    if (n < 1) bad("path_graph: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) bad("cycle_graph: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return make_graph(n, e);
}

Graph star_graph(int n) {
    if (n < 1) bad("star_graph: need n >= 1");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return make_graph(n, e);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) bad("random_graph: negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) bad("random_graph: p must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> e;
    // Draw a uniform double from the top 53 bits of the raw output so the
    // stream of decisions is identical across standard library
    // implementations (std::uniform_real_distribution is not portable).
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = double(rng() >> 11) * 0x1.0p-53;
            if (x < p) e.emplace_back(u, v);
        }
    return make_graph(n, e);
}

Graph generate_graph(const std::string & kind, int n, double p, std::uint64_t seed) {
    if (kind == "empty") return empty_graph(n);
    if (kind == "complete") return complete_graph(n);
    if (kind == "path") return path_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "star") return star_graph(n);
    if (kind == "random") return random_graph(n, p, seed);
    bad("generate_graph: unknown kind '" + kind + "'");
}

void validate_vertex_set(const Graph & g, const std::vector<int> & vs,
                         const std::string & what) {
    Bitset seen(g.vertex_count());
    for (int v : vs) {
        check_vertex(v, g.vertex_count(), what);
        if (seen.test(v)) bad(what + ": duplicate vertex " + std::to_string(v));
        seen.set(v);
    }
}

bool is_connected_subset(const Graph & g, const Bitset & vs) {
    int start = vs.first();
    if (start < 0) return false;
    Bitset reached(g.vertex_count());
    reached.set(start);
    Bitset frontier = reached;
    while (frontier.any()) {
        Bitset next(g.vertex_count());
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next &= vs;
        next.subtract(reached);
        reached |= next;
        frontier = next;
    }
    Bitset inside = reached;
    inside &= vs;
    return inside == vs;
}

bool is_connected_subset(const Graph & g, const std::vector<int> & vs) {
    validate_vertex_set(g, vs, "is_connected_subset");
    Bitset mask(g.vertex_count());
    for (int v : vs) mask.set(v);
    return is_connected_subset(g, mask);
}

namespace {

// Rebuilds a graph through a surjective id map keep[old] -> new (or -1 to
// drop); merged endpoints never produce loops or duplicates because the
// result is assembled through bitsets.
Graph remap(const Graph & g, const std::vector<int> & to_new, int new_n) {
    std::vector<Bitset> rows(new_n, Bitset(new_n));
    for (int u = 0; u < g.vertex_count(); ++u) {
        int nu = to_new[u];
        if (nu < 0) continue;
        g.neighbors(u).for_each([&](int v) {
            int nv = to_new[v];
            if (nv >= 0 && nu != nv) rows[nu].set(nv);
        });
    }
    std::vector<Edge> e;
    for (int u = 0; u < new_n; ++u)
        rows[u].for_each([&](int v) {
            if (u < v) e.emplace_back(u, v);
        });
    return make_graph(new_n, e);
}

} // namespace

Graph contract_edge(const Graph & g, int u, int v) {
    check_vertex(u, g.vertex_count(), "contract_edge");
    check_vertex(v, g.vertex_count(), "contract_edge");
    if (!g.adjacent(u, v)) bad("contract_edge: vertices not adjacent");
    int lo = std::min(u, v), hi = std::max(u, v);
    std::vector<int> to_new(g.vertex_count());
    for (int w = 0; w < g.vertex_count(); ++w)
        to_new[w] = (w == hi) ? lo : (w > hi ? w - 1 : w);
    return remap(g, to_new, g.vertex_count() - 1);
}

Graph delete_vertex(const Graph & g, int v) {
    check_vertex(v, g.vertex_count(), "delete_vertex");
    std::vector<int> to_new(g.vertex_count());
    for (int w = 0; w < g.vertex_count(); ++w)
        to_new[w] = (w == v) ? -1 : (w > v ? w - 1 : w);
    return remap(g, to_new, g.vertex_count() - 1);
}

Graph delete_edge(const Graph & g, int u, int v) {
    check_vertex(u, g.vertex_count(), "delete_edge");
    check_vertex(v, g.vertex_count(), "delete_edge");
    if (!g.adjacent(u, v)) bad("delete_edge: edge not present");
    auto e = g.edges();
    std::erase(e, Edge{std::min(u, v), std::max(u, v)});
    return make_graph(g.vertex_count(), e);
}

} // namespace minorkit
