#include "minorkit/reductions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace minorkit {

namespace {

[[noreturn]] void bad(const std::string & msg) { throw std::invalid_argument(msg); }

} // namespace

std::string layer_label_to_string(const LayerLabel & lab) {
    switch (lab.kind) {
        case LayerKind::top: return "T" + std::to_string(lab.i);
        case LayerKind::mid: return "M" + std::to_string(lab.i);
        case LayerKind::bot:
            return "B" + std::to_string(lab.i) + "." + std::to_string(lab.j);
    }
    bad("layer_label_to_string: bad kind");
}

LayerLabel layer_label_from_string(const std::string & text) {
    auto fail = [&]() -> LayerLabel { bad("malformed layer label '" + text + "'"); };
    if (text.size() < 2) return fail();
    char kind = text[0];
    std::size_t pos = 1;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) return -1;
        return std::stoi(text.substr(start, pos - start));
    };
    int i = read_int();
    if (i <= 0) return fail();
    if (kind == 'T' || kind == 'M') {
        if (pos != text.size()) return fail();
        return {kind == 'T' ? LayerKind::top : LayerKind::mid, i, 0};
    }
    if (kind != 'B' || pos >= text.size() || text[pos] != '.') return fail();
    ++pos;
    int j = read_int();
    if (j <= 0 || pos != text.size()) return fail();
    return {LayerKind::bot, i, j};
}

LayeredInstance build_layered_instance(const Graph & g, int d) {
    int n = g.vertex_count();
    if (n < 1) bad("build_layered_instance: source graph must have at least one vertex");
    if (d < 1) bad("build_layered_instance: d must be >= 1");

    ReductionLabeling lab;
    lab.n = n;
    lab.d = d;
    lab.h = n * (n + 1) + d;
    lab.labels.reserve(lab.vertex_count());
    for (int i = 1; i <= d; ++i) lab.labels.push_back({LayerKind::top, i, 0});
    for (int i = 1; i <= n; ++i) lab.labels.push_back({LayerKind::mid, i, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) lab.labels.push_back({LayerKind::bot, i, j});

    std::vector<Edge> edges;
    for (int a = 1; a <= d; ++a) {
        for (int b = a + 1; b <= d; ++b)
            edges.emplace_back(lab.top_vertex(a), lab.top_vertex(b));
        for (int i = 1; i <= n; ++i)
            edges.emplace_back(lab.top_vertex(a), lab.mid_vertex(i));
    }
    for (int i = 1; i <= n; ++i)
        for (int row = 1; row <= n; ++row) {
            if (i != row && !g.adjacent(i - 1, row - 1)) continue; // v_i dominates v_row?
            for (int j = 1; j <= n + 1; ++j)
                edges.emplace_back(lab.mid_vertex(i), lab.bot_vertex(row, j));
        }
    int nb = n * (n + 1);
    for (int a = 0; a < nb; ++a)
        for (int b = a + 1; b < nb; ++b)
            edges.emplace_back(d + n + a, d + n + b);

    return {make_graph(lab.vertex_count(), edges), std::move(lab)};
}

Verdict audit_reduction_structure(const Graph & g, int d, const Graph & g_prime,
                                  const ReductionLabeling & labeling) {
    int n = g.vertex_count();
    if (labeling.n != n || labeling.d != d)
        return Verdict::violation("labeling parameters do not match the source instance");
    if (labeling.h != n * (n + 1) + d)
        return Verdict::violation("target order is not n(n+1)+d");
    if (g_prime.vertex_count() != labeling.vertex_count() ||
        int(labeling.labels.size()) != labeling.vertex_count())
        return Verdict::violation("vertex count is not d + n + n(n+1)");

    ReductionLabeling expect;
    expect.n = n;
    expect.d = d;
    for (int i = 1; i <= d; ++i) expect.labels.push_back({LayerKind::top, i, 0});
    for (int i = 1; i <= n; ++i) expect.labels.push_back({LayerKind::mid, i, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n + 1; ++j) expect.labels.push_back({LayerKind::bot, i, j});
    for (int v = 0; v < labeling.vertex_count(); ++v)
        if (!(labeling.labels[v] == expect.labels[v]))
            return Verdict::violation("vertex " + std::to_string(v) +
                                      " is labeled " +
                                      layer_label_to_string(labeling.labels[v]) +
                                      ", expected " +
                                      layer_label_to_string(expect.labels[v]));

    auto expected_edge = [&](const LayerLabel & a, const LayerLabel & b) {
        if (a.kind == LayerKind::top && b.kind == LayerKind::top) return true;
        if (a.kind == LayerKind::bot && b.kind == LayerKind::bot) return true;
        if (a.kind == LayerKind::mid && b.kind == LayerKind::mid) return false;
        if ((a.kind == LayerKind::top && b.kind == LayerKind::mid) ||
            (a.kind == LayerKind::mid && b.kind == LayerKind::top))
            return true;
        if ((a.kind == LayerKind::top && b.kind == LayerKind::bot) ||
            (a.kind == LayerKind::bot && b.kind == LayerKind::top))
            return false;
        const LayerLabel & m = a.kind == LayerKind::mid ? a : b;
        const LayerLabel & bt = a.kind == LayerKind::bot ? a : b;
        return m.i == bt.i || g.adjacent(m.i - 1, bt.i - 1);
    };
    int nv = labeling.vertex_count();
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            bool want = expected_edge(labeling.labels[u], labeling.labels[v]);
            if (g_prime.adjacent(u, v) != want)
                return Verdict::violation(
                    std::string(want ? "missing" : "unexpected") + " edge " +
                    layer_label_to_string(labeling.labels[u]) + " -- " +
                    layer_label_to_string(labeling.labels[v]));
        }

    for (int i = 1; i <= n; ++i) {
        int want = (g.degree(i - 1) + 1) * (n + 1) + d;
        int got = g_prime.degree(labeling.mid_vertex(i));
        if (got != want)
            return Verdict::violation("degree of M" + std::to_string(i) + " is " +
                                      std::to_string(got) + ", expected " +
                                      std::to_string(want));
    }
    return Verdict::valid();
}

StripResult strip_universal_vertices(const Graph & g, int d) {
    if (g.vertex_count() < 1)
        bad("strip_universal_vertices: graph must have at least one vertex");
    StripResult out;
    out.core = g;
    out.d_core = d;
    out.core_to_original.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out.core_to_original[v] = v;

    while (true) {
        int c = out.core.vertex_count();
        if (c == 0) break;
        int u = -1;
        for (int v = 0; v < c && u < 0; ++v)
            if (out.core.degree(v) == c - 1) u = v;
        if (u < 0) break;
        out.stripped.push_back(out.core_to_original[u]);
        out.core_to_original.erase(out.core_to_original.begin() + u);
        out.core = delete_vertex(out.core, u);
        --out.d_core;
    }
    return out;
}

DomaticReduction reduce_domatic_to_hadwiger(const Graph & g, int d) {
    if (g.vertex_count() < 1)
        bad("reduce_domatic_to_hadwiger: graph must have at least one vertex");
    if (d < 1) bad("reduce_domatic_to_hadwiger: d must be >= 1");

    DomaticReduction red;
    red.strip = strip_universal_vertices(g, d);
    const Graph & core = red.strip.core;

    auto trivial = [&](bool positive) {
        red.kind = positive ? DomaticReduction::Kind::trivially_positive
                            : DomaticReduction::Kind::trivially_negative;
        red.g_prime = complete_graph(1);
        red.h = positive ? 1 : 2;
        return red;
    };
    // Each stripped vertex dominates everything, so it absorbs one required set.
    if (red.strip.d_core <= 0) return trivial(true);
    // Nothing left to partition, yet sets are still owed.
    if (core.vertex_count() == 0) return trivial(false);

    LayeredInstance inst = build_layered_instance(core, red.strip.d_core);
    red.kind = DomaticReduction::Kind::layered;
    red.g_prime = std::move(inst.g_prime);
    red.labeling = std::move(inst.labeling);
    red.h = red.labeling.h;
    return red;
}

MinorModel domatic_witness_to_minor_model(const Graph & core,
                                          const DomaticFamily & family,
                                          const ReductionLabeling & labeling,
                                          const Graph & g_prime) {
    if (labeling.n != core.vertex_count())
        bad("domatic_witness_to_minor_model: labeling does not match the core graph");
    if (family.order() != labeling.d)
        bad("domatic_witness_to_minor_model: family has " +
            std::to_string(family.order()) + " sets, labeling expects " +
            std::to_string(labeling.d));
    Verdict fam_ok = verify_domatic_family(core, family);
    if (!fam_ok.ok)
        bad("domatic_witness_to_minor_model: invalid family: " + fam_ok.reason);

    MinorModel model;
    for (int c = 1; c <= labeling.d; ++c) {
        std::vector<int> set{labeling.top_vertex(c)};
        for (int v : family.sets[c - 1]) set.push_back(labeling.mid_vertex(v + 1));
        std::sort(set.begin(), set.end());
        model.branch_sets.push_back(std::move(set));
    }
    for (int i = 1; i <= labeling.n; ++i)
        for (int j = 1; j <= labeling.n + 1; ++j)
            model.branch_sets.push_back({labeling.bot_vertex(i, j)});

    Verdict ok = verify_clique_minor_model(g_prime, model);
    if (!ok.ok)
        throw std::logic_error("internal error: mapped model is invalid: " + ok.reason);
    return model;
}

DomaticFamily minor_model_to_domatic_witness(const Graph & g_prime,
                                             const MinorModel & model,
                                             const ReductionLabeling & labeling,
                                             const Graph & core) {
    if (labeling.n != core.vertex_count() ||
        g_prime.vertex_count() != labeling.vertex_count())
        bad("minor_model_to_domatic_witness: labeling does not match the graphs");
    if (model.order() != labeling.h)
        bad("minor_model_to_domatic_witness: model has " +
            std::to_string(model.order()) + " sets, expected h = " +
            std::to_string(labeling.h));
    Verdict ok = verify_clique_minor_model(g_prime, model);
    if (!ok.ok) bad("minor_model_to_domatic_witness: invalid model: " + ok.reason);

    std::vector<int> set_of(g_prime.vertex_count(), -1);
    for (int s = 0; s < model.order(); ++s)
        for (int v : model.branch_sets[s]) set_of[v] = s;

    DomaticFamily family;
    for (int c = 1; c <= labeling.d; ++c) {
        int s = set_of[labeling.top_vertex(c)];
        if (s < 0)
            bad("minor_model_to_domatic_witness: model does not use top vertex T" +
                std::to_string(c));
        std::vector<int> dom;
        for (int v : model.branch_sets[s])
            if (labeling.labels[v].kind == LayerKind::mid)
                dom.push_back(labeling.labels[v].i - 1);
        std::sort(dom.begin(), dom.end());
        family.sets.push_back(std::move(dom));
    }
    Verdict fam_ok = verify_domatic_family(core, family);
    if (!fam_ok.ok)
        bad("minor_model_to_domatic_witness: extracted family is invalid (" +
            fam_ok.reason + "); the model does not come from this instance family");
    return family;
}

PathsReduction reduce_paths_to_hadwiger(const DisjointPathsInstance & inst) {
    int n = inst.graph.vertex_count();
    int k = inst.pair_count();
    if (n < 1) bad("reduce_paths_to_hadwiger: graph must have at least one vertex");

    PathsReduction red;
    red.map.n = n;
    red.map.k = k;
    red.map.h = n + 1;
    red.h = n + 1;
    red.map.terminal_ids = inst.pairs;

    int extra = n + 1 - 2 * k; // clique vertices that are not terminals
    int total = n + extra;
    for (auto [s, t] : inst.pairs) {
        red.map.clique_vertices.push_back(s);
        red.map.clique_vertices.push_back(t);
    }
    for (int v = n; v < total; ++v) red.map.clique_vertices.push_back(v);
    std::sort(red.map.clique_vertices.begin(), red.map.clique_vertices.end());

    std::vector<std::vector<bool>> adj(total, std::vector<bool>(total, false));
    for (auto [u, v] : inst.graph.edges()) adj[u][v] = adj[v][u] = true;
    const auto & kv = red.map.clique_vertices;
    for (std::size_t a = 0; a < kv.size(); ++a)
        for (std::size_t b = a + 1; b < kv.size(); ++b)
            adj[kv[a]][kv[b]] = adj[kv[b]][kv[a]] = true;
    for (auto [s, t] : inst.pairs)
        if (!inst.graph.adjacent(s, t)) adj[s][t] = adj[t][s] = false;

    std::vector<Edge> edges;
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (adj[u][v]) edges.emplace_back(u, v);
    red.g_prime = make_graph(total, edges);
    return red;
}

MinorModel paths_witness_to_minor_model(const DisjointPathsInstance & inst,
                                        const PathSet & paths,
                                        const PathsReduction & red) {
    Verdict ok = verify_path_set(inst, paths);
    if (!ok.ok) bad("paths_witness_to_minor_model: invalid path set: " + ok.reason);

    std::vector<std::vector<int>> absorb(red.g_prime.vertex_count());
    for (int i = 0; i < inst.pair_count(); ++i) {
        const auto & p = paths.paths[i];
        int s = inst.pairs[i].first;
        for (std::size_t j = 1; j + 1 < p.size(); ++j) absorb[s].push_back(p[j]);
    }
    MinorModel model;
    for (int v : red.map.clique_vertices) {
        std::vector<int> set{v};
        for (int w : absorb[v]) set.push_back(w);
        std::sort(set.begin(), set.end());
        model.branch_sets.push_back(std::move(set));
    }
    Verdict mok = verify_clique_minor_model(red.g_prime, model);
    if (!mok.ok)
        throw std::logic_error("internal error: mapped model is invalid: " + mok.reason);
    return model;
}

namespace {

// Shortest path between two vertices inside one branch set, walking only
// edges of g with both endpoints in the set.  Deterministic: breadth-first,
// neighbors in ascending order.
std::vector<int> path_within(const Graph & g, const std::vector<int> & set_members,
                             int from, int to) {
    Bitset inside(g.vertex_count());
    for (int v : set_members) inside.set(v);
    std::vector<int> parent(g.vertex_count(), -1);
    std::deque<int> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        Bitset nbr = g.neighbors(u);
        nbr &= inside;
        nbr.for_each([&](int v) {
            if (parent[v] < 0) {
                parent[v] = u;
                queue.push_back(v);
            }
        });
    }
    if (parent[to] < 0)
        throw std::logic_error("internal error: branch set not connected on walk");
    std::vector<int> rev;
    for (int v = to; v != from; v = parent[v]) rev.push_back(v);
    rev.push_back(from);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

} // namespace

PathSet minor_model_to_paths_witness(const Graph & g_prime, const MinorModel & model,
                                     const PathsReductionMap & map,
                                     const DisjointPathsInstance & inst) {
    if (model.order() != map.h)
        bad("minor_model_to_paths_witness: model has " + std::to_string(model.order()) +
            " sets, expected h = " + std::to_string(map.h));
    Verdict ok = verify_clique_minor_model(g_prime, model);
    if (!ok.ok) bad("minor_model_to_paths_witness: invalid model: " + ok.reason);

    std::vector<int> set_of(g_prime.vertex_count(), -1);
    for (int s = 0; s < model.order(); ++s)
        for (int v : model.branch_sets[s]) set_of[v] = s;

    // Each branch set must hold exactly one clique vertex.
    std::vector<int> clique_count(model.order(), 0);
    for (int v : map.clique_vertices) {
        if (set_of[v] < 0)
            bad("minor_model_to_paths_witness: model does not use clique vertex " +
                std::to_string(v));
        ++clique_count[set_of[v]];
    }
    for (int s = 0; s < model.order(); ++s)
        if (clique_count[s] != 1)
            bad("minor_model_to_paths_witness: branch set " + std::to_string(s) +
                " holds " + std::to_string(clique_count[s]) +
                " clique vertices, expected exactly one");

    PathSet out;
    for (int i = 0; i < map.k; ++i) {
        auto [s, t] = map.terminal_ids[i];
        const auto & sa = model.branch_sets[set_of[s]];
        const auto & sb = model.branch_sets[set_of[t]];
        int ea = -1, eb = -1;
        for (int a : sa) {
            for (int b : sb)
                if (g_prime.adjacent(a, b)) {
                    ea = a;
                    eb = b;
                    break;
                }
            if (ea >= 0) break;
        }
        if (ea < 0)
            throw std::logic_error("internal error: adjacent branch sets share no edge");
        std::vector<int> path = path_within(g_prime, sa, s, ea);
        std::vector<int> tail = path_within(g_prime, sb, eb, t);
        path.insert(path.end(), tail.begin(), tail.end());
        out.paths.push_back(std::move(path));
    }
    Verdict pok = verify_path_set(inst, out);
    if (!pok.ok)
        bad("minor_model_to_paths_witness: extracted paths are invalid (" + pok.reason +
            "); the model does not come from this instance");
    return out;
}

} // namespace minorkit
