#include "doctest.h"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorkit/domatic.hpp"
#include "minorkit/dot.hpp"
#include "minorkit/formats.hpp"
#include "minorkit/minor_solver.hpp"
#include "minorkit/reductions.hpp"

using namespace minorkit;

namespace {

Graph wheel6() { // hub 0 joined to the 5-cycle 1..5
    return make_graph(6, {{0, 1},
                          {0, 2},
                          {0, 3},
                          {0, 4},
                          {0, 5},
                          {1, 2},
                          {2, 3},
                          {3, 4},
                          {4, 5},
                          {5, 1}});
}

long long layered_edge_count(const Graph & g, int d) {
    long long n = g.vertex_count(), m = g.edge_count();
    long long top = d * (d - 1) / 2;
    long long bot_n = n * (n + 1);
    long long bot = bot_n * (bot_n - 1) / 2;
    long long top_mid = d * n;
    long long mid_bot = (n + 1) * (2 * m + n); // sum over i of (deg_i + 1)(n + 1)
    return top + bot + top_mid + mid_bot;
}

} // namespace

TEST_CASE("the layered construction on the 5-cycle") {
    LayeredInstance inst = build_layered_instance(cycle_graph(5), 2);
    CHECK(inst.g_prime.vertex_count() == 37);
    CHECK(inst.g_prime.edge_count() == 536);
    CHECK(inst.h() == 32);
    CHECK(inst.labeling.vertex_count() == 37);
    CHECK(audit_reduction_structure(cycle_graph(5), 2, inst.g_prime, inst.labeling).ok);

    // the middle-degree identity: (deg + 1)(n + 1) + d with deg = 2, n = 5, d = 2
    for (int i = 1; i <= 5; ++i)
        CHECK(inst.g_prime.degree(inst.labeling.mid_vertex(i)) == 20);

    // layer boundaries in id order: top, middle, bottom
    CHECK(inst.labeling.top_vertex(1) == 0);
    CHECK(inst.labeling.mid_vertex(1) == 2);
    CHECK(inst.labeling.bot_vertex(1, 1) == 7);
    CHECK(inst.labeling.bot_vertex(5, 6) == 36);

    // no top-bottom edge, complete top-middle join
    CHECK_FALSE(inst.g_prime.adjacent(0, 7));
    CHECK(inst.g_prime.adjacent(0, 1));
    CHECK(inst.g_prime.adjacent(1, 6));
}

TEST_CASE("the layered construction accepts sources with a universal vertex") {
    LayeredInstance inst = build_layered_instance(path_graph(3), 2);
    CHECK(inst.g_prime.vertex_count() == 17); // 12 + 3 + 2
    CHECK(inst.h() == 14);
    CHECK(audit_reduction_structure(path_graph(3), 2, inst.g_prime, inst.labeling).ok);
    CHECK(inst.g_prime.edge_count() == layered_edge_count(path_graph(3), 2));

    CHECK_THROWS_AS(build_layered_instance(path_graph(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(build_layered_instance(empty_graph(0), 1), std::invalid_argument);
}

TEST_CASE("size identities hold across seeded sources") {
    for (int n : {2, 3, 4, 5}) {
        for (int d : {1, 2, 3}) {
            for (std::uint64_t seed : {10u, 20u}) {
                Graph g = random_graph(n, 0.3 + 0.2 * (seed / 10 % 3), seed + n + d);
                CAPTURE(format_graph6(g));
                CAPTURE(d);
                LayeredInstance inst = build_layered_instance(g, d);
                REQUIRE(inst.g_prime.vertex_count() == n * n + 2 * n + d);
                REQUIRE(inst.h() == n * (n + 1) + d);
                REQUIRE(inst.g_prime.edge_count() == layered_edge_count(g, d));
                REQUIRE(audit_reduction_structure(g, d, inst.g_prime, inst.labeling).ok);
            }
        }
    }
}

TEST_CASE("the audit rejects structural tampering") {
    Graph g = cycle_graph(5);
    LayeredInstance inst = build_layered_instance(g, 2);
    const ReductionLabeling & lab = inst.labeling;

    // a top-bottom edge must not exist
    Graph plus = make_graph(37, [&] {
        auto e = inst.g_prime.edges();
        e.push_back({lab.top_vertex(1), lab.bot_vertex(1, 1)});
        return e;
    }());
    Verdict v1 = audit_reduction_structure(g, 2, plus, lab);
    CHECK_FALSE(v1.ok);

    // dropping a top-middle edge breaks the complete join
    Graph minus = delete_edge(inst.g_prime, lab.top_vertex(1), lab.mid_vertex(1));
    Verdict v2 = audit_reduction_structure(g, 2, minus, lab);
    CHECK_FALSE(v2.ok);

    // flipping one middle-bottom edge breaks the domination clause
    int m1 = lab.mid_vertex(1), b31 = lab.bot_vertex(3, 1);
    Graph flipped = inst.g_prime.adjacent(m1, b31)
                        ? delete_edge(inst.g_prime, m1, b31)
                        : make_graph(37, [&] {
                              auto e = inst.g_prime.edges();
                              e.push_back({m1, b31});
                              return e;
                          }());
    Verdict v3 = audit_reduction_structure(g, 2, flipped, lab);
    CHECK_FALSE(v3.ok);

    // a labeling whose h disagrees with the parameters is named directly
    ReductionLabeling wrong = lab;
    wrong.h = 31;
    Verdict v4 = audit_reduction_structure(g, 2, inst.g_prime, wrong);
    CHECK_FALSE(v4.ok);
    CHECK(v4.reason.find("target order") != std::string::npos);

    // a graph of the wrong size cannot pass
    Verdict v5 = audit_reduction_structure(g, 2, complete_graph(5), lab);
    CHECK_FALSE(v5.ok);
}

TEST_CASE("universal-vertex stripping") {
    // a complete graph strips all the way down to the empty graph
    StripResult k3 = strip_universal_vertices(complete_graph(3), 3);
    CHECK(k3.core.vertex_count() == 0);
    CHECK(k3.d_core == 0);
    CHECK(k3.stripped == std::vector<int>{0, 1, 2});
    CHECK(k3.core_to_original.empty());

    // the wheel loses its hub and nothing else
    StripResult w = strip_universal_vertices(wheel6(), 3);
    CHECK(w.core == cycle_graph(5));
    CHECK(w.d_core == 2);
    CHECK(w.stripped == std::vector<int>{0});
    CHECK(w.core_to_original == std::vector<int>{1, 2, 3, 4, 5});

    // nothing to strip in a cycle
    StripResult c = strip_universal_vertices(cycle_graph(5), 2);
    CHECK(c.core == cycle_graph(5));
    CHECK(c.d_core == 2);
    CHECK(c.stripped.empty());
    CHECK(c.core_to_original == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(strip_universal_vertices(empty_graph(0), 1),
                    std::invalid_argument);
}

TEST_CASE("instance transformation settles trivial outcomes") {
    // stripping K3 absorbs up to three required sets
    for (int d : {1, 2, 3}) {
        DomaticReduction red = reduce_domatic_to_hadwiger(complete_graph(3), d);
        CAPTURE(d);
        CHECK(red.kind == DomaticReduction::Kind::trivially_positive);
        CHECK(red.h == 1);
        CHECK(find_clique_minor(red.g_prime, red.h).status == SearchStatus::found);
    }
    DomaticReduction neg = reduce_domatic_to_hadwiger(complete_graph(3), 4);
    CHECK(neg.kind == DomaticReduction::Kind::trivially_negative);
    CHECK(neg.h == 2);
    CHECK(find_clique_minor(neg.g_prime, neg.h).status == SearchStatus::not_found);

    // the path's middle vertex is universal and absorbs d = 1 entirely
    CHECK(reduce_domatic_to_hadwiger(path_graph(3), 1).kind ==
          DomaticReduction::Kind::trivially_positive);

    CHECK_THROWS_AS(reduce_domatic_to_hadwiger(cycle_graph(5), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(reduce_domatic_to_hadwiger(empty_graph(0), 1),
                    std::invalid_argument);
}

TEST_CASE("instance transformation builds layered targets otherwise") {
    DomaticReduction red = reduce_domatic_to_hadwiger(path_graph(4), 2);
    REQUIRE(red.kind == DomaticReduction::Kind::layered);
    CHECK(red.g_prime.vertex_count() == 26); // 16 + 8 + 2
    CHECK(red.h == 22);
    CHECK(red.strip.stripped.empty());
    CHECK(audit_reduction_structure(red.strip.core, red.strip.d_core, red.g_prime,
                                    red.labeling)
              .ok);
    // both sides of the equivalence are positive here
    CHECK(find_disjoint_dominating_sets(path_graph(4), 2).has_value());
    CHECK(find_clique_minor(red.g_prime, red.h).status == SearchStatus::found);

    // stripping first: the wheel reduces through its 5-cycle core
    DomaticReduction wr = reduce_domatic_to_hadwiger(wheel6(), 3);
    REQUIRE(wr.kind == DomaticReduction::Kind::layered);
    CHECK(wr.strip.core == cycle_graph(5));
    CHECK(wr.strip.d_core == 2);
    CHECK(wr.g_prime.vertex_count() == 37);
    CHECK(wr.h == 32);
}

TEST_CASE("a dominating family maps to a verified branch-set model") {
    Graph c5 = cycle_graph(5);
    DomaticReduction red = reduce_domatic_to_hadwiger(c5, 2);
    REQUIRE(red.kind == DomaticReduction::Kind::layered);

    DomaticFamily fam{{{0, 2}, {1, 3}}};
    MinorModel model = domatic_witness_to_minor_model(c5, fam, red.labeling,
                                                      red.g_prime);
    CHECK(model.order() == 32);
    CHECK(verify_clique_minor_model(red.g_prime, model).ok);
    CHECK(model.branch_sets[0] == std::vector<int>{0, 2, 4}); // top 1 + mids 0, 2
    CHECK(model.branch_sets[1] == std::vector<int>{1, 3, 5}); // top 2 + mids 1, 3
    CHECK(model.branch_sets[2] == std::vector<int>{7});       // first bottom vertex

    // and back again
    DomaticFamily back =
        minor_model_to_domatic_witness(red.g_prime, model, red.labeling, c5);
    CHECK(back.sets == fam.sets);

    // a model of the wrong order is rejected
    MinorModel short_model = model;
    short_model.branch_sets.pop_back();
    CHECK_THROWS_AS(minor_model_to_domatic_witness(red.g_prime, short_model,
                                                   red.labeling, c5),
                    std::invalid_argument);

    // an invalid family is rejected before mapping
    CHECK_THROWS_AS(domatic_witness_to_minor_model(c5, DomaticFamily{{{0}, {1, 3}}},
                                                   red.labeling, red.g_prime),
                    std::invalid_argument);
}

TEST_CASE("the raw construction also carries witnesses across") {
    LayeredInstance inst = build_layered_instance(path_graph(3), 2);
    DomaticFamily fam{{{1}, {0, 2}}}; // the middle vertex alone dominates P3
    MinorModel model = domatic_witness_to_minor_model(path_graph(3), fam,
                                                      inst.labeling, inst.g_prime);
    CHECK(model.order() == 14);
    CHECK(verify_clique_minor_model(inst.g_prime, model).ok);
}

TEST_CASE("solver-found models on the layered target translate back") {
    Graph c5 = cycle_graph(5);
    DomaticReduction red = reduce_domatic_to_hadwiger(c5, 2);
    MinorSearchResult r = find_clique_minor(red.g_prime, red.h);
    REQUIRE(r.status == SearchStatus::found);
    DomaticFamily fam =
        minor_model_to_domatic_witness(red.g_prime, *r.model, red.labeling, c5);
    CHECK(fam.order() == 2);
    CHECK(verify_domatic_family(c5, fam).ok);
}

TEST_CASE("clique-with-removed-edges construction for path instances") {
    // n = 4, k = 2: 2n + 1 - 2k = 5 target vertices, h = n + 1 = 5
    DisjointPathsInstance i42 =
        make_paths_instance(path_graph(4), {{0, 1}, {2, 3}});
    PathsReduction r42 = reduce_paths_to_hadwiger(i42);
    CHECK(r42.g_prime.vertex_count() == 5);
    CHECK(r42.h == 5);
    CHECK(r42.map.n == 4);
    CHECK(r42.map.k == 2);
    CHECK(r42.map.clique_vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(r42.map.terminal_ids ==
          std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    // C5 with one pair: 9 vertices, order 6
    DisjointPathsInstance ic5 = make_paths_instance(cycle_graph(5), {{0, 2}});
    PathsReduction rc5 = reduce_paths_to_hadwiger(ic5);
    CHECK(rc5.g_prime.vertex_count() == 9);
    CHECK(rc5.h == 6);
    CHECK(rc5.map.clique_vertices == std::vector<int>{0, 2, 5, 6, 7, 8});
    // the clique edge between the terminals is removed and not re-supplied
    CHECK_FALSE(rc5.g_prime.adjacent(0, 2));
    // every other clique pair is adjacent
    CHECK(rc5.g_prime.adjacent(0, 5));
    CHECK(rc5.g_prime.adjacent(5, 8));
    // source edges survive the union
    CHECK(rc5.g_prime.adjacent(0, 1));

    // a terminal pair that is also a source edge keeps its edge in the union
    DisjointPathsInstance adj = make_paths_instance(cycle_graph(5), {{0, 1}});
    PathsReduction radj = reduce_paths_to_hadwiger(adj);
    CHECK(radj.g_prime.adjacent(0, 1));
    CHECK(find_clique_minor(radj.g_prime, radj.h).status == SearchStatus::found);

    // k = 0 unions the source with a disjoint clique on n + 1 vertices
    DisjointPathsInstance k0 = make_paths_instance(path_graph(3), {});
    PathsReduction r0 = reduce_paths_to_hadwiger(k0);
    CHECK(r0.g_prime.vertex_count() == 7);
    CHECK(r0.h == 4);
    CHECK(find_clique_minor(r0.g_prime, r0.h).status == SearchStatus::found);
}

TEST_CASE("a path set maps to a verified branch-set model and back") {
    DisjointPathsInstance inst = make_paths_instance(cycle_graph(5), {{0, 2}});
    PathsReduction red = reduce_paths_to_hadwiger(inst);

    PathSet ps{{{0, 1, 2}}};
    MinorModel model = paths_witness_to_minor_model(inst, ps, red);
    CHECK(model.order() == 6);
    CHECK(verify_clique_minor_model(red.g_prime, model).ok);
    CHECK(model.branch_sets[0] == std::vector<int>{0, 1}); // s absorbs the interior
    CHECK(model.branch_sets[1] == std::vector<int>{2});

    PathSet back = minor_model_to_paths_witness(red.g_prime, model, red.map, inst);
    CHECK(verify_path_set(inst, back).ok);

    // an invalid path set is rejected before mapping
    CHECK_THROWS_AS(paths_witness_to_minor_model(inst, PathSet{{{0, 2}}}, red),
                    std::invalid_argument);

    // a model of the wrong order is rejected
    MinorModel short_model = model;
    short_model.branch_sets.pop_back();
    CHECK_THROWS_AS(minor_model_to_paths_witness(red.g_prime, short_model, red.map,
                                                 inst),
                    std::invalid_argument);
}

TEST_CASE("solver-found models on the path target translate back") {
    DisjointPathsInstance inst =
        make_paths_instance(cycle_graph(5), {{0, 2}});
    PathsReduction red = reduce_paths_to_hadwiger(inst);
    MinorSearchResult r = find_clique_minor(red.g_prime, red.h);
    REQUIRE(r.status == SearchStatus::found);
    PathSet ps = minor_model_to_paths_witness(red.g_prime, *r.model, red.map, inst);
    CHECK(verify_path_set(inst, ps).ok);
}

TEST_CASE("DOT rendering carries layers and branch-set colors") {
    Graph c5 = cycle_graph(5);
    std::string plain = emit_dot(c5);
    CHECK(plain.find("graph minor {") == 0);
    CHECK(plain.find("v0") != std::string::npos);
    CHECK(plain.find("fillcolor") == std::string::npos);

    DomaticReduction red = reduce_domatic_to_hadwiger(c5, 2);
    std::string layered = emit_dot(red.g_prime, &red.labeling);
    CHECK(layered.find("T1") != std::string::npos);
    CHECK(layered.find("M5") != std::string::npos);
    CHECK(layered.find("B5.6") != std::string::npos);

    DomaticFamily fam{{{0, 2}, {1, 3}}};
    MinorModel model =
        domatic_witness_to_minor_model(c5, fam, red.labeling, red.g_prime);
    std::string colored = emit_dot(red.g_prime, &red.labeling, &model);
    std::set<std::string> colors;
    for (std::size_t at = colored.find("fillcolor=\""); at != std::string::npos;
         at = colored.find("fillcolor=\"", at + 1)) {
        std::size_t open = at + 11, close = colored.find('"', open + 1);
        colors.insert(colored.substr(open, close - open + 1));
    }
    CHECK(int(colors.size()) == 32); // one color class per branch set

    // invalid inputs are rejected
    MinorModel broken = model;
    broken.branch_sets[0].clear();
    CHECK_THROWS_AS(emit_dot(red.g_prime, &red.labeling, &broken),
                    std::invalid_argument);
    CHECK_THROWS_AS(emit_dot(c5, &red.labeling), std::invalid_argument);
}

TEST_CASE("connected pieces of the layered target obey the layer trichotomy") {
    // every connected subgraph is a single middle vertex, or touches the top,
    // or touches the bottom (the middle layer is independent)
    LayeredInstance inst = build_layered_instance(cycle_graph(5), 2);
    const ReductionLabeling & lab = inst.labeling;
    std::uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    int n_prime = inst.g_prime.vertex_count();
    for (int trial = 0; trial < 200; ++trial) {
        // grow a random connected subset
        std::vector<int> subset{int(next() % n_prime)};
        Bitset in(n_prime);
        in.set(subset[0]);
        int want = 1 + int(next() % 6);
        while (int(subset.size()) < want) {
            int at = subset[next() % subset.size()];
            auto nbrs = inst.g_prime.neighbors(at).to_vector();
            int pick = nbrs[next() % nbrs.size()];
            if (!in.test(pick)) {
                in.set(pick);
                subset.push_back(pick);
            }
        }
        REQUIRE(is_connected_subset(inst.g_prime, subset));
        bool has_top = false, has_bot = false;
        for (int v : subset) {
            if (lab.labels[v].kind == LayerKind::top) has_top = true;
            if (lab.labels[v].kind == LayerKind::bot) has_bot = true;
        }
        bool single_mid =
            subset.size() == 1 && lab.labels[subset[0]].kind == LayerKind::mid;
        REQUIRE((single_mid || has_top || has_bot));
    }
}
