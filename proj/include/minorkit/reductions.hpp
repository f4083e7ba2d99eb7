#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minorkit/domatic.hpp"
#include "minorkit/model.hpp"
#include "minorkit/paths.hpp"

namespace minorkit {

// ---------------------------------------------------------------------------
// Domatic -> clique-minor instance transformation.
//
// From a source graph on vertices v_1..v_n and a target count d, build G' in
// three layers:
//   top:    a d-clique t_1..t_d,
//   middle: an independent set m_1..m_n, one vertex per source vertex,
//   bottom: an n(n+1)-clique b_{i,j} (rows i = 1..n, columns j = 1..n+1),
// with every top-middle pair adjacent, m_i adjacent to all of row j exactly
// when v_i dominates v_j, and no top-bottom edges.  The target clique-minor
// order is h = n(n+1) + d.
// ---------------------------------------------------------------------------

enum class LayerKind { top, mid, bot };

struct LayerLabel {
    LayerKind kind = LayerKind::top;
    int i = 0; // 1-based: top index in 1..d, mid index / bot row in 1..n
    int j = 0; // bot column in 1..n+1; 0 otherwise

    friend bool operator==(const LayerLabel &, const LayerLabel &) = default;
};

std::string layer_label_to_string(const LayerLabel & lab); // "T3", "M2", "B4.1"
LayerLabel layer_label_from_string(const std::string & text);

// Which layer each vertex of the constructed instance belongs to, plus the
// construction parameters.  Vertex ids are assigned top layer first, then
// middle, then bottom row by row.
struct ReductionLabeling {
    int n = 0; // source vertices
    int d = 0; // top-layer size
    int h = 0; // n * (n + 1) + d
    std::vector<LayerLabel> labels;

    int top_vertex(int i) const { return i - 1; }              // i in 1..d
    int mid_vertex(int i) const { return d + i - 1; }          // i in 1..n
    int bot_vertex(int i, int j) const {                       // row i, col j
        return d + n + (i - 1) * (n + 1) + (j - 1);
    }
    int vertex_count() const { return d + n + n * (n + 1); }
};

struct LayeredInstance {
    Graph g_prime;
    ReductionLabeling labeling;

    int h() const { return labeling.h; }
};

// The raw three-layer construction applied to g as-is.  pre: n >= 1, d >= 1.
LayeredInstance build_layered_instance(const Graph & g, int d);

// Re-derives every structural clause of the construction from (g, d) and
// checks g_prime against it: layer sizes, top clique, middle independence,
// bottom clique, the complete top-middle join, the absence of top-bottom
// edges, row adjacency matching domination in g, the middle-degree identity
// deg(m_i) = (deg(v_i) + 1)(n + 1) + d, and h.  Violations name the first
// offending clause.
Verdict audit_reduction_structure(const Graph & g, int d,
                                  const Graph & g_prime,
                                  const ReductionLabeling & labeling);

// ---------------------------------------------------------------------------
// Universal-vertex stripping.  A vertex adjacent to all others is its own
// dominating set, so (G, d) and (G - v, d - 1) are equivalent; repeating this
// until no universal vertex remains normalizes the instance.  Complete graphs
// (including K_1) strip all the way down to the empty graph.
// ---------------------------------------------------------------------------

struct StripResult {
    Graph core;
    int d_core = 0;                    // d minus the number of stripped vertices
    std::vector<int> stripped;         // original ids in removal order
    std::vector<int> core_to_original; // core vertex id -> original id
};

StripResult strip_universal_vertices(const Graph & g, int d);

// Full instance transformation: strip universal vertices, settle instances
// whose answer is then immediate, and build the layered instance otherwise.
// Trivial outcomes are materialized as one-vertex target instances so the
// biconditional "d sets exist in g iff K_h minor exists in g_prime" holds for
// every outcome: K_1 with h = 1 (always a yes) or h = 2 (always a no).
struct DomaticReduction {
    enum class Kind { layered, trivially_positive, trivially_negative };

    Kind kind = Kind::layered;
    Graph g_prime;
    int h = 0;
    ReductionLabeling labeling; // meaningful only when kind == layered
    StripResult strip;
};

// pre: n >= 1, d >= 1.
DomaticReduction reduce_domatic_to_hadwiger(const Graph & g, int d);

// Maps a d-set family of the labeled source graph to a clique-minor model of
// g_prime: one branch set per family set (its top vertex plus the middle
// vertices of its members) and one singleton per bottom vertex.  Validates
// the family against `core` and the result against `g_prime`.
MinorModel domatic_witness_to_minor_model(const Graph & core,
                                          const DomaticFamily & family,
                                          const ReductionLabeling & labeling,
                                          const Graph & g_prime);

// Inverse direction: extracts d disjoint dominating sets of `core` from any
// valid h-set clique-minor model of g_prime.  For each top vertex, the source
// vertices whose middle vertices share its branch set form one dominating
// set.  pre: the labeling came from a core with no universal vertex (the
// extraction argument needs middle degrees below h - 1).  Throws
// std::invalid_argument when the model is not a valid h-set model of g_prime.
DomaticFamily minor_model_to_domatic_witness(const Graph & g_prime,
                                             const MinorModel & model,
                                             const ReductionLabeling & labeling,
                                             const Graph & core);

// ---------------------------------------------------------------------------
// Disjoint-paths -> clique-minor instance transformation.  Take a clique on
// n + 1 vertices, remove k disjoint edges, and identify the endpoints of the
// i-th removed edge with s_i and t_i.  G' is the union of g and that clique
// on 2n + 1 - 2k vertices; the target order is h = n + 1.
// ---------------------------------------------------------------------------

struct PathsReductionMap {
    int n = 0, k = 0, h = 0;
    std::vector<int> clique_vertices;               // ids of the clique in g_prime
    std::vector<std::pair<int, int>> terminal_ids;  // (s_i, t_i) ids in g_prime
};

struct PathsReduction {
    Graph g_prime;
    int h = 0;
    PathsReductionMap map;
};

// Vertex ids: the n source vertices keep their ids; the n + 1 - 2k
// clique-only vertices follow.
PathsReduction reduce_paths_to_hadwiger(const DisjointPathsInstance & inst);

// Maps a solution path set to a clique-minor model of g_prime: every clique
// vertex is its own branch set except that s_i's set also absorbs the
// interior of path i, which supplies the missing s_i -- t_i adjacency.
MinorModel paths_witness_to_minor_model(const DisjointPathsInstance & inst,
                                        const PathSet & paths,
                                        const PathsReduction & red);

// Inverse direction: from any valid (n+1)-set model of g_prime, each branch
// set holds exactly one clique vertex, and walking inside the two sets
// holding s_i and t_i across one of their connecting edges yields an
// s_i -- t_i path that lives in the source graph.  Throws
// std::invalid_argument when the model is not a valid h-set model of g_prime.
PathSet minor_model_to_paths_witness(const Graph & g_prime,
                                     const MinorModel & model,
                                     const PathsReductionMap & map,
                                     const DisjointPathsInstance & inst);

} // namespace minorkit
