#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/bitset.hpp"

namespace minorkit {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1, stored as one
// adjacency bitset per vertex.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int v) const { return rows_[v].count(); }
    const Bitset & neighbors(int v) const { return rows_[v]; }

    int min_degree() const;

    // All edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph &, const Graph &) = default;

    friend Graph make_graph(int n, const std::vector<Edge> & edges);

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitset> rows_;
};

// Builds a graph after validating the edge list: endpoints must be in range
// and distinct (no loops).  Duplicate edges are rejected.
// Throws std::invalid_argument on violation.
Graph make_graph(int n, const std::vector<Edge> & edges);

// Deterministic generators.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);         // n >= 1, edges i -- i+1
Graph cycle_graph(int n);        // n >= 3
Graph star_graph(int n);         // n >= 1, center 0
// Erdos-Renyi G(n, p) with a platform-independent draw from mt19937_64.
Graph random_graph(int n, double p, std::uint64_t seed);

// Dispatch by kind name: empty | complete | path | cycle | star | random.
// Throws std::invalid_argument for unknown kinds or bad parameters.
Graph generate_graph(const std::string & kind, int n, double p, std::uint64_t seed);

// Validates that `vs` lists distinct in-range vertices; throws otherwise.
void validate_vertex_set(const Graph & g, const std::vector<int> & vs,
                         const std::string & what);

// True when `vs` is nonempty and induces a connected subgraph.
bool is_connected_subset(const Graph & g, const std::vector<int> & vs);
bool is_connected_subset(const Graph & g, const Bitset & vs);

// Contract edge u -- v.  The merged vertex takes the slot min(u, v); ids above
// max(u, v) shift down by one.  Requires u, v adjacent.
Graph contract_edge(const Graph & g, int u, int v);

// Delete vertex v; ids above v shift down by one.
Graph delete_vertex(const Graph & g, int v);

// Delete edge u -- v (must exist); ids unchanged.
Graph delete_edge(const Graph & g, int u, int v);

} // namespace minorkit
