#pragma once

#include <string>
#include <vector>

#include "minorkit/minor_solver.hpp"
#include "minorkit/paths.hpp"
#include "minorkit/reductions.hpp"

namespace minorkit {

// End-to-end consistency drivers: decide the source instance with its own
// solver, transform it, decide the target with the minor solver, compare the
// answers, and exercise the witness maps in both directions on positives.

struct DomaticCase {
    Graph g;
    int d = 1;
    std::string name;
};

struct PathsCase {
    DisjointPathsInstance inst;
    std::string name;
};

struct CrossCheckOptions {
    SearchBudget budget;        // for each minor-solver call
    bool with_timings = false;  // timings off keeps report text byte-stable
};

struct CrossCheckRecord {
    std::string name;
    bool source_positive = false;
    bool target_positive = false;
    bool undecided = false; // a search ran out of budget; never counts as agree
    bool agree = false;
    bool witness_ok = true; // witness maps applied and verified (positives)
    std::string note;       // failure detail, empty when clean
    double seconds = 0.0;
};

struct CrossCheckReport {
    std::string corpus;
    std::vector<CrossCheckRecord> records;
    int agree_count = 0;
    bool all_ok = true; // all records agree and all witness maps verified

    // One line per record plus a final "AGREE <agree_count>/<total>" summary.
    std::string to_text(bool with_timings = false) const;
};

CrossCheckReport crosscheck_domatic(const std::vector<DomaticCase> & cases,
                                    const CrossCheckOptions & opts = {});
CrossCheckReport crosscheck_paths(const std::vector<PathsCase> & cases,
                                  const CrossCheckOptions & opts = {});

// Corpus builders.  Labeled graphs on n vertices are enumerated by edge
// mask over pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in that order.
std::vector<Graph> all_labeled_graphs(int n);

// Every labeled graph with 1 <= n <= max_n crossed with every d in 1..max_d.
std::vector<DomaticCase> exhaustive_domatic_corpus(int max_n, int max_d);

// Every labeled graph with 2 <= n <= max_n crossed with every canonical way
// to pick 1..max_k disjoint terminal pairs (s < t within a pair, pairs in
// increasing order of s).
std::vector<PathsCase> exhaustive_paths_corpus(int max_n, int max_k);

} // namespace minorkit
