#include "minorkit/minor_oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace minorkit {

namespace {

// One assignment of vertices to groups 0 (unused) or 1..h: do the nonempty,
// connected, and pairwise-adjacent conditions all hold?
bool assignment_is_model(const std::vector<std::uint64_t> & row, int n,
                         const std::vector<int> & label, int h) {
    std::vector<std::uint64_t> group(h + 1, 0);
    for (int v = 0; v < n; ++v) group[label[v]] |= std::uint64_t{1} << v;
    for (int c = 1; c <= h; ++c)
        if (group[c] == 0) return false;

    // pairwise adjacency between groups
    std::vector<std::uint64_t> reach_out(h + 1, 0);
    for (int v = 0; v < n; ++v)
        if (label[v] != 0) reach_out[label[v]] |= row[v];
    for (int c = 1; c <= h; ++c)
        for (int e = c + 1; e <= h; ++e)
            if ((reach_out[c] & group[e]) == 0) return false;

    // each group connected
    for (int c = 1; c <= h; ++c) {
        std::uint64_t members = group[c];
        std::uint64_t seen = members & (~members + 1); // lowest member bit
        while (true) {
            std::uint64_t grow = 0;
            for (int v = 0; v < n; ++v)
                if (seen & (std::uint64_t{1} << v)) grow |= row[v];
            grow = (grow | seen) & members;
            if (grow == seen) break;
            seen = grow;
        }
        if (seen != members) return false;
    }
    return true;
}

} // namespace

int hadwiger_oracle(const Graph & g, int cap) {
    int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("hadwiger_oracle: graph must have at least one vertex");
    if (n > cap)
        throw std::invalid_argument("hadwiger_oracle: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    if (n > 62)
        throw std::invalid_argument("hadwiger_oracle: n exceeds the structural limit 62");

    std::vector<std::uint64_t> row(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) row[u] |= std::uint64_t{1} << v;

    for (int h = n; h >= 1; --h) {
        std::vector<int> label(n, 0);
        while (true) {
            if (assignment_is_model(row, n, label, h)) return h;
            int i = 0;
            while (i < n && label[i] == h) label[i++] = 0;
            if (i == n) break;
            ++label[i];
        }
    }
    return 0; // unreachable: h = 1 always succeeds for n >= 1
}

} // namespace minorkit
