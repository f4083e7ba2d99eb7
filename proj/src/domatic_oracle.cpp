#include "minorkit/domatic_oracle.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace minorkit {

namespace {

bool assignment_is_domatic(const std::vector<std::uint64_t> & closed, int n,
                           const std::vector<int> & label, int d) {
    std::vector<std::uint64_t> member(d + 1, 0);
    for (int v = 0; v < n; ++v) member[label[v]] |= std::uint64_t{1} << v;
    for (int c = 1; c <= d; ++c)
        for (int w = 0; w < n; ++w)
            if ((member[c] & closed[w]) == 0) return false; // nothing in set c dominates w
    return true;
}

} // namespace

int domatic_oracle(const Graph & g, int cap) {
    int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("domatic_oracle: graph must have at least one vertex");
    if (n > cap)
        throw std::invalid_argument("domatic_oracle: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap));
    if (n > 62)
        throw std::invalid_argument("domatic_oracle: n exceeds the structural limit 62");

    std::vector<std::uint64_t> closed(n, 0); // closed[w] = {w} union N(w)
    for (int w = 0; w < n; ++w) {
        closed[w] |= std::uint64_t{1} << w;
        for (int u = 0; u < n; ++u)
            if (u != w && g.adjacent(u, w)) closed[w] |= std::uint64_t{1} << u;
    }

    for (int d = n; d >= 1; --d) {
        std::vector<int> label(n, 0);
        while (true) {
            if (assignment_is_domatic(closed, n, label, d)) return d;
            int i = 0;
            while (i < n && label[i] == d) label[i++] = 0;
            if (i == n) break;
            ++label[i];
        }
    }
    return 0; // unreachable: d = 1 succeeds with every vertex labeled 1
}

} // namespace minorkit
