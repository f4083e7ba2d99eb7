#include "minorkit/model.hpp"

namespace minorkit {

Verdict verify_clique_minor_model(const Graph & g, const MinorModel & model) {
    int h = model.order();
    int n = g.vertex_count();
    std::vector<Bitset> masks;
    masks.reserve(h);
    for (int i = 0; i < h; ++i) {
        const auto & set = model.branch_sets[i];
        if (set.empty())
            return Verdict::violation("branch set " + std::to_string(i) + " is empty");
        Bitset mask(n);
        for (int v : set) {
            if (v < 0 || v >= n)
                return Verdict::violation("branch set " + std::to_string(i) +
                                          " contains out-of-range vertex " +
                                          std::to_string(v));
            if (mask.test(v))
                return Verdict::violation("branch set " + std::to_string(i) +
                                          " repeats vertex " + std::to_string(v));
            mask.set(v);
        }
        for (int j = 0; j < i; ++j)
            if (mask.intersects(masks[j]))
                return Verdict::violation("branch sets " + std::to_string(j) + " and " +
                                          std::to_string(i) + " overlap");
        if (!is_connected_subset(g, mask))
            return Verdict::violation("branch set " + std::to_string(i) +
                                      " is not connected");
        masks.push_back(std::move(mask));
    }
    for (int i = 0; i < h; ++i) {
        Bitset nbr(n);
        masks[i].for_each([&](int v) { nbr |= g.neighbors(v); });
        for (int j = i + 1; j < h; ++j)
            if (!nbr.intersects(masks[j]))
                return Verdict::violation("no edge joins branch sets " +
                                          std::to_string(i) + " and " +
                                          std::to_string(j));
    }
    return Verdict::valid();
}

} // namespace minorkit
