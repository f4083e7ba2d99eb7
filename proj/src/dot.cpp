#include "minorkit/dot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace minorkit {

std::string emit_dot(const Graph & g, const ReductionLabeling * labeling,
                     const MinorModel * model) {
    int n = g.vertex_count();
    if (labeling && int(labeling->labels.size()) != n)
        throw std::invalid_argument("emit_dot: labeling does not fit the graph");
    std::vector<int> set_of(n, -1);
    if (model) {
        Verdict ok = verify_clique_minor_model(g, *model);
        if (!ok.ok) throw std::invalid_argument("emit_dot: invalid model: " + ok.reason);
        for (int s = 0; s < model->order(); ++s)
            for (int v : model->branch_sets[s]) set_of[v] = s;
    }

    std::ostringstream out;
    out << "graph minor {\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < n; ++v) {
        out << "  v" << v << " [label=\"";
        if (labeling)
            out << layer_label_to_string(labeling->labels[v]);
        else
            out << v;
        out << "\"";
        if (set_of[v] >= 0) {
            // one well-spread hue per branch set
            double hue = std::fmod(set_of[v] * 0.61803398875, 1.0);
            char color[32];
            std::snprintf(color, sizeof color, "%.3f 0.45 0.95", hue);
            out << " style=filled fillcolor=\"" << color << "\"";
        }
        out << "];\n";
    }
    if (labeling) {
        auto rank_row = [&](LayerKind kind) {
            out << "  { rank=same;";
            for (int v = 0; v < n; ++v)
                if (labeling->labels[v].kind == kind) out << " v" << v << ';';
            out << " }\n";
        };
        rank_row(LayerKind::top);
        rank_row(LayerKind::mid);
        rank_row(LayerKind::bot);
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace minorkit
