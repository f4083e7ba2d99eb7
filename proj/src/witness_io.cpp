#include "minorkit/witness_io.hpp"

#include <sstream>

namespace minorkit {

namespace {

struct Line {
    std::string tag;
    std::vector<std::string> fields;
    int number = 0;
};

std::vector<Line> tokenize(const std::string & text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        Line line;
        line.number = lineno;
        if (!(ls >> line.tag)) continue;
        if (line.tag == "c") continue;
        std::string f;
        while (ls >> f) line.fields.push_back(std::move(f));
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line & line, const std::string & why) {
    throw ParseError("line " + std::to_string(line.number) + ": " + why);
}

int to_int(const Line & line, const std::string & field) {
    try {
        std::size_t used = 0;
        int v = std::stoi(field, &used);
        if (used != field.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail(line, "expected an integer, got '" + field + "'");
    }
}

void expect_type(const std::vector<Line> & lines, const std::string & want) {
    if (lines.empty()) throw ParseError("empty input, expected 'type " + want + "'");
    if (lines[0].tag != "type" || lines[0].fields.size() != 1 ||
        lines[0].fields[0] != want)
        fail(lines[0], "expected 'type " + want + "'");
}

int header_int(const std::vector<Line> & lines, std::size_t idx,
               const std::string & tag) {
    if (idx >= lines.size() || lines[idx].tag != tag || lines[idx].fields.size() != 1)
        throw ParseError("expected '" + tag + " <value>' line");
    return to_int(lines[idx], lines[idx].fields[0]);
}

std::vector<int> id_list(const Line & line) {
    std::vector<int> out;
    for (const auto & f : line.fields) out.push_back(to_int(line, f));
    return out;
}

void write_ids(std::ostringstream & out, const std::string & tag,
               const std::vector<int> & ids) {
    out << tag;
    for (int v : ids) out << ' ' << v;
    out << '\n';
}

} // namespace

std::string format_minor_model(const MinorModel & model) {
    std::ostringstream out;
    out << "type clique_minor\n";
    out << "h " << model.order() << '\n';
    for (const auto & set : model.branch_sets) write_ids(out, "set", set);
    return out.str();
}

MinorModel parse_minor_model(const std::string & text) {
    auto lines = tokenize(text);
    expect_type(lines, "clique_minor");
    int h = header_int(lines, 1, "h");
    MinorModel model;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].tag != "set") fail(lines[i], "expected a 'set' line");
        model.branch_sets.push_back(id_list(lines[i]));
    }
    if (model.order() != h)
        throw ParseError("header promises " + std::to_string(h) + " sets, found " +
                         std::to_string(model.order()));
    return model;
}

std::string format_domatic_family(const DomaticFamily & fam) {
    std::ostringstream out;
    out << "type domatic\n";
    out << "d " << fam.order() << '\n';
    for (const auto & set : fam.sets) write_ids(out, "set", set);
    return out.str();
}

DomaticFamily parse_domatic_family(const std::string & text) {
    auto lines = tokenize(text);
    expect_type(lines, "domatic");
    int d = header_int(lines, 1, "d");
    DomaticFamily fam;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].tag != "set") fail(lines[i], "expected a 'set' line");
        fam.sets.push_back(id_list(lines[i]));
    }
    if (fam.order() != d)
        throw ParseError("header promises " + std::to_string(d) + " sets, found " +
                         std::to_string(fam.order()));
    return fam;
}

std::string format_path_set(const PathSet & ps) {
    std::ostringstream out;
    out << "type paths\n";
    out << "k " << ps.paths.size() << '\n';
    for (const auto & p : ps.paths) write_ids(out, "path", p);
    return out.str();
}

PathSet parse_path_set(const std::string & text) {
    auto lines = tokenize(text);
    expect_type(lines, "paths");
    int k = header_int(lines, 1, "k");
    PathSet ps;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        if (lines[i].tag != "path") fail(lines[i], "expected a 'path' line");
        ps.paths.push_back(id_list(lines[i]));
    }
    if (int(ps.paths.size()) != k)
        throw ParseError("header promises " + std::to_string(k) + " paths, found " +
                         std::to_string(ps.paths.size()));
    return ps;
}

std::string format_labeling(const ReductionLabeling & lab) {
    std::ostringstream out;
    out << "type layered_labeling\n";
    out << "n " << lab.n << '\n';
    out << "d " << lab.d << '\n';
    out << "h " << lab.h << '\n';
    for (std::size_t v = 0; v < lab.labels.size(); ++v)
        out << "label " << v << ' ' << layer_label_to_string(lab.labels[v]) << '\n';
    return out.str();
}

ReductionLabeling parse_labeling(const std::string & text) {
    auto lines = tokenize(text);
    expect_type(lines, "layered_labeling");
    ReductionLabeling lab;
    lab.n = header_int(lines, 1, "n");
    lab.d = header_int(lines, 2, "d");
    lab.h = header_int(lines, 3, "h");
    lab.labels.resize(lab.vertex_count());
    std::vector<bool> seen(lab.labels.size(), false);
    for (std::size_t i = 4; i < lines.size(); ++i) {
        const Line & line = lines[i];
        if (line.tag != "label" || line.fields.size() != 2)
            fail(line, "expected 'label <vertex> <layer>'");
        int v = to_int(line, line.fields[0]);
        if (v < 0 || v >= int(lab.labels.size()))
            fail(line, "vertex " + std::to_string(v) + " out of range");
        if (seen[v]) fail(line, "vertex " + std::to_string(v) + " labeled twice");
        seen[v] = true;
        try {
            lab.labels[v] = layer_label_from_string(line.fields[1]);
        } catch (const std::invalid_argument & e) {
            fail(line, e.what());
        }
    }
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v])
            throw ParseError("vertex " + std::to_string(v) + " has no label line");
    return lab;
}

std::string format_paths_map(const PathsReductionMap & map) {
    std::ostringstream out;
    out << "type paths_map\n";
    out << "n " << map.n << '\n';
    out << "k " << map.k << '\n';
    out << "h " << map.h << '\n';
    write_ids(out, "clique", map.clique_vertices);
    for (auto [s, t] : map.terminal_ids) out << "pair " << s << ' ' << t << '\n';
    return out.str();
}

PathsReductionMap parse_paths_map(const std::string & text) {
    auto lines = tokenize(text);
    expect_type(lines, "paths_map");
    PathsReductionMap map;
    map.n = header_int(lines, 1, "n");
    map.k = header_int(lines, 2, "k");
    map.h = header_int(lines, 3, "h");
    if (lines.size() < 5 || lines[4].tag != "clique")
        throw ParseError("expected a 'clique' line");
    map.clique_vertices = id_list(lines[4]);
    for (std::size_t i = 5; i < lines.size(); ++i) {
        if (lines[i].tag != "pair" || lines[i].fields.size() != 2)
            fail(lines[i], "expected 'pair <s> <t>'");
        map.terminal_ids.emplace_back(to_int(lines[i], lines[i].fields[0]),
                                      to_int(lines[i], lines[i].fields[1]));
    }
    if (int(map.terminal_ids.size()) != map.k)
        throw ParseError("header promises " + std::to_string(map.k) +
                         " pairs, found " + std::to_string(map.terminal_ids.size()));
    return map;
}

std::string format_paths_instance(const DisjointPathsInstance & inst) {
    std::ostringstream out;
    out << format_edge_list(inst.graph);
    for (auto [s, t] : inst.pairs) out << "d " << s << ' ' << t << '\n';
    return out.str();
}

DisjointPathsInstance parse_paths_instance(const std::string & text) {
    // split off the terminal-pair lines, parse the rest as an edge list
    std::istringstream in(text);
    std::string raw, graph_part;
    std::vector<std::pair<int, int>> pairs;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if ((ls >> tag) && tag == "d") {
            int s, t;
            if (!(ls >> s >> t))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected 'd <s> <t>'");
            pairs.emplace_back(s, t);
        } else {
            graph_part += line;
            graph_part += '\n';
        }
    }
    Graph g = parse_edge_list(graph_part);
    try {
        return make_paths_instance(std::move(g), std::move(pairs));
    } catch (const std::invalid_argument & e) {
        throw ParseError(e.what());
    }
}

} // namespace minorkit
