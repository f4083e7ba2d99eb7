#include "minorkit/formats.hpp"

#include <fstream>
#include <sstream>

namespace minorkit {

namespace {

constexpr int kBias = 63;
constexpr int kMaxGraph6N = 258047; // largest n for the 1- or 4-byte header

std::string strip_graph6_decorations(const std::string & text) {
    std::string s = text;
    const std::string prefix = ">>graph6<<";
    if (s.rfind(prefix, 0) == 0) s.erase(0, prefix.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

} // namespace

std::string format_graph6(const Graph & g) {
    int n = g.vertex_count();
    if (n > kMaxGraph6N)
        throw std::invalid_argument("format_graph6: graph too large for this encoder");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(char(((n >> 12) & 63) + kBias));
        out.push_back(char(((n >> 6) & 63) + kBias));
        out.push_back(char((n & 63) + kBias));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + kBias));
    return out;
}

Graph parse_graph6(const std::string & text) {
    std::string s = strip_graph6_decorations(text);
    if (s.empty()) throw ParseError("graph6: empty input");
    for (char c : s)
        if (c < kBias || c > 126)
            throw ParseError("graph6: byte out of range");

    std::size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = s[0] - kBias;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw ParseError("graph6: vertex counts beyond 258047 unsupported");
        if (s.size() < 4) throw ParseError("graph6: truncated header");
        n = (static_cast<long long>(s[1] - kBias) << 12) |
            (static_cast<long long>(s[2] - kBias) << 6) |
            static_cast<long long>(s[3] - kBias);
        pos = 4;
    }
    long long bits = n * (n - 1) / 2;
    std::size_t want = std::size_t((bits + 5) / 6);
    if (s.size() - pos < want) throw ParseError("graph6: truncated bit payload");
    if (s.size() - pos > want) throw ParseError("graph6: trailing bytes after payload");

    std::vector<Edge> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[pos + std::size_t(bit / 6)] - kBias;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    return make_graph(int(n), edges);
}

std::string format_edge_list(const Graph & g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string & text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank
        if (tag == "c") continue;
        auto fail = [&](const std::string & why) {
            throw ParseError("edge list, line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "p") {
            if (n >= 0) fail("repeated p line");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed p line");
        } else if (tag == "e") {
            if (n < 0) fail("edge before p line");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed e line");
            edges.emplace_back(u, v);
        } else {
            fail("unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("edge list: missing p line");
    if (int(edges.size()) != m)
        throw ParseError("edge list: p line promises " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
    try {
        return make_graph(n, edges);
    } catch (const std::invalid_argument & e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string read_text_file(const std::string & path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string & path, const std::string & content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("error writing " + path);
}

Graph read_graph_file(const std::string & path) {
    std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") return parse_edge_list(text);
        break;
    }
    return parse_graph6(text);
}

} // namespace minorkit
