#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "minorkit/crosscheck.hpp"
#include "minorkit/domatic.hpp"
#include "minorkit/dot.hpp"
#include "minorkit/formats.hpp"
#include "minorkit/minor_solver.hpp"
#include "minorkit/paths.hpp"
#include "minorkit/reductions.hpp"
#include "minorkit/witness_io.hpp"

using namespace minorkit;

namespace {

// exit codes: 0 positive/success, 1 negative/invalid, 2 usage or input
// error, 3 search budget exhausted
constexpr int kYes = 0, kNo = 1, kUsage = 2, kBudget = 3;

void emit(const std::string & path, const std::string & content) {
    if (path.empty())
        std::cout << content;
    else
        write_text_file(path, content);
}

std::string graph_text(const Graph & g, const std::string & format) {
    if (format == "graph6") return format_graph6(g) + "\n";
    if (format == "edgelist") return format_edge_list(g);
    throw std::invalid_argument("unknown graph format '" + format + "'");
}

struct GenArgs {
    std::string kind = "random", format = "graph6", out;
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 1;
};

int run_gen(const GenArgs & a) {
    Graph g = generate_graph(a.kind, a.n, a.p, a.seed);
    if (a.format == "dot")
        emit(a.out, emit_dot(g));
    else
        emit(a.out, graph_text(g, a.format));
    return kYes;
}

struct HadwigerArgs {
    std::string graph, witness, dot, engine = "both";
    int h = -1;
    std::uint64_t budget = SearchBudget{}.max_nodes;
};

int run_hadwiger(const HadwigerArgs & a) {
    Graph g = read_graph_file(a.graph);
    SearchBudget budget;
    budget.max_nodes = a.budget;
    if (a.engine == "branch")
        budget.engine = SearchEngine::branch_only;
    else if (a.engine == "contraction")
        budget.engine = SearchEngine::contraction_only;
    else if (a.engine != "both")
        throw std::invalid_argument("unknown engine '" + a.engine + "'");
    if (a.h >= 0) {
        MinorSearchResult r = find_clique_minor(g, a.h, budget);
        std::cout << "h " << a.h << "\nnodes " << r.nodes << "\nstatus "
                  << (r.status == SearchStatus::found         ? "found"
                      : r.status == SearchStatus::not_found   ? "not-found"
                                                              : "indeterminate")
                  << "\n";
        if (r.status == SearchStatus::found) {
            std::string w = format_minor_model(*r.model);
            if (!a.witness.empty())
                write_text_file(a.witness, w);
            else
                std::cout << w;
            if (!a.dot.empty()) write_text_file(a.dot, emit_dot(g, nullptr, &*r.model));
            return kYes;
        }
        return r.status == SearchStatus::not_found ? kNo : kBudget;
    }
    HadwigerResult r = hadwiger_number(g, budget);
    std::cout << "hadwiger " << r.value << "\nkind "
              << (r.kind == BoundKind::exact ? "exact" : "lower-bound") << "\nnodes "
              << r.nodes << "\n";
    std::string w = format_minor_model(r.model);
    if (!a.witness.empty())
        write_text_file(a.witness, w);
    else
        std::cout << w;
    if (!a.dot.empty()) write_text_file(a.dot, emit_dot(g, nullptr, &r.model));
    return r.kind == BoundKind::exact ? kYes : kBudget;
}

struct DomaticArgs {
    std::string graph, witness;
    int d = -1;
};

int run_domatic(const DomaticArgs & a) {
    Graph g = read_graph_file(a.graph);
    if (a.d >= 0) {
        auto fam = find_disjoint_dominating_sets(g, a.d);
        std::cout << "d " << a.d << "\nstatus " << (fam ? "found" : "not-found") << "\n";
        if (!fam) return kNo;
        std::string w = format_domatic_family(*fam);
        if (!a.witness.empty())
            write_text_file(a.witness, w);
        else
            std::cout << w;
        return kYes;
    }
    DomaticResult r = domatic_number(g);
    std::cout << "domatic " << r.value << "\n";
    std::string w = format_domatic_family(r.family);
    if (!a.witness.empty())
        write_text_file(a.witness, w);
    else
        std::cout << w;
    return kYes;
}

struct PathsArgs {
    std::string instance, witness;
    std::uint64_t budget = SearchBudget{}.max_nodes;
};

int run_paths(const PathsArgs & a) {
    DisjointPathsInstance inst = parse_paths_instance(read_text_file(a.instance));
    SearchBudget budget;
    budget.max_nodes = a.budget;
    PathsSearchResult r = find_disjoint_paths(inst, budget);
    std::cout << "k " << inst.pair_count() << "\nnodes " << r.nodes << "\nstatus "
              << (r.status == SearchStatus::found         ? "found"
                  : r.status == SearchStatus::not_found   ? "not-found"
                                                          : "indeterminate")
              << "\n";
    if (r.status == SearchStatus::found) {
        std::string w = format_path_set(*r.paths);
        if (!a.witness.empty())
            write_text_file(a.witness, w);
        else
            std::cout << w;
        return kYes;
    }
    return r.status == SearchStatus::not_found ? kNo : kBudget;
}

struct ReduceArgs {
    std::string from, graph, instance, out_graph, out_labeling, out_map, dot;
    std::string format = "graph6";
    int d = 1;
    bool no_strip = false;
};

int run_reduce(const ReduceArgs & a) {
    if (a.from == "domatic") {
        if (a.graph.empty()) throw std::invalid_argument("reduce: --graph is required");
        Graph g = read_graph_file(a.graph);
        if (a.no_strip) {
            LayeredInstance inst = build_layered_instance(g, a.d);
            std::cout << "kind layered\nh " << inst.h() << "\nvertices "
                      << inst.g_prime.vertex_count() << "\nedges "
                      << inst.g_prime.edge_count() << "\n";
            emit(a.out_graph, graph_text(inst.g_prime, a.format));
            if (!a.out_labeling.empty())
                write_text_file(a.out_labeling, format_labeling(inst.labeling));
            if (!a.dot.empty())
                write_text_file(a.dot, emit_dot(inst.g_prime, &inst.labeling));
            return kYes;
        }
        DomaticReduction red = reduce_domatic_to_hadwiger(g, a.d);
        const char * kind =
            red.kind == DomaticReduction::Kind::layered ? "layered"
            : red.kind == DomaticReduction::Kind::trivially_positive
                ? "trivially-positive"
                : "trivially-negative";
        std::cout << "kind " << kind << "\nh " << red.h << "\nvertices "
                  << red.g_prime.vertex_count() << "\nedges " << red.g_prime.edge_count()
                  << "\nstripped " << red.strip.stripped.size() << "\nd-core "
                  << red.strip.d_core << "\n";
        emit(a.out_graph, graph_text(red.g_prime, a.format));
        if (red.kind == DomaticReduction::Kind::layered) {
            if (!a.out_labeling.empty())
                write_text_file(a.out_labeling, format_labeling(red.labeling));
            if (!a.dot.empty())
                write_text_file(a.dot, emit_dot(red.g_prime, &red.labeling));
        } else if (!a.out_labeling.empty() || !a.dot.empty()) {
            std::cerr << "note: no labeling for a trivial instance\n";
        }
        return kYes;
    }
    if (a.from == "paths") {
        if (a.instance.empty())
            throw std::invalid_argument("reduce: --instance is required");
        DisjointPathsInstance inst = parse_paths_instance(read_text_file(a.instance));
        PathsReduction red = reduce_paths_to_hadwiger(inst);
        std::cout << "h " << red.h << "\nvertices " << red.g_prime.vertex_count()
                  << "\nedges " << red.g_prime.edge_count() << "\n";
        emit(a.out_graph, graph_text(red.g_prime, a.format));
        if (!a.out_map.empty()) write_text_file(a.out_map, format_paths_map(red.map));
        if (!a.dot.empty()) write_text_file(a.dot, emit_dot(red.g_prime));
        return kYes;
    }
    throw std::invalid_argument("reduce: --from must be domatic or paths");
}

struct VerifyArgs {
    std::string type, graph, witness, instance;
    std::string labeling, core, paths_map, gprime, translate_out;
    int expect = -1; // expected h / d / k, when given
};

int run_verify(const VerifyArgs & a) {
    Verdict verdict = Verdict::violation("unset");
    if (a.type == "clique_minor") {
        Graph g = read_graph_file(a.graph);
        MinorModel model = parse_minor_model(read_text_file(a.witness));
        verdict = verify_clique_minor_model(g, model);
        if (verdict.ok && a.expect >= 0 && model.order() != a.expect)
            verdict = Verdict::violation("model has " + std::to_string(model.order()) +
                                         " sets, expected " + std::to_string(a.expect));
        if (verdict.ok && !a.translate_out.empty()) {
            if (!a.labeling.empty()) {
                ReductionLabeling lab = parse_labeling(read_text_file(a.labeling));
                Graph core = read_graph_file(a.core);
                DomaticFamily fam = minor_model_to_domatic_witness(g, model, lab, core);
                write_text_file(a.translate_out, format_domatic_family(fam));
            } else if (!a.paths_map.empty()) {
                PathsReductionMap map = parse_paths_map(read_text_file(a.paths_map));
                DisjointPathsInstance inst =
                    parse_paths_instance(read_text_file(a.instance));
                PathSet ps = minor_model_to_paths_witness(g, model, map, inst);
                write_text_file(a.translate_out, format_path_set(ps));
            } else {
                throw std::invalid_argument(
                    "verify: translation needs --labeling/--core or "
                    "--paths-map/--instance");
            }
        }
    } else if (a.type == "domatic") {
        Graph g = read_graph_file(a.graph);
        DomaticFamily fam = parse_domatic_family(read_text_file(a.witness));
        verdict = verify_domatic_family(g, fam);
        if (verdict.ok && a.expect >= 0 && fam.order() != a.expect)
            verdict = Verdict::violation("family has " + std::to_string(fam.order()) +
                                         " sets, expected " + std::to_string(a.expect));
        if (verdict.ok && !a.translate_out.empty()) {
            ReductionLabeling lab = parse_labeling(read_text_file(a.labeling));
            Graph gp = read_graph_file(a.gprime);
            MinorModel model = domatic_witness_to_minor_model(g, fam, lab, gp);
            write_text_file(a.translate_out, format_minor_model(model));
        }
    } else if (a.type == "paths") {
        DisjointPathsInstance inst = parse_paths_instance(read_text_file(a.instance));
        PathSet ps = parse_path_set(read_text_file(a.witness));
        verdict = verify_path_set(inst, ps);
        if (verdict.ok && a.expect >= 0 && int(ps.paths.size()) != a.expect)
            verdict = Verdict::violation("path set has " +
                                         std::to_string(ps.paths.size()) +
                                         " paths, expected " + std::to_string(a.expect));
        if (verdict.ok && !a.translate_out.empty()) {
            PathsReductionMap map = parse_paths_map(read_text_file(a.paths_map));
            Graph gp = read_graph_file(a.gprime);
            PathsReduction red{gp, map.h, map};
            MinorModel model = paths_witness_to_minor_model(inst, ps, red);
            write_text_file(a.translate_out, format_minor_model(model));
        }
    } else {
        throw std::invalid_argument("verify: --type must be clique_minor, domatic, "
                                    "or paths");
    }
    if (verdict.ok) {
        std::cout << "valid\n";
        return kYes;
    }
    std::cout << "invalid: " << verdict.reason << "\n";
    return kNo;
}

struct CrossArgs {
    std::string reduction = "domatic", out;
    int max_n = 3, max_d = 3, max_k = 1;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    bool timings = false;
};

int run_crosscheck(const CrossArgs & a) {
    CrossCheckOptions opts;
    opts.budget.max_nodes = a.budget;
    opts.with_timings = a.timings;
    CrossCheckReport report;
    if (a.reduction == "domatic")
        report = crosscheck_domatic(exhaustive_domatic_corpus(a.max_n, a.max_d), opts);
    else if (a.reduction == "paths")
        report = crosscheck_paths(exhaustive_paths_corpus(a.max_n, a.max_k), opts);
    else
        throw std::invalid_argument("crosscheck: --reduction must be domatic or paths");
    emit(a.out, report.to_text(a.timings));
    return report.all_ok ? kYes : kNo;
}

} // namespace

int main(int argc, char ** argv) {
    CLI::App app{"exact solvers and instance transformations for clique minors, "
                 "domatic partitions, and vertex-disjoint paths"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    auto plain_help = [](CLI::App * cmd) {
        cmd->set_help_flag("--help", "print this help and exit");
        return cmd;
    };

    GenArgs gen;
    auto * cmd_gen = plain_help(app.add_subcommand("gen", "generate a graph"));
    cmd_gen->add_option("--kind", gen.kind,
                        "empty|complete|path|cycle|star|random");
    cmd_gen->add_option("--n", gen.n, "vertex count")->required();
    cmd_gen->add_option("--p", gen.p, "edge probability (random)");
    cmd_gen->add_option("--seed", gen.seed, "random seed");
    cmd_gen->add_option("--format", gen.format, "graph6|edgelist|dot");
    cmd_gen->add_option("--out", gen.out, "output file (default stdout)");

    HadwigerArgs had;
    auto * cmd_had = plain_help(app.add_subcommand("hadwiger", "clique-minor search"));
    cmd_had->add_option("--graph,--input", had.graph, "input graph file")->required();
    cmd_had->add_option("--h", had.h, "decide a K_h minor (omit to maximize)");
    cmd_had->add_option("--budget", had.budget, "search-node budget");
    cmd_had->add_option("--engine", had.engine, "both|branch|contraction");
    cmd_had->add_option("--witness", had.witness, "write the witness here");
    cmd_had->add_option("--dot", had.dot, "write a colored DOT rendering here");

    DomaticArgs dom;
    auto * cmd_dom = plain_help(app.add_subcommand("domatic", "disjoint dominating sets"));
    cmd_dom->add_option("--graph,--input", dom.graph, "input graph file")->required();
    cmd_dom->add_option("--d", dom.d, "decide d disjoint sets (omit to maximize)");
    cmd_dom->add_option("--witness", dom.witness, "write the witness here");

    PathsArgs pth;
    auto * cmd_pth = plain_help(app.add_subcommand("paths", "vertex-disjoint paths search"));
    cmd_pth->add_option("--instance,--input", pth.instance, "instance file")->required();
    cmd_pth->add_option("--budget", pth.budget, "search-node budget");
    cmd_pth->add_option("--witness", pth.witness, "write the witness here");

    ReduceArgs red;
    auto * cmd_red = plain_help(app.add_subcommand("reduce", "instance transformation"));
    cmd_red->add_option("--from", red.from, "domatic|paths")->required();
    cmd_red->add_option("--graph,--input", red.graph, "source graph (domatic)");
    cmd_red->add_option("--d", red.d, "source d (domatic)");
    cmd_red->add_flag("--no-strip", red.no_strip,
                      "build the layered instance without universal-vertex stripping");
    cmd_red->add_option("--instance", red.instance, "source instance (paths)");
    cmd_red->add_option("--out-graph", red.out_graph, "target graph file");
    cmd_red->add_option("--out-labeling", red.out_labeling, "layer labeling file");
    cmd_red->add_option("--out-map", red.out_map, "paths reduction map file");
    cmd_red->add_option("--format", red.format, "graph6|edgelist");
    cmd_red->add_option("--dot", red.dot, "write a DOT rendering here");

    VerifyArgs ver;
    auto * cmd_ver = plain_help(app.add_subcommand("verify", "check a witness"));
    cmd_ver->add_option("--type", ver.type, "clique_minor|domatic|paths")->required();
    cmd_ver->add_option("--graph", ver.graph, "graph the witness refers to");
    cmd_ver->add_option("--witness", ver.witness, "witness file")->required();
    cmd_ver->add_option("--instance", ver.instance, "paths instance file");
    cmd_ver->add_option("--expect", ver.expect, "require this many sets/paths");
    cmd_ver->add_option("--labeling", ver.labeling, "layer labeling file");
    cmd_ver->add_option("--core", ver.core, "stripped source graph file");
    cmd_ver->add_option("--paths-map", ver.paths_map, "paths reduction map file");
    cmd_ver->add_option("--gprime", ver.gprime, "target graph file");
    cmd_ver->add_option("--translate-out", ver.translate_out,
                        "translate the witness across the reduction into this file");

    CrossArgs crs;
    auto * cmd_crs = plain_help(app.add_subcommand("crosscheck", "reduction consistency sweep"));
    cmd_crs->add_option("--reduction", crs.reduction, "domatic|paths");
    cmd_crs->add_option("--max-n", crs.max_n, "largest source vertex count");
    cmd_crs->add_option("--max-d", crs.max_d, "largest d (domatic)");
    cmd_crs->add_option("--max-k", crs.max_k, "largest k (paths)");
    cmd_crs->add_option("--budget", crs.budget, "per-search node budget");
    cmd_crs->add_flag("--timings", crs.timings, "include per-instance timings");
    cmd_crs->add_option("--out", crs.out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (app.got_subcommand(cmd_gen)) return run_gen(gen);
        if (app.got_subcommand(cmd_had)) return run_hadwiger(had);
        if (app.got_subcommand(cmd_dom)) return run_domatic(dom);
        if (app.got_subcommand(cmd_pth)) return run_paths(pth);
        if (app.got_subcommand(cmd_red)) return run_reduce(red);
        if (app.got_subcommand(cmd_ver)) return run_verify(ver);
        if (app.got_subcommand(cmd_crs)) return run_crosscheck(crs);
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
