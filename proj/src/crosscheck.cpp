#include "minorkit/crosscheck.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "minorkit/domatic.hpp"

namespace minorkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish_record(CrossCheckReport & report, CrossCheckRecord rec) {
    rec.agree = !rec.undecided && rec.source_positive == rec.target_positive;
    if (!rec.agree && rec.note.empty()) rec.note = "answers differ";
    if (rec.agree) ++report.agree_count;
    if (!rec.agree || !rec.witness_ok) report.all_ok = false;
    report.records.push_back(std::move(rec));
}

} // namespace

std::string CrossCheckReport::to_text(bool with_timings) const {
    std::ostringstream out;
    out << "corpus: " << corpus << '\n';
    for (const auto & rec : records) {
        out << rec.name << ": source=" << (rec.source_positive ? "yes" : "no")
            << " target=" << (rec.undecided ? "?" : rec.target_positive ? "yes" : "no")
            << (rec.agree ? " agree" : " DISAGREE")
            << " witness=" << (rec.witness_ok ? "ok" : "FAILED");
        if (!rec.note.empty()) out << " (" << rec.note << ')';
        if (with_timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.6f", rec.seconds);
            out << " time=" << buf << 's';
        }
        out << '\n';
    }
    out << "AGREE " << agree_count << '/' << records.size() << '\n';
    return out.str();
}

CrossCheckReport crosscheck_domatic(const std::vector<DomaticCase> & cases,
                                    const CrossCheckOptions & opts) {
    CrossCheckReport report;
    report.corpus = "domatic-to-clique-minor, " + std::to_string(cases.size()) +
                    " instances";
    for (const auto & c : cases) {
        auto start = Clock::now();
        CrossCheckRecord rec;
        rec.name = c.name;
        rec.source_positive = find_disjoint_dominating_sets(c.g, c.d).has_value();

        DomaticReduction red = reduce_domatic_to_hadwiger(c.g, c.d);
        if (red.kind == DomaticReduction::Kind::layered) {
            Verdict audit = audit_reduction_structure(
                red.strip.core, red.strip.d_core, red.g_prime, red.labeling);
            if (!audit) {
                rec.witness_ok = false;
                rec.note = "structural audit: " + audit.reason;
            }
        }
        MinorSearchResult target = find_clique_minor(red.g_prime, red.h, opts.budget);
        if (target.status == SearchStatus::indeterminate) {
            rec.undecided = true;
            rec.note = "target search exhausted its budget";
            rec.seconds = seconds_since(start);
            finish_record(report, rec);
            continue;
        }
        rec.target_positive = target.status == SearchStatus::found;

        if (red.kind == DomaticReduction::Kind::layered && rec.target_positive &&
            rec.source_positive) {
            try {
                // forward: a solved core family must map to a valid model
                auto family = find_disjoint_dominating_sets(red.strip.core,
                                                            red.strip.d_core);
                if (!family) throw std::logic_error("core family disappeared");
                domatic_witness_to_minor_model(red.strip.core, *family, red.labeling,
                                               red.g_prime);
                // backward: the solver's own model must yield a valid family
                minor_model_to_domatic_witness(red.g_prime, *target.model,
                                               red.labeling, red.strip.core);
            } catch (const std::exception & e) {
                rec.witness_ok = false;
                rec.note = e.what();
            }
        }
        rec.seconds = seconds_since(start);
        finish_record(report, rec);
    }
    return report;
}

CrossCheckReport crosscheck_paths(const std::vector<PathsCase> & cases,
                                  const CrossCheckOptions & opts) {
    CrossCheckReport report;
    report.corpus = "disjoint-paths-to-clique-minor, " + std::to_string(cases.size()) +
                    " instances";
    for (const auto & c : cases) {
        auto start = Clock::now();
        CrossCheckRecord rec;
        rec.name = c.name;
        PathsSearchResult source = find_disjoint_paths(c.inst, opts.budget);
        PathsReduction red = reduce_paths_to_hadwiger(c.inst);
        MinorSearchResult target = find_clique_minor(red.g_prime, red.h, opts.budget);
        if (source.status == SearchStatus::indeterminate ||
            target.status == SearchStatus::indeterminate) {
            rec.undecided = true;
            rec.note = "a search exhausted its budget";
            rec.source_positive = source.status == SearchStatus::found;
            rec.seconds = seconds_since(start);
            finish_record(report, rec);
            continue;
        }
        rec.source_positive = source.status == SearchStatus::found;
        rec.target_positive = target.status == SearchStatus::found;

        if (rec.source_positive && rec.target_positive) {
            try {
                paths_witness_to_minor_model(c.inst, *source.paths, red);
                minor_model_to_paths_witness(red.g_prime, *target.model, red.map,
                                             c.inst);
            } catch (const std::exception & e) {
                rec.witness_ok = false;
                rec.note = e.what();
            }
        }
        rec.seconds = seconds_since(start);
        finish_record(report, rec);
    }
    return report;
}

std::vector<Graph> all_labeled_graphs(int n) {
    std::vector<Edge> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << all_edges.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all_edges.size());
         ++mask) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < all_edges.size(); ++e)
            if (mask & (std::uint64_t{1} << e)) edges.push_back(all_edges[e]);
        out.push_back(make_graph(n, edges));
    }
    return out;
}

std::vector<DomaticCase> exhaustive_domatic_corpus(int max_n, int max_d) {
    std::vector<DomaticCase> cases;
    for (int n = 1; n <= max_n; ++n) {
        auto graphs = all_labeled_graphs(n);
        for (std::size_t g = 0; g < graphs.size(); ++g)
            for (int d = 1; d <= max_d; ++d)
                cases.push_back({graphs[g],
                                 d,
                                 "n" + std::to_string(n) + "#" + std::to_string(g) +
                                     " d" + std::to_string(d)});
    }
    return cases;
}

namespace {

void pair_sets(int n, int k, int min_s, std::vector<std::pair<int, int>> & cur,
               std::vector<bool> & used,
               std::vector<std::vector<std::pair<int, int>>> & out) {
    if (int(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int s = min_s; s < n; ++s) {
        if (used[s]) continue;
        for (int t = s + 1; t < n; ++t) {
            if (used[t]) continue;
            used[s] = used[t] = true;
            cur.emplace_back(s, t);
            pair_sets(n, k, s + 1, cur, used, out);
            cur.pop_back();
            used[s] = used[t] = false;
        }
    }
}

} // namespace

std::vector<PathsCase> exhaustive_paths_corpus(int max_n, int max_k) {
    std::vector<PathsCase> cases;
    for (int n = 2; n <= max_n; ++n) {
        auto graphs = all_labeled_graphs(n);
        for (int k = 1; k <= max_k && 2 * k <= n; ++k) {
            std::vector<std::vector<std::pair<int, int>>> pair_choices;
            std::vector<std::pair<int, int>> cur;
            std::vector<bool> used(n, false);
            pair_sets(n, k, 0, cur, used, pair_choices);
            for (std::size_t g = 0; g < graphs.size(); ++g)
                for (std::size_t p = 0; p < pair_choices.size(); ++p)
                    cases.push_back(
                        {make_paths_instance(graphs[g], pair_choices[p]),
                         "n" + std::to_string(n) + "#" + std::to_string(g) + " k" +
                             std::to_string(k) + "p" + std::to_string(p)});
        }
    }
    return cases;
}

} // namespace minorkit
