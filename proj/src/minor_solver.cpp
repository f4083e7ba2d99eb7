#include "minorkit/minor_solver.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace minorkit {

int hadwiger_upper_bound(const Graph & g) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    for (int h = n; h >= 1; --h)
        if ((long long)h * (h - 1) / 2 <= m) return h;
    return 0;
}

namespace {

struct EngineOutcome {
    bool found = false;
    MinorModel model;
};

MinorModel checked(const Graph & g, MinorModel model) {
    Verdict v = verify_clique_minor_model(g, model);
    if (!v.ok)
        throw std::logic_error("internal error: search produced an invalid model: " +
                               v.reason);
    return model;
}

// Branch-set extension search.  Vertices are considered in id order; each is
// either the start of a new branch set, added to any existing set, or left
// unused.  A set's members need not be connected while it is being built:
// they are kept as fragments (the connected pieces of the set so far), a
// newly added vertex merges every fragment it has an edge to, and a finished
// model requires one fragment per set.  Fragments are what make the
// enumeration complete: a connected set whose lowest vertices are not
// mutually adjacent can only be built by placing disconnected pieces first
// and merging them later.  Because a set is created when its lowest vertex
// is reached, set families are enumerated once per choice of
// representatives, which removes the symmetry between equal models.
class BranchEngine {
public:
    BranchEngine(const Graph & g, int h) : g_(g), n_(g.vertex_count()), h_(h) {
        suffix_.assign(n_ + 1, Bitset(n_));
        for (int v = n_ - 1; v >= 0; --v) {
            suffix_[v] = suffix_[v + 1];
            suffix_[v].set(v);
        }
        stack_.push_back(Frame{});
    }

    // Charges at most slice_cap nodes to `used`.  Returns an outcome when the
    // search finished (found or exhausted); nullopt when merely paused.
    std::optional<EngineOutcome> run(std::uint64_t slice_cap, std::uint64_t & used) {
        std::uint64_t start = used;
        while (true) {
            if (stack_.empty()) return EngineOutcome{false, {}};
            if (used - start >= slice_cap) return std::nullopt;
            Frame & f = stack_.back();
            int v = f.st.next;
            int k = int(f.st.sets.size());
            // choice codes: 0 = new set, 1..k = join that set, k+1 = skip v
            if (f.choice > k + 1) {
                stack_.pop_back();
                continue;
            }
            int c = f.choice++;
            if (c == 0 && k >= h_) continue;
            ++used;
            State child = f.st;
            apply(child, v, c, k);
            int verdict = evaluate(child);
            if (verdict == kPrune) continue;
            if (verdict != kContinue)
                return EngineOutcome{true, assemble(child, verdict == kFoundEndgame)};
            stack_.push_back(Frame{std::move(child), 0});
        }
    }

private:
    struct SetInfo {
        Bitset members;
        Bitset nbrs;                // union of the members' neighborhoods
        std::vector<Bitset> frags;  // connected pieces; pairwise non-adjacent
    };
    struct State {
        int next = 0; // next vertex to place
        std::vector<SetInfo> sets;
        std::vector<Bitset> adj; // adj[i] = indices of sets joined to set i
        int pending = 0;         // set pairs not yet joined by an edge
    };
    struct Frame {
        State st;
        int choice = 0;
    };

    static constexpr int kContinue = 0, kPrune = 1, kFound = 2, kFoundEndgame = 3;

    void apply(State & s, int v, int c, int k) const {
        if (c == 0) {
            SetInfo si;
            si.members = Bitset(n_);
            si.members.set(v);
            si.nbrs = g_.neighbors(v);
            si.frags.push_back(si.members);
            s.adj.push_back(Bitset(h_));
            for (int j = 0; j < k; ++j) {
                if (g_.neighbors(v).intersects(s.sets[j].members)) {
                    s.adj[k].set(j);
                    s.adj[j].set(k);
                } else {
                    ++s.pending;
                }
            }
            s.sets.push_back(std::move(si));
        } else if (c <= k) {
            int i = c - 1;
            s.sets[i].members.set(v);
            s.sets[i].nbrs |= g_.neighbors(v);
            // v swallows every fragment it touches; touching none, it starts
            // a fragment of its own that later vertices must merge home.
            auto & fr = s.sets[i].frags;
            Bitset merged(n_);
            merged.set(v);
            std::size_t keep = 0;
            for (std::size_t a = 0; a < fr.size(); ++a) {
                if (g_.neighbors(v).intersects(fr[a])) {
                    merged |= fr[a];
                } else {
                    if (keep != a) fr[keep] = std::move(fr[a]);
                    ++keep;
                }
            }
            fr.resize(keep);
            fr.push_back(std::move(merged));
            for (int j = 0; j < k; ++j) {
                if (j != i && !s.adj[i].test(j) &&
                    g_.neighbors(v).intersects(s.sets[j].members)) {
                    s.adj[i].set(j);
                    s.adj[j].set(i);
                    --s.pending;
                }
            }
        }
        s.next = v + 1;
    }

    // Decides the fate of a freshly built state.  All pruning rules here are
    // exact: a state is discarded only when no completion of it can reach an
    // h-set model.  The accounting invariant is slack = k + r - h, the number
    // of remaining vertices that may be spent on anything other than starting
    // a new branch set (joins and skips both consume slack).
    int evaluate(const State & s) const {
        int k = int(s.sets.size());
        int r = n_ - s.next;
        int slack = k + r - h_;
        if (slack < 0) return kPrune; // too few vertices left to reach h sets
        int multi = 0; // sets still waiting for their fragments to merge
        for (const auto & si : s.sets)
            if (si.frags.size() > 1) ++multi;
        if (k == h_ && s.pending == 0 && multi == 0) return kFound;
        if (r == 0) return kPrune;
        const Bitset & R = suffix_[s.next];

        if (slack == 0) {
            // Every remaining vertex is forced to become its own branch set;
            // the completion exists iff the checks below all pass.
            if (s.pending != 0 || multi != 0) return kPrune;
            bool ok = true;
            R.for_each([&](int v) {
                if (!ok) return;
                Bitset t = g_.neighbors(v);
                t &= R;
                if (t.count() != r - 1) ok = false; // future singletons pairwise adjacent
            });
            for (int i = 0; i < k && ok; ++i)
                if (!R.is_subset_of(s.sets[i].nbrs)) ok = false;
            return ok ? kFoundEndgame : kPrune;
        }

        // Join demand.  A set must absorb at least one more vertex when its
        // fragments are not yet merged, and also when more than `slack` of
        // the remaining vertices have no edge to it: at most `slack` of those
        // can be absorbed or skipped, so one would become a new set the
        // unjoined current set has no edge to.  A set that must grow but has
        // no remaining neighbor at all is stuck, and every growing set spends
        // one slack unit on a distinct vertex.
        int demanding = 0;
        for (int i = 0; i < k; ++i) {
            bool grow = s.sets[i].frags.size() > 1;
            if (!grow) {
                Bitset u = R;
                u.subtract(s.sets[i].nbrs);
                grow = u.count() > slack;
            }
            if (grow) {
                ++demanding;
                if (!R.intersects(s.sets[i].nbrs)) return kPrune;
            }
        }
        if (demanding > slack) return kPrune;

        // Connected components of the remaining vertices.
        std::vector<Bitset> comps;
        {
            Bitset todo = R;
            while (todo.any()) {
                Bitset comp(n_);
                comp.set(todo.first());
                Bitset frontier = comp;
                while (frontier.any()) {
                    Bitset nx(n_);
                    frontier.for_each([&](int w) { nx |= g_.neighbors(w); });
                    nx &= todo;
                    nx.subtract(comp);
                    comp |= nx;
                    frontier = nx;
                }
                todo.subtract(comp);
                comps.push_back(std::move(comp));
            }
        }
        int nc = int(comps.size());
        std::vector<Bitset> comp_adj(k, Bitset(nc));
        for (int i = 0; i < k; ++i)
            for (int cmp = 0; cmp < nc; ++cmp)
                if (comps[cmp].intersects(s.sets[i].nbrs)) comp_adj[i].set(cmp);

        // A pending pair can only become adjacent through growth into a
        // remaining component that reaches both sets.
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!s.adj[i].test(j) && !comp_adj[i].intersects(comp_adj[j]))
                    return kPrune;

        // Fragments of one set merge through paths of remaining vertices, and
        // any such path stays inside a single remaining component, so all of
        // a set's fragments must be linked up by components they share.
        for (int i = 0; i < k; ++i) {
            const auto & fr = s.sets[i].frags;
            int f = int(fr.size());
            if (f <= 1) continue;
            std::vector<Bitset> fcomp(f, Bitset(nc));
            for (int a = 0; a < f; ++a) {
                Bitset nb(n_);
                fr[a].for_each([&](int x) { nb |= g_.neighbors(x); });
                for (int cmp = 0; cmp < nc; ++cmp)
                    if (nb.intersects(comps[cmp])) fcomp[a].set(cmp);
            }
            std::vector<bool> linked(f, false);
            linked[0] = true;
            Bitset reach = fcomp[0];
            int grouped = 1;
            for (bool grew = true; grew;) {
                grew = false;
                for (int a = 1; a < f; ++a) {
                    if (linked[a] || !reach.intersects(fcomp[a])) continue;
                    linked[a] = true;
                    reach |= fcomp[a];
                    ++grouped;
                    grew = true;
                }
            }
            if (grouped < f) return kPrune;
        }

        // Every future branch set lives inside one remaining component and
        // must end up adjacent to every current set, which growth inside the
        // component cannot change for components with no edge to a set.
        if (k < h_) {
            int capacity = 0;
            for (int cmp = 0; cmp < nc; ++cmp) {
                bool all = true;
                for (int i = 0; i < k && all; ++i)
                    if (!comp_adj[i].test(cmp)) all = false;
                if (all) capacity += comps[cmp].count();
            }
            if (capacity < h_ - k) return kPrune;
        }
        return kContinue;
    }

    MinorModel assemble(const State & s, bool with_singletons) const {
        MinorModel m;
        for (const auto & si : s.sets) m.branch_sets.push_back(si.members.to_vector());
        if (with_singletons)
            suffix_[s.next].for_each([&](int v) { m.branch_sets.push_back({v}); });
        return m;
    }

    const Graph & g_;
    int n_, h_;
    std::vector<Bitset> suffix_; // suffix_[v] = {v, v+1, ..., n-1}
    std::vector<Frame> stack_;
};

// Near-spanning engine: when h is within a few units of n, any model leaves
// at most c = n - h vertices to merge or drop, so enumerating all partitions
// reachable by at most c edge contractions (deduplicated) and testing each
// contracted graph for a K_h subgraph is a complete decision procedure.
class ContractionEngine {
public:
    ContractionEngine(const Graph & g, int h)
        : g_(g), n_(g.vertex_count()), h_(h), levels_(n_ - h) {
        std::vector<int> rep(n_);
        for (int v = 0; v < n_; ++v) rep[v] = v;
        seen_.insert(key(rep));
        queue_.emplace_back(std::move(rep), 0);
    }

    std::optional<EngineOutcome> run(std::uint64_t slice_cap, std::uint64_t & used) {
        std::uint64_t start = used;
        while (true) {
            if (queue_.empty()) return EngineOutcome{false, {}};
            if (used - start >= slice_cap) return std::nullopt;
            auto [rep, level] = std::move(queue_.front());
            queue_.pop_front();
            ++used;
            if (auto model = process(rep, level, used))
                return EngineOutcome{true, std::move(*model)};
        }
    }

private:
    // rep[v] = lowest vertex of v's block; blocks are connected by
    // construction since merges follow edges of the contracted graph.
    std::string key(const std::vector<int> & rep) const {
        std::string k(rep.size() * 2, '\0');
        for (std::size_t i = 0; i < rep.size(); ++i) {
            k[2 * i] = char(rep[i] & 0xff);
            k[2 * i + 1] = char((rep[i] >> 8) & 0xff);
        }
        return k;
    }

    std::optional<MinorModel> process(const std::vector<int> & rep, int level,
                                      std::uint64_t & used) {
        std::vector<int> idx(n_, -1);
        std::vector<int> reps;
        for (int v = 0; v < n_; ++v)
            if (rep[v] == v) {
                idx[v] = int(reps.size());
                reps.push_back(v);
            }
        int nb = int(reps.size());
        std::vector<Bitset> members(nb, Bitset(n_));
        for (int v = 0; v < n_; ++v) members[idx[rep[v]]].set(v);

        std::vector<Bitset> brow(nb, Bitset(nb));
        long long medges = 0;
        for (int u = 0; u < n_; ++u)
            g_.neighbors(u).for_each([&](int v) {
                if (v <= u) return;
                int bu = idx[rep[u]], bv = idx[rep[v]];
                if (bu != bv && !brow[bu].test(bv)) {
                    brow[bu].set(bv);
                    brow[bv].set(bu);
                    ++medges;
                }
            });
        // Contractions never increase the edge count, so when the count is
        // already below what K_h needs the whole subtree is dead.
        if ((long long)h_ * (h_ - 1) / 2 > medges) return std::nullopt;

        std::vector<Bitset> comp(nb, Bitset(nb));
        for (int u = 0; u < nb; ++u)
            for (int v = u + 1; v < nb; ++v)
                if (!brow[u].test(v)) {
                    comp[u].set(v);
                    comp[v].set(u);
                }
        Bitset alive(nb);
        for (int b = 0; b < nb; ++b) alive.set(b);
        if (auto blocks = clique_blocks(comp, nb, nb - h_, alive, used)) {
            MinorModel m;
            for (int b : *blocks) m.branch_sets.push_back(members[b].to_vector());
            return m;
        }

        if (level < levels_) {
            for (int bu = 0; bu < nb; ++bu)
                brow[bu].for_each([&](int bv) {
                    if (bv <= bu) return;
                    std::vector<int> child = rep;
                    int lo = reps[bu], hi = reps[bv];
                    for (int v = 0; v < n_; ++v)
                        if (child[v] == hi) child[v] = lo;
                    std::string ck = key(child);
                    if (seen_.insert(std::move(ck)).second)
                        queue_.emplace_back(std::move(child), level + 1);
                });
        }
        return std::nullopt;
    }

    // K_h subgraph test as a bounded vertex cover of the complement: drop at
    // most `allowance` blocks until no complement edge is left, then any h of
    // the survivors are pairwise adjacent.
    std::optional<std::vector<int>> clique_blocks(const std::vector<Bitset> & comp,
                                                  int nb, int allowance, Bitset & alive,
                                                  std::uint64_t & used) {
        ++used;
        int eu = -1, ev = -1;
        for (int u = 0; u < nb && eu < 0; ++u) {
            if (!alive.test(u)) continue;
            for (int v = u + 1; v < nb; ++v)
                if (alive.test(v) && comp[u].test(v)) {
                    eu = u;
                    ev = v;
                    break;
                }
        }
        if (eu < 0) {
            std::vector<int> blocks;
            alive.for_each([&](int b) {
                if (int(blocks.size()) < h_) blocks.push_back(b);
            });
            return blocks;
        }
        if (allowance == 0) return std::nullopt;
        for (int drop : {eu, ev}) {
            alive.reset(drop);
            auto r = clique_blocks(comp, nb, allowance - 1, alive, used);
            alive.set(drop);
            if (r) return r;
        }
        return std::nullopt;
    }

    const Graph & g_;
    int n_, h_, levels_;
    std::deque<std::pair<std::vector<int>, int>> queue_;
    std::unordered_set<std::string> seen_;
};

} // namespace

MinorSearchResult find_clique_minor(const Graph & g, int h, SearchBudget budget) {
    if (h < 0) throw std::invalid_argument("find_clique_minor: h must be nonnegative");
    int n = g.vertex_count();
    MinorSearchResult res;
    if (h == 0) {
        res.status = SearchStatus::found;
        res.model = MinorModel{};
        return res;
    }
    if (h > n) {
        res.status = SearchStatus::not_found;
        return res;
    }
    if (h == 1) {
        res.status = SearchStatus::found;
        res.model = MinorModel{{{0}}};
        return res;
    }
    if (h > hadwiger_upper_bound(g)) {
        res.status = SearchStatus::not_found; // refuted by edge counting
        return res;
    }

    std::optional<BranchEngine> branch;
    std::optional<ContractionEngine> contraction;
    if (budget.engine != SearchEngine::contraction_only) branch.emplace(g, h);
    if (budget.engine == SearchEngine::contraction_only ||
        (budget.engine == SearchEngine::both &&
         n - h <= budget.near_spanning_threshold))
        contraction.emplace(g, h);

    constexpr std::uint64_t quantum = 4096;
    std::uint64_t used = 0;
    auto finish = [&](EngineOutcome out) {
        res.nodes = used;
        if (out.found) {
            res.status = SearchStatus::found;
            res.model = checked(g, std::move(out.model));
        } else {
            res.status = SearchStatus::not_found;
        }
        return res;
    };
    while (used < budget.max_nodes) {
        if (branch) {
            std::uint64_t slice =
                std::min<std::uint64_t>(quantum, budget.max_nodes - used);
            if (auto out = branch->run(slice, used)) return finish(std::move(*out));
        }
        if (contraction && used < budget.max_nodes) {
            std::uint64_t slice =
                std::min<std::uint64_t>(quantum, budget.max_nodes - used);
            if (auto out = contraction->run(slice, used)) return finish(std::move(*out));
        }
    }
    res.status = SearchStatus::indeterminate;
    res.nodes = used;
    return res;
}

HadwigerResult hadwiger_number(const Graph & g, SearchBudget budget) {
    int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("hadwiger_number: graph must have at least one vertex");
    HadwigerResult out;
    std::uint64_t used = 0;
    bool incomplete = false;
    for (int h = hadwiger_upper_bound(g); h >= 2; --h) {
        SearchBudget b = budget;
        b.max_nodes = budget.max_nodes > used ? budget.max_nodes - used : 0;
        MinorSearchResult r = find_clique_minor(g, h, b);
        used += r.nodes;
        if (r.status == SearchStatus::found) {
            out.kind = incomplete ? BoundKind::lower_bound : BoundKind::exact;
            out.value = h;
            out.model = std::move(*r.model);
            out.nodes = used;
            return out;
        }
        if (r.status == SearchStatus::indeterminate) incomplete = true;
    }
    out.kind = incomplete ? BoundKind::lower_bound : BoundKind::exact;
    out.value = 1;
    out.model = MinorModel{{{0}}};
    out.nodes = used;
    return out;
}

} // namespace minorkit
