#include "fpss/block_graphs.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <random>

#include "fpss/classes.hpp"
#include "fpss/errors.hpp"

namespace fpss {

TFlowOracle::TFlowOracle(int n, int t, SeparatingFamily family,
                         std::vector<std::vector<int>> components,
                         std::vector<std::pair<VertexId, VertexId>> forest_edges)
    : n_(n), t_(t), family_(std::move(family)), family_components_(std::move(components)) {
    member_slot_.resize(family_.subsets.size());
    for (std::size_t i = 0; i < family_.subsets.size(); ++i) {
        member_slot_[i].assign(n_, -1);
        for (std::size_t s = 0; s < family_.subsets[i].size(); ++s)
            member_slot_[i][family_.subsets[i][s]] = static_cast<int>(s);
    }
    forest_adj_.assign(n_, std::vector<char>(n_, 0));
    for (auto [u, v] : forest_edges) forest_adj_[u][v] = forest_adj_[v][u] = 1;
    memo_.assign(n_, std::vector<signed char>(n_, -1));
}

bool TFlowOracle::connected_choice(VertexId x, VertexId y, const std::vector<int>& avoid) const {
    for (std::size_t i = 0; i < family_.subsets.size(); ++i) {
        if (member_slot_[i][x] < 0 || member_slot_[i][y] < 0) continue;
        bool clean = true;
        for (int s : avoid)
            if (member_slot_[i][s] >= 0) {
                clean = false;
                break;
            }
        if (!clean) continue;
        return family_components_[i][member_slot_[i][x]] == family_components_[i][member_slot_[i][y]];
    }
    throw SketchFailure("separating family missed a (pair, set) query");
}

bool TFlowOracle::edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (forest_adj_[u][v]) return true;
    if (memo_[u][v] >= 0) return memo_[u][v] == 1;
    // Edge of the reconstruction iff x,y stay connected for every choice of
    // a separator candidate S with |S| <= t.
    bool is_edge = true;
    std::vector<int> avoid;
    std::function<bool(int, int)> all_s = [&](int start, int budget) -> bool {
        if (!connected_choice(u, v, avoid)) return false;
        if (budget == 0) return true;
        for (int s = start; s < n_; ++s) {
            if (s == u || s == v) continue;
            avoid.push_back(s);
            bool ok = all_s(s + 1, budget - 1);
            avoid.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    is_edge = all_s(0, t_);
    memo_[u][v] = memo_[v][u] = is_edge ? 1 : 0;
    return is_edge;
}

int TFlowOracle::degree_in_reconstruction(VertexId v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && edge(v, u)) ++d;
    return d;
}

namespace {

SeparatingFamily family_for(int w, int t) {
    if (w >= t + 2) return graph_separating(w, t);
    // Degenerate sizes: the family of all pairs separates every (pair, S).
    SeparatingFamily fam;
    fam.n = w;
    fam.k = t;
    fam.l = 2;
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v) fam.subsets.push_back({u, v});
    return fam;
}

}  // namespace

ReconstructionOutcome reconstruct_tflow(const ParsedStream& stream, int n, int t,
                                        std::uint64_t seed, const std::vector<VertexId>& subset,
                                        SpaceLedger* ledger) {
    std::vector<VertexId> verts = subset;
    if (verts.empty())
        for (int v = 0; v < n; ++v) verts.push_back(v);
    int w = static_cast<int>(verts.size());
    ReconstructionOutcome out;
    if (w == 0) {
        out.in_class = true;
        out.oracle = std::make_shared<TFlowOracle>(0, t, SeparatingFamily{},
                                                   std::vector<std::vector<int>>{},
                                                   std::vector<std::pair<VertexId, VertexId>>{});
        return out;
    }
    std::vector<int> local(n, -1);
    for (int i = 0; i < w; ++i) local[verts[i]] = i;

    SeparatingFamily fam = family_for(w, t);
    std::vector<ConnectivitySketch> sketches;
    sketches.reserve(fam.subsets.size());
    std::vector<std::vector<int>> slot_of(fam.subsets.size());
    for (std::size_t i = 0; i < fam.subsets.size(); ++i) {
        sketches.emplace_back(static_cast<int>(fam.subsets[i].size()), 3,
                              seed ^ (0x51edULL * (i + 1)));
        slot_of[i].assign(w, -1);
        for (std::size_t s = 0; s < fam.subsets[i].size(); ++s)
            slot_of[i][fam.subsets[i][s]] = static_cast<int>(s);
    }
    std::vector<int> degree(w, 0);

    // Streaming phase: one pass over the (filtered) events.
    for (const auto& e : stream.events) {
        if (e.u >= n || e.v >= n) continue;
        int lu = local[e.u], lv = local[e.v];
        if (lu < 0 || lv < 0) continue;
        int sign = e.op == StreamOp::Insert ? 1 : -1;
        degree[lu] += sign;
        degree[lv] += sign;
        for (std::size_t i = 0; i < fam.subsets.size(); ++i) {
            int su = slot_of[i][lu], sv = slot_of[i][lv];
            if (su >= 0 && sv >= 0) sketches[i].update(su, sv, sign);
        }
    }
    if (ledger) {
        std::size_t words = degree.size();
        for (const auto& sk : sketches) words += sk.state_words();
        auto id = ledger->add_consumer("tflow");
        ledger->set_usage(id, words);
    }

    // Post-processing: forests and component partitions per family subset.
    std::vector<std::vector<int>> comps(fam.subsets.size());
    std::vector<std::pair<VertexId, VertexId>> forest;
    for (std::size_t i = 0; i < fam.subsets.size(); ++i) {
        auto edges = sketches[i].spanning_forest();
        comps[i] = sketches[i].components();
        for (auto [su, sv] : edges)
            forest.emplace_back(fam.subsets[i][su], fam.subsets[i][sv]);
    }
    std::sort(forest.begin(), forest.end());
    forest.erase(std::unique(forest.begin(), forest.end()), forest.end());

    out.oracle = std::make_shared<TFlowOracle>(w, t, std::move(fam), std::move(comps),
                                               std::move(forest));
    out.in_class = true;
    for (int v = 0; v < w && out.in_class; ++v)
        if (out.oracle->degree_in_reconstruction(v) != degree[v]) out.in_class = false;
    return out;
}

ReconstructionOutcome reconstruct_tblock(const ParsedStream& stream, int n, int t,
                                         std::uint64_t seed, const std::vector<VertexId>& subset,
                                         SpaceLedger* ledger) {
    ReconstructionOutcome flow = reconstruct_tflow(stream, n, t, seed, subset, ledger);
    if (!flow.in_class) {
        flow.in_class = false;
        return flow;
    }
    // Chordality: greedily eliminate simplicial vertices through the oracle.
    int w = flow.oracle->n();
    std::vector<char> alive(w, 1);
    int remaining = w;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < w && pick < 0; ++v) {
            if (!alive[v]) continue;
            std::vector<int> nb;
            for (int u = 0; u < w; ++u)
                if (u != v && alive[u] && flow.oracle->edge(v, u)) nb.push_back(u);
            bool simplicial = true;
            for (std::size_t i = 0; i < nb.size() && simplicial; ++i)
                for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j)
                    if (!flow.oracle->edge(nb[i], nb[j])) simplicial = false;
            if (simplicial) pick = v;
        }
        if (pick < 0) {
            flow.in_class = false;
            return flow;
        }
        alive[pick] = 0;
        --remaining;
    }
    return flow;
}

// ---------------------------------------------------------------------------
// Maximal-clique counting and BVD post-processing
// ---------------------------------------------------------------------------

long long count_cliques_containing(const ExplicitGraph& g, VertexId v) {
    // sigma: v first, the rest in index order.
    std::vector<int> sigma_of(g.n);
    std::vector<int> by_sigma(g.n);
    int next = 0;
    sigma_of[v] = next;
    by_sigma[next++] = v;
    for (int u = 0; u < g.n; ++u)
        if (u != v) {
            sigma_of[u] = next;
            by_sigma[next++] = u;
        }
    std::vector<int> clique{v};

    std::function<long long(void)> count = [&]() -> long long {
        long long total = 0;
        int max_sigma = 0;
        for (int x : clique) max_sigma = std::max(max_sigma, sigma_of[x]);
        bool any_common = false;
        for (int s = 0; s < g.n; ++s) {
            int u = by_sigma[s];
            bool in_clique = std::find(clique.begin(), clique.end(), u) != clique.end();
            if (in_clique) continue;
            bool common = true;
            for (int x : clique)
                if (!g.has_edge(u, x)) {
                    common = false;
                    break;
                }
            if (!common) continue;
            any_common = true;
            if (sigma_of[u] <= max_sigma) continue;  // counted in an earlier branch
            clique.push_back(u);
            total += count();
            clique.pop_back();
        }
        if (total == 0) return any_common ? 0 : 1;  // maximal iff no common neighbor at all
        return total;
    };
    return count();
}

std::vector<VertexId> peel_single_clique_vertices(const ExplicitGraph& g) {
    std::vector<VertexId> labels(g.n);
    for (int i = 0; i < g.n; ++i) labels[i] = i;
    ExplicitGraph cur = g;
    while (cur.n > 0) {
        int pick = -1;
        for (int v = 0; v < cur.n && pick < 0; ++v)
            if (count_cliques_containing(cur, v) == 1) pick = v;
        if (pick < 0) break;
        std::vector<VertexId> keep;
        for (int v = 0; v < cur.n; ++v)
            if (v != pick) keep.push_back(v);
        std::vector<VertexId> new_labels;
        for (int v : keep) new_labels.push_back(labels[v]);
        cur = cur.induced(keep);
        labels = std::move(new_labels);
    }
    return labels;
}

std::vector<char> mark_degree_two_chain(const ExplicitGraph& g) {
    std::vector<char> mark(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 2) continue;
        if (g.degree(g.adj[v][0]) == 2 && g.degree(g.adj[v][1]) == 2) mark[v] = 1;
    }
    return mark;
}

namespace {

struct Labeled {
    ExplicitGraph g;
    std::vector<VertexId> labels;

    Labeled without(int v) const {
        std::vector<VertexId> keep;
        for (int u = 0; u < g.n; ++u)
            if (u != v) keep.push_back(u);
        Labeled out;
        out.g = g.induced(keep);
        for (int u : keep) out.labels.push_back(labels[u]);
        return out;
    }
    Labeled keep_only(const std::vector<int>& keep) const {
        Labeled out;
        out.g = g.induced(keep);
        for (int u : keep) out.labels.push_back(labels[u]);
        return out;
    }
};

// First induced C4 or D4 (4-subset scan); empty when {C4,D4}-free.
std::vector<int> find_c4_or_d4(const ExplicitGraph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    int verts[4] = {a, b, c, d};
                    int m = 0;
                    int deg[4] = {0, 0, 0, 0};
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.has_edge(verts[i], verts[j])) {
                                ++m;
                                ++deg[i];
                                ++deg[j];
                            }
                    // C4: 4 edges all degree 2; D4: 5 edges
                    bool c4 = m == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2;
                    bool d4 = m == 5;
                    if (c4 || d4) return {a, b, c, d};
                }
    return {};
}

// Reduce to the Lemma premises: peel single-clique vertices and resolve
// isolated cycle components (length >= 4). Returns false when the budget dies.
bool reduce(Labeled& cur, int& k, std::vector<VertexId>& picks) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto kept = peel_single_clique_vertices(cur.g);
        if (static_cast<int>(kept.size()) < cur.g.n) {
            cur = cur.keep_only(kept);
            changed = true;
        }
        if (cur.g.n == 0) return true;
        // isolated cycle components
        auto comp = cur.g.component_ids();
        int nc = *std::max_element(comp.begin(), comp.end()) + 1;
        for (int c = 0; c < nc; ++c) {
            std::vector<int> members;
            for (int v = 0; v < cur.g.n; ++v)
                if (comp[v] == c) members.push_back(v);
            if (members.size() < 4) continue;
            bool cycle = true;
            for (int v : members)
                if (cur.g.degree(v) != 2) {
                    cycle = false;
                    break;
                }
            if (!cycle) continue;
            if (k == 0) return false;
            picks.push_back(cur.labels[members[0]]);
            --k;
            std::vector<int> keep;
            for (int v = 0; v < cur.g.n; ++v)
                if (comp[v] != c) keep.push_back(v);
            cur = cur.keep_only(keep);
            changed = true;
            break;  // recompute components
        }
    }
    return true;
}

bool stage2_once(const Labeled& leaf, int k, std::mt19937_64& rng, std::vector<VertexId>& sol) {
    Labeled cur = leaf;
    std::vector<VertexId> picks;
    while (true) {
        if (!reduce(cur, k, picks)) return false;
        if (cur.g.n == 0) {
            sol = picks;
            return true;
        }
        if (k == 0) return false;
        auto mark = mark_degree_two_chain(cur.g);
        std::vector<long long> weight(cur.g.n, 0);
        long long total = 0;
        for (int v = 0; v < cur.g.n; ++v) {
            if (mark[v]) continue;
            weight[v] = count_cliques_containing(cur.g, v);
            total += weight[v];
        }
        if (total == 0) return false;
        std::uniform_int_distribution<long long> dist(0, total - 1);
        long long roll = dist(rng);
        int chosen = -1;
        for (int v = 0; v < cur.g.n; ++v) {
            if (mark[v]) continue;
            if (roll < weight[v]) {
                chosen = v;
                break;
            }
            roll -= weight[v];
        }
        assert(chosen >= 0 && !mark[chosen]);
        picks.push_back(cur.labels[chosen]);
        cur = cur.without(chosen);
        --k;
    }
}

}  // namespace

SolveResult solve_bvd(const ExplicitGraph& g, int k, std::uint64_t seed, int reps_factor) {
    SolveResult res;
    if (k < 0) return res;

    // Stage 1: branch on explicit C4 / D4 occurrences.
    struct Leaf {
        Labeled state;
        int k_left;
        std::vector<VertexId> acc;
    };
    std::vector<Leaf> leaves;
    std::function<void(Labeled, int, std::vector<VertexId>)> stage1 =
        [&](Labeled cur, int budget, std::vector<VertexId> acc) {
            ++res.branch_nodes;
            auto bad = find_c4_or_d4(cur.g);
            if (bad.empty()) {
                leaves.push_back({std::move(cur), budget, std::move(acc)});
                return;
            }
            if (budget == 0) return;
            for (int v : bad) {
                auto next_acc = acc;
                next_acc.push_back(cur.labels[v]);
                stage1(cur.without(v), budget - 1, std::move(next_acc));
            }
        };
    Labeled root;
    root.g = g;
    root.labels.resize(g.n);
    for (int i = 0; i < g.n; ++i) root.labels[i] = i;
    stage1(root, k, {});
    if (leaves.empty()) return res;  // every branch exceeded the budget

    long long reps = static_cast<long long>(
        std::ceil(static_cast<double>(reps_factor) * std::pow(17.0, k)));
    std::mt19937_64 rng(seed);
    for (long long rep = 0; rep < reps; ++rep) {
        for (const auto& leaf : leaves) {
            std::vector<VertexId> tail;
            if (!stage2_once(leaf.state, leaf.k_left, rng, tail)) continue;
            std::vector<VertexId> sol = leaf.acc;
            sol.insert(sol.end(), tail.begin(), tail.end());
            std::sort(sol.begin(), sol.end());
            sol.erase(std::unique(sol.begin(), sol.end()), sol.end());
            if (static_cast<int>(sol.size()) > k) continue;
            if (!check_solution(Problem::Bvd, g, sol)) continue;  // block-graph verification
            res.yes = true;
            res.solution = sol;
            return res;
        }
    }
    return res;
}

}  // namespace fpss
