#include "fpss/static_solvers.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

#include "fpss/classes.hpp"
#include "fpss/errors.hpp"

namespace fpss {

Problem problem_from_tag(const std::string& tag) {
    if (tag == "fvst") return Problem::Fvst;
    if (tag == "cvd") return Problem::Cvd;
    if (tag == "svd") return Problem::Svd;
    if (tag == "tvd") return Problem::Tvd;
    if (tag == "bvd") return Problem::Bvd;
    if (tag == "pivd") return Problem::Pivd;
    if (tag == "oct") return Problem::Oct;
    if (tag == "sfvs") return Problem::Sfvs;
    if (tag == "mwc") return Problem::Mwc;
    throw InvalidParams("unknown problem tag '" + tag + "'");
}

std::string problem_tag(Problem p) {
    switch (p) {
        case Problem::Fvst: return "fvst";
        case Problem::Cvd: return "cvd";
        case Problem::Svd: return "svd";
        case Problem::Tvd: return "tvd";
        case Problem::Bvd: return "bvd";
        case Problem::Pivd: return "pivd";
        case Problem::Oct: return "oct";
        case Problem::Sfvs: return "sfvs";
        case Problem::Mwc: return "mwc";
    }
    return "?";
}

std::string HittingSetInstance::serialize() const {
    std::ostringstream out;
    out << "u " << universe << "\n";
    for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
        out << "\n";
    }
    return out.str();
}

namespace {

bool hs_branch(const std::vector<std::vector<int>>& sets, std::vector<char>& picked, int k,
               long long& nodes, std::vector<int>& out) {
    ++nodes;
    int pick_set = -1;
    std::size_t best = SIZE_MAX;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool hit = false;
        for (int e : sets[i])
            if (picked[e]) {
                hit = true;
                break;
            }
        if (!hit && sets[i].size() < best) {
            best = sets[i].size();
            pick_set = static_cast<int>(i);
        }
    }
    if (pick_set < 0) return true;
    if (k == 0) return false;
    for (int e : sets[pick_set]) {
        picked[e] = 1;
        out.push_back(e);
        if (hs_branch(sets, picked, k - 1, nodes, out)) return true;
        out.pop_back();
        picked[e] = 0;
    }
    return false;
}

}  // namespace

SolveResult solve_hitting_set(const HittingSetInstance& inst) {
    SolveResult res;
    for (const auto& s : inst.sets)
        if (s.empty()) return res;  // empty set is unhittable
    std::vector<char> picked(inst.universe, 0);
    std::vector<int> chosen;
    res.yes = hs_branch(inst.sets, picked, inst.k, res.branch_nodes, chosen);
    if (res.yes)
        for (int e : chosen)
            res.solution.push_back(inst.labels.empty() ? e : inst.labels[e]);
    std::sort(res.solution.begin(), res.solution.end());
    return res;
}

SolveResult solve_hitting_set(int universe, const std::vector<std::vector<int>>& sets, int k) {
    HittingSetInstance inst;
    inst.universe = universe;
    inst.sets = sets;
    inst.k = k;
    return solve_hitting_set(inst);
}

// ---------------------------------------------------------------------------
// OCT via iterative compression
// ---------------------------------------------------------------------------

namespace {

struct FlowNet {
    int n = 0;
    std::vector<int> head;
    std::vector<int> to, nxt, cap;
    explicit FlowNet(int n_) : n(n_), head(n_, -1) {}
    void add_arc(int u, int v, int c) {
        to.push_back(v); cap.push_back(c); nxt.push_back(head[u]); head[u] = static_cast<int>(to.size()) - 1;
        to.push_back(u); cap.push_back(0); nxt.push_back(head[v]); head[v] = static_cast<int>(to.size()) - 1;
    }
};

// Min vertex s-t cut (vertices capacity 1, terminals deletable) between the
// sides T0 / T1 inside bipartite graph `g` restricted to `alive`. Returns the
// cut or nullopt if its size exceeds `limit`.
std::optional<std::vector<int>> vertex_cut(const ExplicitGraph& g, const std::vector<char>& alive,
                                           const std::vector<char>& t0, const std::vector<char>& t1,
                                           int limit) {
    // Node split: in(v) = 2v, out(v) = 2v+1; unit capacity on vertex arcs,
    // limit+1 ("infinite") on edge arcs.
    int N = 2 * g.n + 2;
    int S = 2 * g.n, T = 2 * g.n + 1;
    int inf = limit + 1;
    FlowNet net(N);
    for (int v = 0; v < g.n; ++v) {
        if (!alive[v]) continue;
        net.add_arc(2 * v, 2 * v + 1, 1);
        if (t0[v]) net.add_arc(S, 2 * v, inf);
        if (t1[v]) net.add_arc(2 * v + 1, T, inf);
    }
    for (auto [u, v] : g.edges) {
        if (!alive[u] || !alive[v]) continue;
        net.add_arc(2 * u + 1, 2 * v, inf);
        net.add_arc(2 * v + 1, 2 * u, inf);
    }
    int flow = 0;
    std::vector<int> prev_arc(N);
    while (flow <= limit) {
        std::fill(prev_arc.begin(), prev_arc.end(), -1);
        std::queue<int> q;
        q.push(S);
        prev_arc[S] = -2;
        while (!q.empty() && prev_arc[T] == -1) {
            int u = q.front();
            q.pop();
            for (int a = net.head[u]; a != -1; a = net.nxt[a])
                if (net.cap[a] > 0 && prev_arc[net.to[a]] == -1) {
                    prev_arc[net.to[a]] = a;
                    q.push(net.to[a]);
                }
        }
        if (prev_arc[T] == -1) break;
        for (int w = T; w != S;) {
            int a = prev_arc[w];
            net.cap[a] -= 1;
            net.cap[a ^ 1] += 1;
            w = net.to[a ^ 1];
        }
        ++flow;
    }
    if (flow > limit) return std::nullopt;
    std::vector<char> reach(N, 0);
    std::queue<int> q;
    q.push(S);
    reach[S] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int a = net.head[u]; a != -1; a = net.nxt[a])
            if (net.cap[a] > 0 && !reach[net.to[a]]) {
                reach[net.to[a]] = 1;
                q.push(net.to[a]);
            }
    }
    std::vector<int> cut;
    for (int v = 0; v < g.n; ++v)
        if (alive[v] && reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
}

// Best OCT of g disjoint from nothing, given X' with g - X' bipartite.
std::optional<std::vector<int>> oct_compress(const ExplicitGraph& g, const std::vector<int>& xprime,
                                             int k) {
    std::vector<char> in_x(g.n, 0);
    for (int v : xprime) in_x[v] = 1;
    // 2-color g - X'.
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (in_x[s] || color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u]) {
                if (in_x[w]) continue;
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                }
            }
        }
    }
    int m = static_cast<int>(xprime.size());
    std::optional<std::vector<int>> best;
    // Partition X' into (deleted, left, right).
    std::vector<int> part(m, 0);
    std::function<void(int)> go = [&](int idx) {
        if (best && static_cast<int>(best->size()) <= 0) return;
        if (idx == m) {
            std::vector<int> del, left, right;
            for (int i = 0; i < m; ++i)
                (part[i] == 0 ? del : part[i] == 1 ? left : right).push_back(xprime[i]);
            if (static_cast<int>(del.size()) > k) return;
            for (std::size_t i = 0; i < left.size(); ++i)
                for (std::size_t j = i + 1; j < left.size(); ++j)
                    if (g.has_edge(left[i], left[j])) return;
            for (std::size_t i = 0; i < right.size(); ++i)
                for (std::size_t j = i + 1; j < right.size(); ++j)
                    if (g.has_edge(right[i], right[j])) return;
            std::vector<char> alive(g.n, 1), t0(g.n, 0), t1(g.n, 0);
            std::vector<int> forced;
            for (int v : xprime) alive[v] = 0;
            for (int v = 0; v < g.n; ++v) {
                if (in_x[v]) continue;
                bool near_left = false, near_right = false;
                for (int w : g.adj[v]) {
                    if (std::find(left.begin(), left.end(), w) != left.end()) near_left = true;
                    if (std::find(right.begin(), right.end(), w) != right.end()) near_right = true;
                }
                // required side: near_left -> side 1, near_right -> side 0
                if (near_left && near_right) {
                    forced.push_back(v);
                    alive[v] = 0;
                } else if (near_left) {
                    (color[v] == 1 ? t0 : t1)[v] = 1;  // tau = color xor 1
                } else if (near_right) {
                    (color[v] == 0 ? t0 : t1)[v] = 1;  // tau = color xor 0
                }
            }
            int budget = k - static_cast<int>(del.size()) - static_cast<int>(forced.size());
            if (budget < 0) return;
            auto cut = vertex_cut(g, alive, t0, t1, budget);
            if (!cut) return;
            std::vector<int> sol = del;
            sol.insert(sol.end(), forced.begin(), forced.end());
            sol.insert(sol.end(), cut->begin(), cut->end());
            if (!best || sol.size() < best->size()) best = sol;
            return;
        }
        for (int p = 0; p < 3; ++p) {
            part[idx] = p;
            go(idx + 1);
        }
    };
    go(0);
    return best;
}

}  // namespace

namespace {

bool bipartite_without(const ExplicitGraph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.n, 0);
    for (int v : removed) gone[v] = 1;
    std::vector<int> color(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (gone[s] || color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u]) {
                if (gone[w]) continue;
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

SolveResult solve_oct_static(const ExplicitGraph& g, int k) {
    SolveResult res;
    if (k < 0) return res;
    // Grow the graph vertex by vertex, maintaining an OCT of the prefix.
    ExplicitGraph prefix(g.n);  // later vertices isolated until introduced
    std::vector<int> oct;
    for (int i = 0; i < g.n; ++i) {
        for (int w : g.adj[i])
            if (w < i) prefix.add_edge(i, w);
        if (bipartite_without(prefix, oct)) continue;  // still valid
        std::vector<int> xprime = oct;
        xprime.push_back(i);
        if (static_cast<int>(xprime.size()) <= k) {
            oct = xprime;
            continue;
        }
        ++res.branch_nodes;
        auto better = oct_compress(prefix, xprime, k);
        if (!better) return res;  // NO
        oct = *better;
    }
    res.yes = true;
    res.solution = oct;
    std::sort(res.solution.begin(), res.solution.end());
    return res;
}

// ---------------------------------------------------------------------------
// Bounded-subset-enumeration cut solvers
// ---------------------------------------------------------------------------

namespace {

template <typename Check>
SolveResult solve_by_enumeration(const ExplicitGraph& g, int k, int cap, Check&& ok,
                                 bool skip_terminals = false,
                                 const std::vector<VertexId>* terminals = nullptr) {
    if (g.n > cap) throw InstanceTooLarge("instance above configured cap");
    SolveResult res;
    std::vector<char> is_term(g.n, 0);
    if (terminals)
        for (int t : *terminals) is_term[t] = 1;
    std::vector<int> subset;
    std::function<bool(int, int)> fixed = [&](int start, int need) -> bool {
        if (need == 0) {
            ++res.branch_nodes;
            if (ok(subset)) {
                res.yes = true;
                res.solution = subset;
                return true;
            }
            return false;
        }
        for (int v = start; v < g.n; ++v) {
            if (skip_terminals && is_term[v]) continue;
            subset.push_back(v);
            if (fixed(v + 1, need - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= k && !res.yes; ++size) {
        subset.clear();
        fixed(0, size);
    }
    return res;
}

std::vector<VertexId> surviving_terminals(const ExplicitGraph& g, const std::vector<VertexId>& t,
                                          const std::vector<int>& removed) {
    std::vector<char> gone(g.n, 0);
    for (int v : removed) gone[v] = 1;
    std::vector<VertexId> out;
    for (int x : t)
        if (!gone[x]) out.push_back(x);
    return out;
}

}  // namespace

SolveResult solve_sfvs_static(const ExplicitGraph& g, const std::vector<VertexId>& terminals,
                              int k, int cap) {
    return solve_by_enumeration(g, k, cap, [&](const std::vector<int>& s) {
        ExplicitGraph h = g.remove_vertices(s);
        std::vector<char> gone(g.n, 0);
        for (int v : s) gone[v] = 1;
        std::vector<int> newid(g.n, -1);
        int idx = 0;
        for (int v = 0; v < g.n; ++v)
            if (!gone[v]) newid[v] = idx++;
        std::vector<VertexId> term;
        for (int t : terminals)
            if (!gone[t]) term.push_back(newid[t]);
        return !has_terminal_cycle(h, term);
    });
}

SolveResult solve_mwc_static(const ExplicitGraph& g, const std::vector<VertexId>& terminals,
                             int k, bool protect_terminals, int cap) {
    if (terminals.size() < 2) throw InvalidParams("multiway cut needs at least 2 terminals");
    return solve_by_enumeration(
        g, k, cap,
        [&](const std::vector<int>& s) {
            std::vector<char> gone(g.n, 0);
            for (int v : s) gone[v] = 1;
            std::vector<int> newid(g.n, -1);
            int idx = 0;
            for (int v = 0; v < g.n; ++v)
                if (!gone[v]) newid[v] = idx++;
            ExplicitGraph h = g.remove_vertices(s);
            std::vector<VertexId> term;
            for (int t : terminals)
                if (!gone[t]) term.push_back(newid[t]);
            return multiway_separated(h, term);
        },
        protect_terminals, &terminals);
}

std::vector<std::vector<VertexId>> enumerate_min_vertex_covers(const ExplicitGraph& g, int k) {
    std::set<std::vector<VertexId>> found;
    std::vector<VertexId> current;
    std::vector<char> in_cover(g.n, 0);
    std::function<void(int)> go = [&](int budget) {
        // lowest-index uncovered edge
        int eu = -1, ev = -1;
        for (auto [u, v] : g.edges)
            if (!in_cover[u] && !in_cover[v]) {
                eu = u;
                ev = v;
                break;
            }
        if (eu < 0) {
            std::vector<VertexId> cover = current;
            std::sort(cover.begin(), cover.end());
            found.insert(cover);
            return;
        }
        if (budget == 0) return;
        for (int pick : {eu, ev}) {
            in_cover[pick] = 1;
            current.push_back(pick);
            go(budget - 1);
            current.pop_back();
            in_cover[pick] = 0;
        }
    };
    go(k);
    // keep only minimal covers
    std::vector<std::vector<VertexId>> out;
    for (const auto& cover : found) {
        bool minimal = true;
        for (std::size_t i = 0; i < cover.size() && minimal; ++i) {
            // cover minus cover[i] still a cover?
            bool still = true;
            for (auto [u, v] : g.edges) {
                bool covered = false;
                for (std::size_t j = 0; j < cover.size(); ++j)
                    if (j != i && (cover[j] == u || cover[j] == v)) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    still = false;
                    break;
                }
            }
            if (still) minimal = false;
        }
        if (minimal) out.push_back(cover);
    }
    return out;
}

bool check_solution(Problem p, const ExplicitGraph& g, const std::vector<VertexId>& sol) {
    for (VertexId v : sol)
        if (v < 0 || v >= g.n) return false;
    std::vector<char> gone(g.n, 0);
    for (int v : sol) gone[v] = 1;
    std::vector<int> newid(g.n, -1);
    int idx = 0;
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) newid[v] = idx++;
    ExplicitGraph h = g.remove_vertices(sol);
    std::vector<VertexId> term;
    for (int t : g.terminals)
        if (t >= 0 && t < g.n && !gone[t]) term.push_back(newid[t]);
    switch (p) {
        case Problem::Fvst: return is_acyclic_tournament(h);
        case Problem::Cvd: return is_cluster(h);
        case Problem::Svd: return is_split_structural(h);
        case Problem::Tvd: return is_threshold_structural(h);
        case Problem::Bvd: return is_block_graph(h);
        case Problem::Pivd: return is_proper_interval(h);
        case Problem::Oct: return is_bipartite(h);
        case Problem::Sfvs: return !has_terminal_cycle(h, term);
        case Problem::Mwc: return multiway_separated(h, term);
    }
    return false;
}

SolveResult brute_force_oracle(Problem p, const ExplicitGraph& g, int k, int cap) {
    if (g.n > cap) throw CapExceeded("brute force oracle above vertex cap");
    SolveResult res;
    std::vector<int> subset;
    std::function<bool(int, int)> fixed = [&](int start, int need) -> bool {
        if (need == 0) {
            ++res.branch_nodes;
            if (check_solution(p, g, subset)) {
                res.yes = true;
                res.solution = subset;
                return true;
            }
            return false;
        }
        for (int v = start; v < g.n; ++v) {
            subset.push_back(v);
            if (fixed(v + 1, need - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int size = 0; size <= std::min(k, g.n) && !res.yes; ++size) {
        subset.clear();
        fixed(0, size);
    }
    return res;
}

}  // namespace fpss
