#include "fpss/classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace fpss {

bool is_cluster(const ExplicitGraph& g) {
    auto comp = g.component_ids();
    int c = 0;
    for (int x : comp) c = std::max(c, x + 1);
    std::vector<int> size(c, 0);
    for (int v = 0; v < g.n; ++v) ++size[comp[v]];
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != size[comp[v]] - 1) return false;
    return true;
}

bool is_split_structural(const ExplicitGraph& g) {
    // Sort by degree descending and try every prefix as the clique side.
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int m = 0; m <= g.n; ++m) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j)
                if (!g.has_edge(order[i], order[j])) ok = false;
        for (int i = m; i < g.n && ok; ++i)
            for (int j = i + 1; j < g.n && ok; ++j)
                if (g.has_edge(order[i], order[j])) ok = false;
        if (ok) return true;
    }
    return false;
}

bool is_threshold_structural(const ExplicitGraph& g) {
    std::vector<char> alive(g.n, 1);
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int remaining = g.n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < g.n && pick < 0; ++v) {
            if (!alive[v]) continue;
            if (deg[v] == 0 || deg[v] == remaining - 1) pick = v;
        }
        if (pick < 0) return false;
        alive[pick] = 0;
        --remaining;
        for (int w : g.adj[pick])
            if (alive[w]) --deg[w];
    }
    return true;
}

bool is_tournament(const ExplicitGraph& g) {
    if (!g.directed) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int cnt = (g.has_edge(u, v) ? 1 : 0) + (g.has_edge(v, u) ? 1 : 0);
            if (cnt != 1) return false;
        }
    return true;
}

bool is_acyclic_tournament(const ExplicitGraph& g) {
    if (!is_tournament(g)) return false;
    // Kahn on the arc set.
    std::vector<int> indeg(g.n, 0);
    for (auto [u, v] : g.edges) ++indeg[v];
    std::vector<int> q;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) q.push_back(v);
    int seen = 0;
    while (!q.empty()) {
        int u = q.back();
        q.pop_back();
        ++seen;
        for (int w : g.adj[u])
            if (--indeg[w] == 0) q.push_back(w);
    }
    return seen == g.n;
}

bool is_bipartite(const ExplicitGraph& g) {
    std::vector<int> color(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u]) {
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

bool is_chordal(const ExplicitGraph& g) {
    std::vector<char> alive(g.n, 1);
    int remaining = g.n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < g.n && pick < 0; ++v) {
            if (!alive[v]) continue;
            bool simplicial = true;
            const auto& nb = g.adj[v];
            for (std::size_t i = 0; i < nb.size() && simplicial; ++i) {
                if (!alive[nb[i]]) continue;
                for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j) {
                    if (!alive[nb[j]]) continue;
                    if (!g.has_edge(nb[i], nb[j])) simplicial = false;
                }
            }
            if (simplicial) pick = v;
        }
        if (pick < 0) return false;
        alive[pick] = 0;
        --remaining;
    }
    return true;
}

namespace {

// Tarjan-style biconnected components via edge stack.
void biconnected_components(const ExplicitGraph& g,
                            std::vector<std::vector<std::pair<int, int>>>& comps) {
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int w : g.adj[u]) {
            if (w == parent) {
                parent = -2;  // skip one copy of the tree edge only
                continue;
            }
            if (disc[w] < 0) {
                estack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    comps.emplace_back();
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        comps.back().push_back(e);
                        if (e == std::make_pair(u, w)) break;
                    }
                }
            } else if (disc[w] < disc[u]) {
                estack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[v] < 0) dfs(v, -1);
}

}  // namespace

bool is_block_graph(const ExplicitGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> comps;
    biconnected_components(g, comps);
    for (const auto& comp : comps) {
        std::vector<int> verts;
        for (auto [u, v] : comp) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::size_t m = comp.size();
        std::size_t c = verts.size();
        if (m != c * (c - 1) / 2) return false;
    }
    return true;
}

ExplicitGraph pattern_graph(Pattern p) {
    switch (p) {
        case Pattern::P3: return graph_from_edges(3, {{0, 1}, {1, 2}});
        case Pattern::P4: return graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
        case Pattern::C4: return graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        case Pattern::C5: return graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        case Pattern::TwoK2: return graph_from_edges(4, {{0, 1}, {2, 3}});
        case Pattern::Claw: return graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        case Pattern::Net:
            return graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
        case Pattern::Tent:
            return graph_from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
        case Pattern::D4: return graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
        case Pattern::DirectedTriangle: {
            ExplicitGraph g(3, true);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 0);
            return g;
        }
    }
    return {};
}

bool induced_subgraph_isomorphic(const ExplicitGraph& host, const ExplicitGraph& pattern) {
    if (pattern.n > host.n) return false;
    std::vector<int> map(pattern.n, -1);
    std::vector<char> used(host.n, 0);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == pattern.n) return true;
        for (int h = 0; h < host.n; ++h) {
            if (used[h]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                bool pe = pattern.has_edge(j, i), he = host.has_edge(map[j], h);
                if (pe != he) ok = false;
                if (pattern.directed && ok) {
                    bool pe2 = pattern.has_edge(i, j), he2 = host.has_edge(h, map[j]);
                    if (pe2 != he2) ok = false;
                }
            }
            if (!ok) continue;
            used[h] = 1;
            map[i] = h;
            if (place(i + 1)) return true;
            used[h] = 0;
        }
        return false;
    };
    return place(0);
}

bool has_induced(const ExplicitGraph& g, Pattern p) {
    return induced_subgraph_isomorphic(g, pattern_graph(p));
}

bool has_induced_cycle_at_least(const ExplicitGraph& g, int min_len) {
    // A hole of length >= 4 exists iff the graph is not chordal.
    if (min_len <= 4) return !is_chordal(g);
    // Longer thresholds: scan vertex subsets that induce a cycle.
    std::vector<int> subset;
    std::function<bool(int, int)> scan = [&](int start, int need) -> bool {
        if (need == 0) {
            // induced 2-regular connected = cycle
            for (int v : subset) {
                int d = 0;
                for (int w : subset)
                    if (v != w && g.has_edge(v, w)) ++d;
                if (d != 2) return false;
            }
            ExplicitGraph sub = g.induced(subset);
            return sub.component_count() == 1;
        }
        for (int v = start; v < g.n; ++v) {
            subset.push_back(v);
            if (scan(v + 1, need - 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    for (int len = min_len; len <= g.n; ++len) {
        subset.clear();
        if (scan(0, len)) return true;
    }
    return false;
}

bool is_proper_interval(const ExplicitGraph& g) {
    if (!is_chordal(g)) return false;
    if (has_induced(g, Pattern::Claw)) return false;
    if (has_induced(g, Pattern::Net)) return false;
    if (has_induced(g, Pattern::Tent)) return false;
    return true;
}

bool has_terminal_cycle(const ExplicitGraph& g, const std::vector<VertexId>& terminals) {
    // t lies on a cycle iff two neighbors of t are connected in G - t.
    for (VertexId t : terminals) {
        if (t < 0 || t >= g.n || g.adj[t].size() < 2) continue;
        std::vector<int> comp(g.n, -1);
        int c = 0;
        for (int s = 0; s < g.n; ++s) {
            if (s == t || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g.adj[u]) {
                    if (w == t || comp[w] >= 0) continue;
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
            ++c;
        }
        for (std::size_t i = 0; i < g.adj[t].size(); ++i)
            for (std::size_t j = i + 1; j < g.adj[t].size(); ++j)
                if (comp[g.adj[t][i]] == comp[g.adj[t][j]]) return true;
    }
    return false;
}

bool multiway_separated(const ExplicitGraph& g, const std::vector<VertexId>& terminals) {
    auto comp = g.component_ids();
    std::vector<int> seen;
    for (VertexId t : terminals) {
        if (t < 0 || t >= g.n) continue;
        seen.push_back(comp[t]);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace fpss
