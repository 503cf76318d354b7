#include "fpss/graph.hpp"

#include <algorithm>
#include <cassert>

namespace fpss {

ExplicitGraph::ExplicitGraph(int n_, bool directed_) : n(n_), directed(directed_) {
    adj.resize(n);
    if (directed) in_adj.resize(n);
}

std::uint64_t ExplicitGraph::key(VertexId u, VertexId v) const {
    if (!directed && u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
}

void ExplicitGraph::add_edge(VertexId u, VertexId v) {
    assert(u != v && u >= 0 && v >= 0 && u < n && v < n);
    if (has_edge(u, v)) return;
    edge_keys_.insert(key(u, v));
    if (directed) {
        edges.emplace_back(u, v);
        adj[u].push_back(v);
        in_adj[v].push_back(u);
    } else {
        edges.emplace_back(std::min(u, v), std::max(u, v));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
}

bool ExplicitGraph::has_edge(VertexId u, VertexId v) const {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) return false;
    return edge_keys_.count(key(u, v)) > 0;
}

ExplicitGraph ExplicitGraph::induced(const std::vector<VertexId>& keep,
                                     std::vector<VertexId>* old_ids) const {
    std::vector<int> newid(n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
    ExplicitGraph g(static_cast<int>(keep.size()), directed);
    for (auto [u, v] : edges)
        if (newid[u] >= 0 && newid[v] >= 0) g.add_edge(newid[u], newid[v]);
    for (VertexId t : terminals)
        if (newid[t] >= 0) g.terminals.push_back(newid[t]);
    std::sort(g.terminals.begin(), g.terminals.end());
    if (old_ids) *old_ids = keep;
    return g;
}

ExplicitGraph ExplicitGraph::remove_vertices(const std::vector<VertexId>& del,
                                             std::vector<VertexId>* old_ids) const {
    std::vector<char> gone(n, 0);
    for (VertexId v : del) gone[v] = 1;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced(keep, old_ids);
}

std::vector<int> ExplicitGraph::component_ids() const {
    std::vector<int> comp(n, -1);
    int c = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId w : adj[u])
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            if (directed)
                for (VertexId w : in_adj[u])
                    if (comp[w] < 0) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
        }
        ++c;
    }
    return comp;
}

int ExplicitGraph::component_count() const {
    auto comp = component_ids();
    int c = 0;
    for (int x : comp) c = std::max(c, x + 1);
    return c;
}

ExplicitGraph graph_from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                               bool directed) {
    ExplicitGraph g(n, directed);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace fpss
