#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace fpss {

using VertexId = int;

// Simple loop-free graph, optionally directed (arcs stored as ordered pairs).
// Small enough for the desk-scale solvers and oracles; adjacency is kept both
// as lists and as a hash set of encoded pairs for O(1) membership.
struct ExplicitGraph {
    int n = 0;
    bool directed = false;
    std::vector<std::pair<VertexId, VertexId>> edges;  // canonical (min,max) when undirected
    std::vector<std::vector<VertexId>> adj;            // undirected: neighbors; directed: out-neighbors
    std::vector<std::vector<VertexId>> in_adj;         // directed only
    std::vector<VertexId> terminals;

    ExplicitGraph() = default;
    explicit ExplicitGraph(int n_, bool directed_ = false);

    void add_edge(VertexId u, VertexId v);   // inserts; no-op duplicate guard is caller's job
    bool has_edge(VertexId u, VertexId v) const;
    int degree(VertexId v) const { return static_cast<int>(adj[v].size()); }
    int out_degree(VertexId v) const { return static_cast<int>(adj[v].size()); }
    std::size_t edge_count() const { return edges.size(); }

    // Induced subgraph on `keep` (ascending); result vertices are re-indexed,
    // mapping returned through `old_ids`.
    ExplicitGraph induced(const std::vector<VertexId>& keep, std::vector<VertexId>* old_ids = nullptr) const;
    // Graph minus a vertex set (terminals carried over and remapped).
    ExplicitGraph remove_vertices(const std::vector<VertexId>& del, std::vector<VertexId>* old_ids = nullptr) const;

    std::vector<int> component_ids() const;  // undirected connectivity
    int component_count() const;

  private:
    std::unordered_set<std::uint64_t> edge_keys_;
    std::uint64_t key(VertexId u, VertexId v) const;
};

ExplicitGraph graph_from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                               bool directed = false);

// Encoded undirected edge id: min*n + max. Used as sketch item id.
inline std::uint64_t edge_id(int n, VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
}

}  // namespace fpss
