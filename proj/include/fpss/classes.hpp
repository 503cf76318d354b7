#pragma once

#include <vector>

#include "fpss/graph.hpp"

namespace fpss {

// Structural class tests. These are deliberately independent of the streaming
// recognizers (which work from degree sequences / sketches), so they double as
// oracles in tests.

bool is_cluster(const ExplicitGraph& g);              // every component a clique
bool is_split_structural(const ExplicitGraph& g);     // clique + independent set partition
bool is_threshold_structural(const ExplicitGraph& g); // peel isolated/universal to empty
bool is_tournament(const ExplicitGraph& g);
bool is_acyclic_tournament(const ExplicitGraph& g);   // DFS acyclicity of arcs
bool is_bipartite(const ExplicitGraph& g);
bool is_chordal(const ExplicitGraph& g);              // greedy simplicial elimination
bool is_block_graph(const ExplicitGraph& g);          // biconnected components are cliques
bool is_proper_interval(const ExplicitGraph& g);      // chordal + claw/net/tent-free

// Named small obstructions for induced-subgraph scans.
enum class Pattern { P3, P4, C4, C5, TwoK2, Claw, Net, Tent, D4, DirectedTriangle };
bool has_induced(const ExplicitGraph& g, Pattern p);

// Holes = induced cycles on >= 4 vertices; bounded-length scan.
bool has_induced_cycle_at_least(const ExplicitGraph& g, int min_len);

// Cut-problem properties.
bool has_terminal_cycle(const ExplicitGraph& g, const std::vector<VertexId>& terminals);
bool multiway_separated(const ExplicitGraph& g, const std::vector<VertexId>& terminals);

// Exact induced-subgraph isomorphism between small graphs (backtracking).
bool induced_subgraph_isomorphic(const ExplicitGraph& host, const ExplicitGraph& pattern);

ExplicitGraph pattern_graph(Pattern p);

}  // namespace fpss
