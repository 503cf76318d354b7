#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fpss/derand.hpp"
#include "fpss/sketch.hpp"
#include "fpss/static_solvers.hpp"
#include "fpss/stream.hpp"

namespace fpss {

// Succinct edge oracle produced by t-flow reconstruction: the union forest
// plus connectivity answers over the separating family, lazily memoized.
class TFlowOracle {
  public:
    TFlowOracle(int n, int t, SeparatingFamily family, std::vector<std::vector<int>> components,
                std::vector<std::pair<VertexId, VertexId>> forest_edges);

    bool edge(VertexId u, VertexId v) const;
    int degree_in_reconstruction(VertexId v) const;
    int n() const { return n_; }

  private:
    bool connected_choice(VertexId x, VertexId y, const std::vector<int>& avoid) const;

    int n_ = 0, t_ = 0;
    SeparatingFamily family_;
    std::vector<std::vector<int>> family_components_;  // per subset: component id per member slot
    std::vector<std::vector<int>> member_slot_;        // per subset: global vertex -> slot or -1
    std::vector<std::vector<char>> forest_adj_;
    mutable std::vector<std::vector<signed char>> memo_;  // -1 unknown, 0 no, 1 yes
};

struct ReconstructionOutcome {
    bool in_class = false;
    std::shared_ptr<TFlowOracle> oracle;  // populated on accept (and for t-flow also on E(G)⊆E(G̃) sweeps)
};

// 1-pass randomized t-flow reconstruction on an explicit event list.
// `subset` restricts to an induced subgraph (empty = all vertices).
ReconstructionOutcome reconstruct_tflow(const ParsedStream& stream, int n, int t,
                                        std::uint64_t seed,
                                        const std::vector<VertexId>& subset = {},
                                        SpaceLedger* ledger = nullptr);

// t-flow acceptance + perfect-elimination-ordering emptiness via the oracle.
ReconstructionOutcome reconstruct_tblock(const ParsedStream& stream, int n, int t,
                                         std::uint64_t seed,
                                         const std::vector<VertexId>& subset = {},
                                         SpaceLedger* ledger = nullptr);

// Number of maximal cliques of g containing v (lexicographic branch count).
long long count_cliques_containing(const ExplicitGraph& g, VertexId v);

// Fixpoint removal of vertices lying in exactly one maximal clique. Returns
// the kept vertex ids (original labels).
std::vector<VertexId> peel_single_clique_vertices(const ExplicitGraph& g);

// v marked iff deg(v) == 2 and both neighbors have degree 2.
std::vector<char> mark_degree_two_chain(const ExplicitGraph& g);

// Randomized Block Vertex Deletion: C4/D4 branching, isolated-cycle and
// single-clique peeling, then clique-degree-weighted sampling; the whole run
// repeated ceil(reps_factor * 17^k) times. Exact NO only after all repeats.
SolveResult solve_bvd(const ExplicitGraph& g, int k, std::uint64_t seed, int reps_factor = 3);

}  // namespace fpss
