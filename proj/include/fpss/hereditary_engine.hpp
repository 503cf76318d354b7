#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fpss/derand.hpp"
#include "fpss/static_solvers.hpp"
#include "fpss/stream.hpp"

namespace fpss {

// What a per-class reconstruction adapter reports for one family subset.
struct AdapterOutcome {
    bool in_class = false;
    std::function<bool(VertexId, VertexId)> edge_query;  // global ids; valid when in_class
    int passes_used = 1;
};

// Replay-compatible adapter: a pure function of the buffered events, the
// subset and its seed. Multi-pass classes re-read the buffer as needed.
using ClassAdapter = std::function<AdapterOutcome(const ParsedStream&, const std::vector<VertexId>&,
                                                  std::uint64_t)>;

ClassAdapter block_graph_adapter();               // 1-pass t-block reconstruction, t = 1
ClassAdapter proper_interval_adapter(int retries = 5);

// Static post-processing solver on the reconstructed union graph.
using StaticClassSolver =
    std::function<SolveResult(const ExplicitGraph&, int k, std::uint64_t seed)>;

struct UnionRepresentation {
    int n = 0;
    SeparatingFamily family;
    std::vector<AdapterOutcome> outcomes;           // one per family subset
    std::vector<std::vector<std::uint64_t>> member_bits;  // vertex -> active-subset bitset
    int active_count = 0;
    int passes_shared = 0;  // max over co-run adapters

    bool edge_query_union(VertexId u, VertexId v) const;
    bool forced_pair(VertexId u, VertexId v) const;  // no reconstructed subset covers both
};

UnionRepresentation hereditary_stream_phase(const ParsedStream& stream, int n, int k,
                                            const ClassAdapter& adapter, std::uint64_t seed,
                                            int jobs = 1);

struct HereditaryResult {
    SolveResult solve;
    int passes_shared = 0;
    std::size_t family_size = 0;
    std::size_t covers_tried = 0;
};

// Full Theorem-4 style pipeline: separating family + adapter co-run + lazy
// vertex-cover branching over the forced-pair graph + static class solver.
// Every emitted solution is verified against the materialized graph.
HereditaryResult run_hereditary_engine(const ParsedStream& stream, Problem problem, int k,
                                       std::uint64_t seed, int jobs = 1);

}  // namespace fpss
