#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpss/static_solvers.hpp"
#include "fpss/stream.hpp"

namespace fpss {

// Endpoint permutation over begin/end tokens; adjacency is decidable from
// token positions alone.
struct IntervalOrder {
    std::vector<std::pair<VertexId, bool>> tokens;  // (vertex, is_end)
    std::vector<int> begin_pos, end_pos;            // indexed by vertex id

    void index();
    bool adjacent(VertexId u, VertexId v) const;
    std::string serialize() const;  // "b<v>" / "e<v>" whitespace separated
};

enum class PivOutcome { Accepted, NoInstance, Fail };

struct PivResult {
    PivOutcome outcome = PivOutcome::Fail;
    IntervalOrder order;  // valid when Accepted (token ids are the caller's)
    int passes = 0;       // shared-pass accounting (siblings share replays)
    double pass_bound = 0;
    int s = 0;
};

// Randomized multi-pass reconstruction of a proper interval graph from the
// (induced) stream. `subset` empty means all vertices. `s_override` forces the
// per-level middle-vertex attempt budget, otherwise s = max(2, ceil(log5 w^2)).
PivResult reconstruct_piv(const ParsedStream& stream, std::uint64_t seed,
                          std::vector<VertexId> subset = {}, int s_override = 0);

// 1-pass equality check between the streamed induced subgraph and the graph
// encoded by `order` (degrees plus per-edge membership).
bool verify_model(const ParsedStream& stream, const std::vector<VertexId>& subset,
                  const IntervalOrder& order);

// Every component of g - N[v] has at most 9n/10 vertices.
bool is_middle_vertex(const ExplicitGraph& g, VertexId v);

// Static solver: branch on small obstructions (claw, net, tent, C4..C7), then
// sweep the W_{v,x} candidate deletion sets on the circular-arc remainder.
SolveResult static_pivd(const ExplicitGraph& g, int k);

// Fast structural proper-interval test used by the solver (chordal + cheap
// claw/net/tent predicates); independent oracle lives in classes.hpp.
bool is_pig_fast(const ExplicitGraph& g);

}  // namespace fpss
