#pragma once

#include <string>
#include <vector>

#include "fpss/graph.hpp"

namespace fpss {

enum class Problem { Fvst, Cvd, Svd, Tvd, Bvd, Pivd, Oct, Sfvs, Mwc };

Problem problem_from_tag(const std::string& tag);
std::string problem_tag(Problem p);

struct SolveResult {
    bool yes = false;
    std::vector<VertexId> solution;
    long long branch_nodes = 0;
};

struct HittingSetInstance {
    int universe = 0;  // elements are 0..universe-1 (indices into a label table)
    std::vector<VertexId> labels;  // original vertex ids, size == universe
    std::vector<std::vector<int>> sets;  // each of size <= d, indices into labels
    int k = 0;
    std::string serialize() const;  // `u <universe>` then one line per set
};

// Exact d-Hitting Set by branching on the elements of a smallest unhit set.
SolveResult solve_hitting_set(const HittingSetInstance& inst);
SolveResult solve_hitting_set(int universe, const std::vector<std::vector<int>>& sets, int k);

// Odd Cycle Transversal via iterative compression + vertex min-cut.
SolveResult solve_oct_static(const ExplicitGraph& g, int k);

// Exact desk-scale solvers, interface-compatible with FPT drop-ins.
SolveResult solve_sfvs_static(const ExplicitGraph& g, const std::vector<VertexId>& terminals,
                              int k, int cap = 32);
SolveResult solve_mwc_static(const ExplicitGraph& g, const std::vector<VertexId>& terminals,
                             int k, bool protect_terminals = false, int cap = 32);

// Every minimal vertex cover of size <= k, each exactly once.
std::vector<std::vector<VertexId>> enumerate_min_vertex_covers(const ExplicitGraph& g, int k);

// Whether deleting `sol` leaves the target property intact.
bool check_solution(Problem p, const ExplicitGraph& g, const std::vector<VertexId>& sol);

// Exhaustive oracle over all <= k subsets (smallest first). Throws CapExceeded
// above `cap` vertices.
SolveResult brute_force_oracle(Problem p, const ExplicitGraph& g, int k, int cap = 24);

}  // namespace fpss
