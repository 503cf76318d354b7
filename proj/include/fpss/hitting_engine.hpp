#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fpss/derand.hpp"
#include "fpss/recognizers.hpp"
#include "fpss/static_solvers.hpp"
#include "fpss/stream.hpp"

namespace fpss {

// Finite-obstruction class description feeding the vertex-deletion engine.
struct ObstructionSpec {
    RecognizerKind recognizer;
    int d = 0;  // max vertices over the forbidden graphs
    bool directed = false;
};

ObstructionSpec obstruction_spec_for(Problem p);  // Fvst/Cvd/Svd/Tvd only

// The subgraph index: deduped vertex subsets (bitmasks over [n], n <= 64)
// plus the descriptor bookkeeping needed by post-processing.
struct EnginePlan {
    int n = 0, k = 0;
    ObstructionSpec spec;
    bool bypass = false;  // d*k > n or k >= n: defer to the static oracle
    int alpha = 0, alpha_eff = 0;
    long long beta = 0;  // candidate bound + d (clamped to n for F3)
    SplitterFamily f1, f2;
    // F3 realized at desk scale by its identity degenerate (beta >= n), so the
    // third index block enumerates all <= d vertex subsets directly.
    std::vector<std::uint64_t> masks;  // mask id -> vertex subset
    std::unordered_map<std::uint64_t, int> mask_id;
    struct F1Entry {
        int f1_index = 0;
        std::uint64_t mask = 0;
        int base_id = 0;
    };
    std::vector<F1Entry> f1_entries;
    std::vector<std::vector<std::uint64_t>> f2_color_mask;  // [f2 index][color] -> vertex mask
    std::vector<int> f3_mask_ids;                           // ids of all <= d subsets of [n]
    std::size_t mask_cap = 5'000'000;
};

EnginePlan make_plan(int n, int k, const ObstructionSpec& spec, std::size_t mask_cap = 5'000'000);

// One physical pass: every registered subset gets a recognition verdict.
// Cluster verdicts are majority-of-3 independent sketch copies.
std::vector<char> stream_phase(const EnginePlan& plan, const ParsedStream& stream,
                               std::uint64_t seed, int jobs = 1, SpaceLedger* ledger = nullptr);

struct CandidateSet {
    std::vector<std::vector<VertexId>> per_f1;
    std::vector<VertexId> z_star;
};

CandidateSet compute_candidates(const EnginePlan& plan, const std::vector<char>& verdicts);

HittingSetInstance build_hitting_instance(const EnginePlan& plan, const std::vector<char>& verdicts,
                                          const std::vector<VertexId>& z_star);

struct EngineResult {
    SolveResult solve;
    CandidateSet candidates;
    HittingSetInstance instance;
    bool bypassed = false;
    std::size_t subgraph_count = 0;
};

// Full pipeline: plan + stream + candidates + hitting-set solve. `problem`
// must be one of Fvst/Cvd/Svd/Tvd.
EngineResult run_hitting_engine(const ParsedStream& stream, Problem problem, int k,
                                std::uint64_t seed, int jobs = 1, SpaceLedger* ledger = nullptr);

}  // namespace fpss
