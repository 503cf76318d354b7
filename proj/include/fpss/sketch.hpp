#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpss/graph.hpp"

namespace fpss {

// ---------------------------------------------------------------------------
// Deterministic s-sparse recovery over F_p via power-sum syndromes.
//
// State keeps S_j = sum_i c_i * x_i^j for j = 0..2s-1 where c_i is the net
// multiplicity of item x_i (0/1 for simple-graph streams). Recovery runs
// Berlekamp-Massey on the syndrome sequence, finds the roots of the minimal
// recurrence in F_p, and re-verifies the decoded set against every syndrome;
// any mismatch yields FAIL, never a wrong set.
// ---------------------------------------------------------------------------
class SparseRecovery {
  public:
    static constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1

    SparseRecovery() = default;
    SparseRecovery(std::size_t capacity, std::uint64_t universe);

    void update(std::uint64_t item, int sign);
    void merge(const SparseRecovery& other);  // component-wise field addition

    struct Result {
        bool ok = false;
        std::vector<std::uint64_t> items;  // valid iff ok
    };
    Result recover() const;

    std::size_t capacity() const { return capacity_; }
    long long live_count() const { return live_; }
    bool all_zero() const;
    std::size_t state_words() const { return syndromes_.size() + 2; }

    std::string serialize() const;
    static SparseRecovery deserialize(const std::string& text);

  private:
    std::size_t capacity_ = 0;
    std::uint64_t universe_ = 0;
    long long live_ = 0;
    std::vector<std::uint64_t> syndromes_;  // length 2 * capacity
};

// ---------------------------------------------------------------------------
// Dynamic connectivity sketch (turnstile): per-vertex l0-samplers made of
// pairwise-independent level subsampling feeding capacity-1 recovery cells,
// with an independent bank of levels per extraction round. Spanning forest
// extraction is Boruvka with per-round fresh banks.
// ---------------------------------------------------------------------------
class ConnectivitySketch {
  public:
    // `n` local vertex count; items are edge ids u*n+v (u<v) below n*n.
    ConnectivitySketch(int n, int failure_c, std::uint64_t seed, int banks = 0, int copies = 0);
    ConnectivitySketch() = default;

    void update(VertexId u, VertexId v, int sign);

    // Spanning forest of the current graph; throws SketchFailure if the bank
    // budget was exhausted while merges were still happening.
    std::vector<std::pair<VertexId, VertexId>> spanning_forest() const;
    std::vector<int> components() const;  // partition derived from the forest
    int component_count() const;

    void merge(const ConnectivitySketch& other);  // linearity (same params)
    bool same_cells(const ConnectivitySketch& other) const;

    int n() const { return n_; }
    std::size_t state_words() const { return cells_.size() * 3 + banks_ * copies_ + 8; }

  private:
    struct Cell {
        long long cnt = 0;
        std::uint64_t sum = 0;  // mod p61
        std::uint64_t fp = 0;   // mod p61
        bool zero() const { return cnt == 0 && sum == 0 && fp == 0; }
    };

    int n_ = 0;
    int failure_c_ = 3;
    int banks_ = 0, copies_ = 0, levels_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> hash_ab_;  // per bank*copy
    std::unordered_map<std::uint64_t, Cell> cells_;                 // key: ((v*banks+bank)*copies+copy)*levels+level

    int level_of(std::size_t bank_copy, std::uint64_t item) const;
    void touch(VertexId endpoint, std::uint64_t item, int sign);
    std::optional<std::uint64_t> decode(const Cell& c) const;

    friend class SketchProbe;
};

// Bipartite double cover: edge (u,v) of G becomes (u_a, v_b) and (u_b, v_a)
// on vertex set of size 2n (copy b offset by n).
std::pair<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>> double_cover_edges(
    int n, VertexId u, VertexId v);

// G bipartite iff the double cover has exactly twice as many components.
bool is_bipartite_sketched(const ConnectivitySketch& g_sketch, const ConnectivitySketch& cover_sketch);

}  // namespace fpss
