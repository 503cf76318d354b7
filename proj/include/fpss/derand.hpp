#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fpss {

// Family of functions [n] -> [range] such that every k-subset of [n] is
// injectively colored by at least one member. Functions are (a*x+b) mod p
// mod range over a prime p in (n, 2n], kept greedily until verified coverage.
struct SplitterFamily {
    int n = 0, k = 0, range = 0;
    std::uint64_t prime = 0;
    // (a, b) per function; a == 0 encodes the identity map x -> x.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> funcs;

    int eval(std::size_t func_index, int x) const;
    std::size_t size() const { return funcs.size(); }
    // Measured constant C with |family| <= C * k^6 * max(1,ln k) * max(1,ln n).
    double measured_constant() const;
    std::string serialize() const;
};

struct SeparatingFamily {
    int n = 0, k = 0, l = 0;
    std::vector<std::vector<int>> subsets;
    std::size_t size() const { return subsets.size(); }
    std::string serialize() const;
};

// (n, k, k^2)-splitter. Deterministic for fixed (n, k). Exhaustive
// verification below `exhaustive_cap` k-subsets, sampled (1e5) above.
SplitterFamily build_splitter(int n, int k, std::uint64_t exhaustive_cap = 2'000'000);

// (n, k, l)-separating family via preimages of l-color sets of an
// (n, k+l, (k+l)^2)-splitter. Requires l <= k and n >= k + l.
SeparatingFamily build_separating(int n, int k, int l);

// Cor.-of-splitter family for pairs: for any pair {u,v} and any X of size <= k
// avoiding them, some member contains u,v and misses X. Works for any k >= 0.
SeparatingFamily graph_separating(int n, int k);

// Exhaustive verification oracles (throw CapExceeded above the cap).
bool verify_splitter(const SplitterFamily& f, int n, int k, std::uint64_t cap = 2'000'000);
bool verify_separating(const SeparatingFamily& f, int n, int k, int l,
                       std::uint64_t cap = 20'000'000);
bool verify_graph_separating(const SeparatingFamily& f, int n, int k,
                             std::uint64_t cap = 20'000'000);

}  // namespace fpss
