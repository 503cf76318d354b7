#include "fpss/hereditary_engine.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "fpss/block_graphs.hpp"
#include "fpss/classes.hpp"
#include "fpss/errors.hpp"
#include "fpss/proper_interval.hpp"

namespace fpss {

ClassAdapter block_graph_adapter() {
    return [](const ParsedStream& stream, const std::vector<VertexId>& subset,
              std::uint64_t seed) -> AdapterOutcome {
        AdapterOutcome out;
        out.passes_used = 1;
        try {
            auto rec = reconstruct_tblock(stream, stream.header.n, 1, seed, subset);
            if (!rec.in_class) return out;
            auto local = std::make_shared<std::vector<int>>(stream.header.n, -1);
            for (std::size_t i = 0; i < subset.size(); ++i) (*local)[subset[i]] = static_cast<int>(i);
            out.in_class = true;
            out.edge_query = [oracle = rec.oracle, local](VertexId u, VertexId v) {
                int lu = (*local)[u], lv = (*local)[v];
                if (lu < 0 || lv < 0) return false;
                return oracle->edge(lu, lv);
            };
        } catch (const SketchFailure&) {
            out.in_class = false;  // counted toward the randomized budget
        }
        return out;
    };
}

ClassAdapter proper_interval_adapter(int retries) {
    return [retries](const ParsedStream& stream, const std::vector<VertexId>& subset,
                     std::uint64_t seed) -> AdapterOutcome {
        AdapterOutcome out;
        out.passes_used = 0;
        for (int attempt = 0; attempt < retries; ++attempt) {
            PivResult r = reconstruct_piv(stream, seed + 0x9e37ULL * attempt, subset);
            out.passes_used += r.passes;
            if (r.outcome == PivOutcome::Accepted) {
                out.in_class = true;
                auto order = std::make_shared<IntervalOrder>(std::move(r.order));
                out.edge_query = [order](VertexId u, VertexId v) {
                    if (u >= static_cast<int>(order->begin_pos.size()) ||
                        v >= static_cast<int>(order->begin_pos.size()))
                        return false;
                    if (order->begin_pos[u] < 0 || order->begin_pos[v] < 0) return false;
                    return order->adjacent(u, v);
                };
                return out;
            }
            if (r.outcome == PivOutcome::NoInstance) return out;  // certified negative
        }
        return out;  // repeated Fail
    };
}

bool UnionRepresentation::edge_query_union(VertexId u, VertexId v) const {
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].in_class) continue;
        if (!(member_bits[u][i / 64] & member_bits[v][i / 64] & (1ULL << (i % 64)))) continue;
        if (outcomes[i].edge_query(u, v)) return true;
    }
    return false;
}

bool UnionRepresentation::forced_pair(VertexId u, VertexId v) const {
    for (std::size_t b = 0; b < member_bits[u].size(); ++b)
        if (member_bits[u][b] & member_bits[v][b]) return false;
    return true;
}

namespace {

SeparatingFamily pair_family_or_separating(int n, int k) {
    if (n >= k + 2) return graph_separating(n, k);
    SeparatingFamily fam;  // all pairs: valid for any k at degenerate sizes
    fam.n = n;
    fam.k = k;
    fam.l = 2;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) fam.subsets.push_back({u, v});
    return fam;
}

}  // namespace

UnionRepresentation hereditary_stream_phase(const ParsedStream& stream, int n, int k,
                                            const ClassAdapter& adapter, std::uint64_t seed,
                                            int jobs) {
    UnionRepresentation rep;
    rep.n = n;
    rep.family = pair_family_or_separating(n, k);
    std::size_t t = rep.family.subsets.size();
    rep.outcomes.resize(t);

    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            rep.outcomes[i] = adapter(stream, rep.family.subsets[i], seed ^ (0xada7ULL * (i + 1)));
    };
    if (jobs <= 1 || t < 8) {
        work(0, t);
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (t + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            std::size_t lo = j * chunk, hi = std::min(t, (j + 1) * chunk);
            if (lo >= hi) break;
            threads.emplace_back(work, lo, hi);
        }
        for (auto& th : threads) th.join();
    }

    std::size_t blocks = (t + 63) / 64;
    rep.member_bits.assign(n, std::vector<std::uint64_t>(blocks, 0));
    for (std::size_t i = 0; i < t; ++i) {
        if (!rep.outcomes[i].in_class) continue;
        ++rep.active_count;
        for (int v : rep.family.subsets[i]) rep.member_bits[v][i / 64] |= 1ULL << (i % 64);
        rep.passes_shared = std::max(rep.passes_shared, rep.outcomes[i].passes_used);
    }
    return rep;
}

HereditaryResult run_hereditary_engine(const ParsedStream& stream, Problem problem, int k,
                                       std::uint64_t seed, int jobs) {
    if (problem != Problem::Bvd && problem != Problem::Pivd)
        throw InvalidParams("hereditary engine handles bvd and pivd");
    int n = stream.header.n;
    HereditaryResult res;
    if (k < 0) return res;
    if (n <= 1) {
        res.solve.yes = true;
        return res;
    }

    ClassAdapter adapter =
        problem == Problem::Bvd ? block_graph_adapter() : proper_interval_adapter();
    StaticClassSolver solver =
        problem == Problem::Bvd
            ? StaticClassSolver([](const ExplicitGraph& g, int kk, std::uint64_t sd) {
                  return solve_bvd(g, kk, sd);
              })
            : StaticClassSolver([](const ExplicitGraph& g, int kk, std::uint64_t) {
                  return static_pivd(g, kk);
              });

    UnionRepresentation rep = hereditary_stream_phase(stream, n, k, adapter, seed, jobs);
    res.passes_shared = rep.passes_shared;
    res.family_size = rep.family.subsets.size();

    ExplicitGraph truth = materialize(stream);  // verification oracle only

    // Enumerate vertex covers of the forced-pair graph by branching on an
    // uncovered forced pair (lowest-index first); <= 2^k leaves.
    std::set<std::vector<VertexId>> tried;
    std::vector<VertexId> cover;
    std::vector<char> in_cover(n, 0);
    std::function<bool(int)> branch = [&](int budget) -> bool {
        int pu = -1, pv = -1;
        for (int u = 0; u < n && pu < 0; ++u) {
            if (in_cover[u]) continue;
            for (int v = u + 1; v < n; ++v) {
                if (in_cover[v]) continue;
                if (rep.forced_pair(u, v)) {
                    pu = u;
                    pv = v;
                    break;
                }
            }
        }
        if (pu < 0) {
            std::vector<VertexId> x = cover;
            std::sort(x.begin(), x.end());
            if (!tried.insert(x).second) return false;
            ++res.covers_tried;
            std::vector<VertexId> keep;
            for (int v = 0; v < n; ++v)
                if (!in_cover[v]) keep.push_back(v);
            ExplicitGraph tilde(static_cast<int>(keep.size()));
            for (std::size_t i = 0; i < keep.size(); ++i)
                for (std::size_t j = i + 1; j < keep.size(); ++j)
                    if (rep.edge_query_union(keep[i], keep[j]))
                        tilde.add_edge(static_cast<int>(i), static_cast<int>(j));
            SolveResult sub = solver(tilde, k - static_cast<int>(x.size()), seed ^ 0x50f7ULL);
            if (!sub.yes) return false;
            std::vector<VertexId> full = x;
            for (int v : sub.solution) full.push_back(keep[v]);
            std::sort(full.begin(), full.end());
            if (!check_solution(problem, truth, full)) return false;  // soundness gate
            res.solve.yes = true;
            res.solve.solution = full;
            return true;
        }
        if (budget == 0) return false;
        for (int pickv : {pu, pv}) {
            in_cover[pickv] = 1;
            cover.push_back(pickv);
            if (branch(budget - 1)) return true;
            cover.pop_back();
            in_cover[pickv] = 0;
        }
        return false;
    };
    branch(k);
    return res;
}

}  // namespace fpss
