#include "fpss/proper_interval.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "fpss/classes.hpp"
#include "fpss/errors.hpp"
#include "fpss/sketch.hpp"

namespace fpss {

void IntervalOrder::index() {
    int maxid = -1;
    for (auto [v, e] : tokens) maxid = std::max(maxid, v);
    begin_pos.assign(maxid + 1, -1);
    end_pos.assign(maxid + 1, -1);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto [v, is_end] = tokens[i];
        (is_end ? end_pos : begin_pos)[v] = static_cast<int>(i);
    }
}

bool IntervalOrder::adjacent(VertexId u, VertexId v) const {
    if (u == v) return false;
    int bu = begin_pos[u], eu = end_pos[u], bv = begin_pos[v], ev = end_pos[v];
    return (bu < bv && bv < eu) || (bv < bu && bu < ev);
}

std::string IntervalOrder::serialize() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out << " ";
        out << (tokens[i].second ? "e" : "b") << tokens[i].first;
    }
    return out.str();
}

namespace {

struct LocalEvent {
    int u, v, sign;
};

using Order = std::vector<std::vector<char>>;  // strict, transitively closed

bool close_order(Order& lt, const std::vector<int>& members) {
    // Floyd-Warshall over the member set; false on an antisymmetry violation.
    for (int m : members)
        for (int a : members)
            if (lt[a][m])
                for (int b : members)
                    if (lt[m][b]) lt[a][b] = 1;
    for (int a : members)
        for (int b : members)
            if (a != b && lt[a][b] && lt[b][a]) return false;
    for (int a : members)
        if (lt[a][a]) return false;
    return true;
}

struct AnnoResult {
    PivOutcome oc = PivOutcome::NoInstance;
    std::vector<std::pair<int, bool>> perm;  // tokens over local ids
    int passes = 0;
};

class PivRunner {
  public:
    PivRunner(std::vector<LocalEvent> events, int w, std::uint64_t seed, int s)
        : events_(std::move(events)), w_(w), rng_(seed), s_(s) {}

    AnnoResult annotated(const std::vector<int>& verts, Order lt);

    // One pass over the buffered events restricted to `in` (nonzero entries).
    template <typename Fn>
    void pass(const std::vector<char>& in, Fn&& fn) {
        for (const auto& e : events_)
            if (in[e.u] && in[e.v]) fn(e.u, e.v, e.sign);
    }

    int w_;

  private:
    std::vector<LocalEvent> events_;
    std::mt19937_64 rng_;
    int s_;
};

AnnoResult PivRunner::annotated(const std::vector<int>& verts, Order lt) {
    AnnoResult res;
    int w = static_cast<int>(verts.size());
    if (w == 0) {
        res.oc = PivOutcome::Accepted;
        return res;
    }
    if (w == 1) {
        res.oc = PivOutcome::Accepted;
        res.perm = {{verts[0], false}, {verts[0], true}};
        return res;
    }
    std::vector<char> in(w_, 0);
    for (int v : verts) in[v] = 1;

    // --- middle vertex attempts ---
    int vstar = -1;
    std::vector<char> in_m(w_, 0);
    std::vector<int> comp_of(w_, -1);
    std::vector<std::vector<int>> comp_verts;
    bool found = false;
    for (int attempt = 0; attempt < s_ && !found; ++attempt) {
        int cand = verts[rng_() % w];
        std::fill(in_m.begin(), in_m.end(), 0);
        in_m[cand] = 1;
        res.passes += 1;  // N(v*)
        pass(in, [&](int u, int v, int sign) {
            if (u == cand) in_m[v] = static_cast<char>(in_m[v] + sign);
            if (v == cand) in_m[u] = static_cast<char>(in_m[u] + sign);
        });
        // connectivity of verts \ N[v*]
        std::vector<int> rest;
        for (int v : verts)
            if (!in_m[v]) rest.push_back(v);
        res.passes += 1;  // sketch pass
        std::fill(comp_of.begin(), comp_of.end(), -1);
        comp_verts.clear();
        if (!rest.empty()) {
            std::vector<int> slot(w_, -1);
            for (std::size_t i = 0; i < rest.size(); ++i) slot[rest[i]] = static_cast<int>(i);
            ConnectivitySketch sk(static_cast<int>(rest.size()), 3, rng_());
            std::vector<char> in_rest(w_, 0);
            for (int v : rest) in_rest[v] = 1;
            pass(in_rest, [&](int u, int v, int sign) { sk.update(slot[u], slot[v], sign); });
            std::vector<int> parts;
            try {
                parts = sk.components();
            } catch (const SketchFailure&) {
                continue;  // attempt burned; retry
            }
            int nc = 0;
            for (int c : parts) nc = std::max(nc, c + 1);
            if (nc > 2) {
                res.oc = PivOutcome::NoInstance;  // connected instances split in <= 2 parts
                return res;
            }
            comp_verts.assign(nc, {});
            for (std::size_t i = 0; i < rest.size(); ++i) {
                comp_of[rest[i]] = parts[i];
                comp_verts[parts[i]].push_back(rest[i]);
            }
        }
        bool middle = true;
        for (const auto& cv : comp_verts)
            if (static_cast<int>(cv.size()) * 10 > 9 * w) middle = false;
        if (middle) {
            vstar = cand;
            found = true;
        }
    }
    if (!found) {
        res.oc = PivOutcome::Fail;
        return res;
    }

    std::vector<int> m_verts;
    for (int v : verts)
        if (in_m[v]) m_verts.push_back(v);
    while (comp_verts.size() < 2) comp_verts.push_back({});

    // --- step 3: orient the two components as L and R ---
    auto rename_ok = [&](const std::vector<int>& left, const std::vector<int>& right) {
        std::vector<char> is_l(w_, 0), is_r(w_, 0);
        for (int v : left) is_l[v] = 1;
        for (int v : right) is_r[v] = 1;
        for (int u : verts)
            for (int v : verts) {
                if (u == v || !lt[u][v]) continue;
                if (is_l[u] || is_r[v] || (in_m[u] && in_m[v])) continue;
                return false;
            }
        return true;
    };
    std::vector<int> L, R;
    if (rename_ok(comp_verts[0], comp_verts[1])) {
        L = comp_verts[0];
        R = comp_verts[1];
    } else if (rename_ok(comp_verts[1], comp_verts[0])) {
        L = comp_verts[1];
        R = comp_verts[0];
    } else {
        res.oc = PivOutcome::NoInstance;
        return res;
    }
    std::vector<char> is_l(w_, 0), is_r(w_, 0);
    for (int v : L) is_l[v] = 1;
    for (int v : R) is_r[v] = 1;

    // --- step 4: degree triples ---
    std::vector<int> dL(w_, 0), dM(w_, 0), dR(w_, 0);
    res.passes += 1;
    pass(in, [&](int u, int v, int sign) {
        auto bump = [&](int a, int b) {
            if (is_l[b]) dL[a] += sign;
            else if (is_r[b]) dR[a] += sign;
            else dM[a] += sign;
        };
        bump(u, v);
        bump(v, u);
    });

    // --- step 5: pick a (and b) ---
    auto minimal_in = [&](const std::vector<int>& pool, int u) {
        for (int x : pool)
            if (x != u && lt[x][u]) return false;
        return true;
    };
    auto maximal_in = [&](const std::vector<int>& pool, int u) {
        for (int x : pool)
            if (x != u && lt[u][x]) return false;
        return true;
    };
    auto pick = [&](const std::vector<int>& pool, const std::vector<int>& key_degree, bool want_max,
                    bool extreme_min) -> int {
        // argmax/argmin of key over pool, filtered to <-minimal/maximal, then
        // min dM, lowest index. Returns -1 when the filter empties the pool.
        if (pool.empty()) return -1;
        int best_key = want_max ? INT_MIN : INT_MAX;
        for (int u : pool) best_key = want_max ? std::max(best_key, key_degree[u])
                                               : std::min(best_key, key_degree[u]);
        std::vector<int> cand;
        for (int u : pool)
            if (key_degree[u] == best_key &&
                (extreme_min ? minimal_in(pool, u) : maximal_in(pool, u)))
                cand.push_back(u);
        if (cand.empty()) return -1;
        int best = cand[0];
        for (int u : cand)
            if (dM[u] < dM[best] || (dM[u] == dM[best] && u < best)) best = u;
        return best;
    };

    int a = -1, b = -1;
    std::vector<char> in_na(w_, 0);  // N[a] closed
    auto scan_neighbors = [&](int x, std::vector<char>& out) {
        std::fill(out.begin(), out.end(), 0);
        out[x] = 1;
        res.passes += 1;
        pass(in, [&](int u, int v, int sign) {
            if (u == x) out[v] = static_cast<char>(out[v] + sign);
            if (v == x) out[u] = static_cast<char>(out[u] + sign);
        });
    };
    auto choose_b_from_a = [&]() -> bool {  // steps 5(a)i-iii; needs in_na
        std::vector<int> outside;
        for (int u : m_verts)
            if (!in_na[u]) outside.push_back(u);
        if (!outside.empty())
            b = pick(outside, dR, true, false);
        else
            b = pick(m_verts, dR, true, false);
        return b >= 0;
    };

    if (!L.empty()) {
        a = pick(m_verts, dL, true, true);
        if (a < 0) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
        scan_neighbors(a, in_na);
        if (!choose_b_from_a()) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
    } else if (!R.empty()) {
        b = pick(m_verts, dR, true, false);
        if (b < 0) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
        std::vector<char> in_nb(w_, 0);
        scan_neighbors(b, in_nb);
        std::vector<int> outside;
        for (int u : m_verts)
            if (!in_nb[u]) outside.push_back(u);
        if (!outside.empty())
            a = pick(outside, dL, true, true);
        else
            a = pick(m_verts, dL, true, true);
        if (a < 0) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
        scan_neighbors(a, in_na);
    } else {
        // both empty: a = <-minimal with minimum dM
        std::vector<int> zeros(w_, 0);
        a = pick(m_verts, zeros, true, true);
        if (a < 0) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
        scan_neighbors(a, in_na);
        if (!choose_b_from_a()) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
    }
    (void)b;  // b's choosability gates no-instances; the ordering uses N[a]

    // --- step 6: recursive calls on L and R ---
    Order ltL = lt, ltR = lt;
    for (int u : L)
        for (int v : L)
            if (u != v && dM[u] < dM[v]) ltL[u][v] = 1;
    if (!close_order(ltL, L)) {
        res.oc = PivOutcome::NoInstance;
        return res;
    }
    for (int u : R)
        for (int v : R)
            if (u != v && dM[u] > dM[v]) ltR[u][v] = 1;
    if (!close_order(ltR, R)) {
        res.oc = PivOutcome::NoInstance;
        return res;
    }
    AnnoResult left = annotated(L, ltL);
    if (left.oc != PivOutcome::Accepted) {
        res.oc = left.oc;
        res.passes += left.passes;
        return res;
    }
    AnnoResult right = annotated(R, ltR);
    if (right.oc != PivOutcome::Accepted) {
        res.oc = right.oc;
        res.passes += std::max(left.passes, right.passes);
        return res;
    }
    res.passes += std::max(left.passes, right.passes);  // siblings share replays

    // --- step 7: global ordering of begin points ---
    std::vector<int> begins;  // vertices in begin order
    for (auto [v, is_end] : left.perm)
        if (!is_end) begins.push_back(v);
    int m_begin_offset = static_cast<int>(begins.size());
    {
        // topological order of M under the six precedence conditions
        auto before = [&](int u, int v) {
            if (lt[u][v]) return true;
            if (dL[u] > dL[v]) return true;
            if (dR[u] < dR[v]) return true;
            if (in_na[u] && in_na[v] && dM[u] < dM[v]) return true;
            if (!in_na[u] && !in_na[v] && dM[u] > dM[v]) return true;
            if (in_na[u] && !in_na[v]) return true;
            return false;
        };
        int mm = static_cast<int>(m_verts.size());
        std::vector<std::vector<char>> prec(mm, std::vector<char>(mm, 0));
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < mm; ++j) {
                if (i == j) continue;
                if (before(m_verts[i], m_verts[j])) prec[i][j] = 1;
            }
        for (int i = 0; i < mm; ++i)
            for (int j = i + 1; j < mm; ++j)
                if (prec[i][j] && prec[j][i]) {
                    res.oc = PivOutcome::NoInstance;
                    return res;
                }
        std::vector<int> indeg(mm, 0);
        for (int i = 0; i < mm; ++i)
            for (int j = 0; j < mm; ++j) indeg[j] += prec[i][j];
        std::vector<char> done(mm, 0);
        for (int step = 0; step < mm; ++step) {
            int pickv = -1;
            for (int i = 0; i < mm; ++i)
                if (!done[i] && indeg[i] == 0 && (pickv < 0 || m_verts[i] < m_verts[pickv]))
                    pickv = i;
            if (pickv < 0) {
                res.oc = PivOutcome::NoInstance;  // cycle among the conditions
                return res;
            }
            done[pickv] = 1;
            begins.push_back(m_verts[pickv]);
            for (int j = 0; j < mm; ++j)
                if (prec[pickv][j]) --indeg[j];
        }
    }
    int r_begin_offset = static_cast<int>(begins.size());
    for (auto [v, is_end] : right.perm)
        if (!is_end) begins.push_back(v);

    std::vector<int> pos_of_begin(w_, -1);
    for (std::size_t i = 0; i < begins.size(); ++i) pos_of_begin[begins[i]] = static_cast<int>(i);
    auto mth_m = [&](int idx1) { return begins[m_begin_offset + idx1 - 1]; };  // 1-indexed in M
    auto mth_r = [&](int idx1) { return begins[r_begin_offset + idx1 - 1]; };

    // --- steps 8-10: assign end tokens to gaps between consecutive begins ---
    // gap g holds ends placed after begins[g-1] and before begins[g].
    std::vector<std::vector<int>> gap(begins.size() + 1);
    int last_m_begin = m_verts.empty() ? -1 : begins[r_begin_offset - 1];
    auto place = [&](int u, int g) { gap[g].push_back(u); };

    auto place_perm_ends = [&](const std::vector<std::pair<int, bool>>& perm, bool is_left) {
        int last_begin = -1;
        for (auto [v, is_end] : perm) {
            if (!is_end) {
                last_begin = v;
                continue;
            }
            if (is_left && dM[v] > 0) {
                place(v, pos_of_begin[mth_m(dM[v])] + 1);
            } else {
                place(v, pos_of_begin[last_begin] + 1);
            }
        }
    };
    place_perm_ends(left.perm, true);
    place_perm_ends(right.perm, false);
    for (int u : m_verts) {
        if (dR[u] > 0) {
            place(u, pos_of_begin[mth_r(dR[u])] + 1);
        } else if (pos_of_begin[u] > pos_of_begin[vstar]) {
            place(u, pos_of_begin[last_m_begin] + 1);
        } else if (dM[u] == 0) {
            place(u, pos_of_begin[u] + 1);
        } else {
            place(u, pos_of_begin[mth_m(dM[u])] + 1);
        }
    }

    // --- step 11: ends within a gap follow the begin order ---
    for (auto& g : gap)
        std::sort(g.begin(), g.end(),
                  [&](int x, int y) { return pos_of_begin[x] < pos_of_begin[y]; });

    std::vector<std::pair<int, bool>> tokens;
    for (std::size_t g = 0; g <= begins.size(); ++g) {
        for (int u : gap[g]) tokens.emplace_back(u, true);
        if (g < begins.size()) tokens.emplace_back(begins[g], false);
    }

    // --- step 12: containment check ---
    std::vector<int> bpos(w_, -1), epos(w_, -1);
    for (std::size_t i = 0; i < tokens.size(); ++i)
        (tokens[i].second ? epos : bpos)[tokens[i].first] = static_cast<int>(i);
    for (int u : verts)
        if (bpos[u] < 0 || epos[u] < 0 || epos[u] < bpos[u]) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
    for (int u : verts)
        for (int v : verts) {
            if (u == v) continue;
            if (bpos[u] < bpos[v] && epos[v] < epos[u]) {
                res.oc = PivOutcome::NoInstance;
                return res;
            }
        }

    // --- step 13: verification pass ---
    res.passes += 1;
    std::set<std::pair<int, int>> live;
    std::vector<int> deg(w_, 0);
    pass(in, [&](int u, int v, int sign) {
        auto key = std::minmax(u, v);
        if (sign > 0)
            live.insert(key);
        else
            live.erase(key);
        deg[u] += sign;
        deg[v] += sign;
    });
    auto adj = [&](int u, int v) {
        return (bpos[u] < bpos[v] && bpos[v] < epos[u]) || (bpos[v] < bpos[u] && bpos[u] < epos[v]);
    };
    for (auto [u, v] : live)
        if (!adj(u, v)) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
    for (int u : verts) {
        int model_deg = 0;
        for (int v : verts)
            if (v != u && adj(u, v)) ++model_deg;
        if (model_deg != deg[u]) {
            res.oc = PivOutcome::NoInstance;
            return res;
        }
    }
    res.oc = PivOutcome::Accepted;
    res.perm = std::move(tokens);
    return res;
}

}  // namespace

PivResult reconstruct_piv(const ParsedStream& stream, std::uint64_t seed,
                          std::vector<VertexId> subset, int s_override) {
    if (subset.empty())
        for (int v = 0; v < stream.header.n; ++v) subset.push_back(v);
    int w = static_cast<int>(subset.size());
    PivResult out;
    out.s = s_override > 0
                ? s_override
                : std::max(2, static_cast<int>(std::ceil(2.0 * std::log(std::max(2, w)) /
                                                         std::log(5.0))));
    out.pass_bound = 5.0 * out.s * (std::log(std::max(2, w)) / std::log(10.0 / 9.0));
    if (w == 0) {
        out.outcome = PivOutcome::Accepted;
        return out;
    }

    std::vector<int> local(stream.header.n, -1);
    for (int i = 0; i < w; ++i) local[subset[i]] = i;
    std::vector<LocalEvent> levents;
    for (const auto& e : stream.events) {
        int lu = local[e.u], lv = local[e.v];
        if (lu < 0 || lv < 0) continue;
        levents.push_back({lu, lv, e.op == StreamOp::Insert ? 1 : -1});
    }

    PivRunner runner(levents, w, seed, out.s);

    // components of the whole subset (one sketch pass)
    std::vector<int> parts(w, 0);
    if (w > 1) {
        ConnectivitySketch sk(w, 3, seed ^ 0xc0a1ULL);
        for (const auto& e : levents) sk.update(e.u, e.v, e.sign);
        try {
            parts = sk.components();
        } catch (const SketchFailure&) {
            out.outcome = PivOutcome::Fail;
            return out;
        }
    }
    out.passes = 1;
    int nc = *std::max_element(parts.begin(), parts.end()) + 1;
    std::vector<std::vector<int>> comps(nc);
    for (int v = 0; v < w; ++v) comps[parts[v]].push_back(v);

    int max_child = 0;
    std::vector<std::pair<int, bool>> all_tokens;
    for (const auto& cv : comps) {
        Order lt(w, std::vector<char>(w, 0));
        AnnoResult r = runner.annotated(cv, std::move(lt));
        max_child = std::max(max_child, r.passes);
        if (r.oc != PivOutcome::Accepted) {
            out.passes += max_child;
            out.outcome = r.oc;
            return out;
        }
        all_tokens.insert(all_tokens.end(), r.perm.begin(), r.perm.end());
    }
    out.passes += max_child;

    // final whole-subset verification (also guards a bad component split)
    IntervalOrder local_order;
    local_order.tokens = all_tokens;
    local_order.index();
    out.passes += 1;
    {
        std::set<std::pair<int, int>> live;
        std::vector<int> deg(w, 0);
        for (const auto& e : levents) {
            auto key = std::minmax(e.u, e.v);
            if (e.sign > 0)
                live.insert(key);
            else
                live.erase(key);
            deg[e.u] += e.sign;
            deg[e.v] += e.sign;
        }
        for (auto [u, v] : live)
            if (!local_order.adjacent(u, v)) {
                out.outcome = PivOutcome::Fail;  // randomized split error, not a certificate
                return out;
            }
        for (int u = 0; u < w; ++u) {
            int model_deg = 0;
            for (int v = 0; v < w; ++v)
                if (v != u && local_order.adjacent(u, v)) ++model_deg;
            if (model_deg != deg[u]) {
                out.outcome = PivOutcome::Fail;
                return out;
            }
        }
    }

    out.order.tokens.clear();
    for (auto [v, is_end] : all_tokens) out.order.tokens.emplace_back(subset[v], is_end);
    out.order.index();
    out.outcome = PivOutcome::Accepted;
    return out;
}

bool verify_model(const ParsedStream& stream, const std::vector<VertexId>& subset,
                  const IntervalOrder& order) {
    std::vector<char> in(stream.header.n, 0);
    std::vector<VertexId> verts = subset;
    if (verts.empty())
        for (int v = 0; v < stream.header.n; ++v) verts.push_back(v);
    for (int v : verts) in[v] = 1;
    std::set<std::pair<int, int>> live;
    std::vector<int> deg(stream.header.n, 0);
    for (const auto& e : stream.events) {
        if (!in[e.u] || !in[e.v]) continue;
        int sign = e.op == StreamOp::Insert ? 1 : -1;
        auto key = std::minmax(e.u, e.v);
        if (sign > 0)
            live.insert(key);
        else
            live.erase(key);
        deg[e.u] += sign;
        deg[e.v] += sign;
    }
    for (int v : verts)
        if (v >= static_cast<int>(order.begin_pos.size()) || order.begin_pos[v] < 0 ||
            order.end_pos[v] < 0)
            return false;
    for (auto [u, v] : live)
        if (!order.adjacent(u, v)) return false;
    for (int u : verts) {
        int model_deg = 0;
        for (int v : verts)
            if (v != u && order.adjacent(u, v)) ++model_deg;
        if (model_deg != deg[u]) return false;
    }
    return true;
}

bool is_middle_vertex(const ExplicitGraph& g, VertexId v) {
    std::vector<VertexId> del{v};
    for (int u : g.adj[v]) del.push_back(u);
    ExplicitGraph h = g.remove_vertices(del);
    if (h.n == 0) return true;
    auto comp = h.component_ids();
    int nc = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> size(nc, 0);
    for (int c : comp) ++size[c];
    for (int s : size)
        if (10 * s > 9 * g.n) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Static solver
// ---------------------------------------------------------------------------

namespace {

// Cheap predicate scans for the bounded obstructions.
bool subset_is_cycle(const ExplicitGraph& g, const std::vector<int>& s) {
    int m = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) ++m;
    if (m != static_cast<int>(s.size())) return false;
    for (int v : s) {
        int d = 0;
        for (int u : s)
            if (u != v && g.has_edge(u, v)) ++d;
        if (d != 2) return false;
    }
    return g.induced(s).component_count() == 1;
}

bool subset_is_claw(const ExplicitGraph& g, const std::vector<int>& s) {
    int m = 0, dmax = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        int d = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && g.has_edge(s[i], s[j])) ++d;
        dmax = std::max(dmax, d);
        m += d;
    }
    return m == 6 && dmax == 3;  // 3 edges, one center
}

bool subset_is_net(const ExplicitGraph& g, const std::vector<int>& s) {
    std::vector<int> deg3, deg1;
    int m = 0;
    for (int v : s) {
        int d = 0;
        for (int u : s)
            if (u != v && g.has_edge(u, v)) ++d;
        if (d == 3) deg3.push_back(v);
        else if (d == 1) deg1.push_back(v);
        else return false;
        m += d;
    }
    if (m != 12 || deg3.size() != 3 || deg1.size() != 3) return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (!g.has_edge(deg3[i], deg3[j])) return false;
    return true;
}

bool subset_is_tent(const ExplicitGraph& g, const std::vector<int>& s) {
    std::vector<int> deg4, deg2;
    int m = 0;
    for (int v : s) {
        int d = 0;
        for (int u : s)
            if (u != v && g.has_edge(u, v)) ++d;
        if (d == 4) deg4.push_back(v);
        else if (d == 2) deg2.push_back(v);
        else return false;
        m += d;
    }
    if (m != 18 || deg4.size() != 3 || deg2.size() != 3) return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!g.has_edge(deg4[i], deg4[j])) return false;
            if (g.has_edge(deg2[i], deg2[j])) return false;
        }
    return true;
}

template <typename Pred>
std::vector<int> scan_subsets(const ExplicitGraph& g, int size, Pred&& pred) {
    std::vector<int> s;
    std::function<std::vector<int>(int)> go = [&](int start) -> std::vector<int> {
        if (static_cast<int>(s.size()) == size) return pred(g, s) ? s : std::vector<int>{};
        for (int v = start; v < g.n; ++v) {
            s.push_back(v);
            auto r = go(v + 1);
            if (!r.empty()) return r;
            s.pop_back();
        }
        return {};
    };
    return go(0);
}

// First induced obstruction among claw, C4, C5, net, tent, C6, C7.
std::vector<int> find_small_pig_obstruction(const ExplicitGraph& g) {
    auto r = scan_subsets(g, 4, [](const ExplicitGraph& g2, const std::vector<int>& s) {
        return subset_is_claw(g2, s) || subset_is_cycle(g2, s);
    });
    if (!r.empty()) return r;
    r = scan_subsets(g, 5, subset_is_cycle);
    if (!r.empty()) return r;
    r = scan_subsets(g, 6, [](const ExplicitGraph& g2, const std::vector<int>& s) {
        return subset_is_net(g2, s) || subset_is_tent(g2, s) || subset_is_cycle(g2, s);
    });
    if (!r.empty()) return r;
    return scan_subsets(g, 7, subset_is_cycle);
}

}  // namespace

bool is_pig_fast(const ExplicitGraph& g) {
    if (!is_chordal(g)) return false;
    if (!scan_subsets(g, 4, subset_is_claw).empty()) return false;
    if (!scan_subsets(g, 6, subset_is_net).empty()) return false;
    if (!scan_subsets(g, 6, subset_is_tent).empty()) return false;
    return true;
}

namespace {

bool pivd_branch(const ExplicitGraph& g, const std::vector<VertexId>& labels, int k,
                 std::vector<VertexId>& acc, SolveResult& res) {
    ++res.branch_nodes;
    auto bad = find_small_pig_obstruction(g);
    if (!bad.empty()) {
        if (k == 0) return false;
        for (int v : bad) {
            std::vector<int> keep;
            for (int u = 0; u < g.n; ++u)
                if (u != v) keep.push_back(u);
            ExplicitGraph h = g.induced(keep);
            std::vector<VertexId> hl;
            for (int u : keep) hl.push_back(labels[u]);
            acc.push_back(labels[v]);
            if (pivd_branch(h, hl, k - 1, acc, res)) return true;
            acc.pop_back();
        }
        return false;
    }
    // Circular-arc remainder.
    if (is_pig_fast(g)) return true;
    // neighborhoods as bitsets over this graph
    std::vector<std::vector<char>> nb(g.n, std::vector<char>(g.n, 0));
    for (int v = 0; v < g.n; ++v) {
        nb[v][v] = 1;
        for (int u : g.adj[v]) nb[v][u] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        for (int x = 0; x < g.n; ++x) {
            if (v == x) continue;
            std::vector<int> w_set;
            for (int u = 0; u < g.n; ++u) {
                if (!nb[v][u] || !nb[x][u]) continue;
                if (nb[u] == nb[v]) continue;
                bool inside = true;
                for (int y = 0; y < g.n && inside; ++y)
                    if (nb[u][y] && !nb[v][y] && !nb[x][y]) inside = false;
                if (inside) w_set.push_back(u);
            }
            if (static_cast<int>(w_set.size()) > k) continue;
            ExplicitGraph h = g.remove_vertices(w_set);
            if (is_pig_fast(h)) {
                for (int u : w_set) acc.push_back(labels[u]);
                return true;
            }
        }
    return false;
}

}  // namespace

SolveResult static_pivd(const ExplicitGraph& g, int k) {
    SolveResult res;
    if (k < 0) return res;
    std::vector<VertexId> labels(g.n);
    for (int i = 0; i < g.n; ++i) labels[i] = i;
    std::vector<VertexId> acc;
    res.yes = pivd_branch(g, labels, k, acc, res);
    if (res.yes) {
        std::sort(acc.begin(), acc.end());
        res.solution = acc;
    }
    return res;
}

}  // namespace fpss
