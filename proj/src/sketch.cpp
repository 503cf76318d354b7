#include "fpss/sketch.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <sstream>

#include "fpss/errors.hpp"

namespace fpss {

namespace {

constexpr std::uint64_t kP61 = (1ULL << 61) - 1;

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kP61);
}

inline std::uint64_t addmod61(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= kP61) s -= kP61;
    return s;
}

inline std::uint64_t submod61(std::uint64_t a, std::uint64_t b) { return addmod61(a, kP61 - b % kP61); }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// ---- F_p arithmetic for sparse recovery (p = 2^31 - 1) ----

constexpr std::uint64_t P = SparseRecovery::kPrime;

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b % P; }
inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= P) s -= P;
    return s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return add(a, P - b % P); }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= P;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a) { return powmod(a, P - 2); }

using Poly = std::vector<std::uint64_t>;  // coefficients, low degree first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(const Poly& a, const Poly& m) {
    Poly r = a;
    trim(r);
    std::uint64_t lead_inv = inv(m.back());
    while (r.size() >= m.size()) {
        std::uint64_t c = mul(r.back(), lead_inv);
        std::size_t shift = r.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            r[shift + i] = sub(r[shift + i], mul(c, m[i]));
        trim(r);
    }
    return r;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = add(prod[i + j], mul(a[i], b[j]));
    }
    return poly_mod(prod, m);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m) {
    Poly r{1};
    base = poly_mod(base, m);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t li = inv(a.back());
        for (auto& c : a) c = mul(c, li);
    }
    return a;
}

// Distinct roots of f (monic, squarefree over F_p after gcd with x^p - x),
// via deterministic-sequence equal-degree splitting.
void find_roots(const Poly& f, std::vector<std::uint64_t>& out, std::uint64_t shift_seed) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        // x + c -> root -c
        out.push_back(sub(0, f[0]));
        return;
    }
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::uint64_t a = (shift_seed + attempt) % P;
        Poly xa{a, 1};  // x + a
        Poly h = poly_powmod(xa, (P - 1) / 2, f);
        if (h.empty()) continue;
        h[0] = sub(h[0], 1);
        Poly g = poly_gcd(h, f);
        if (g.size() <= 1 || g.size() == f.size()) continue;
        Poly q = f;
        // q = f / g by synthetic division (g monic)
        {
            Poly quotient(f.size() - g.size() + 1, 0);
            Poly rem = f;
            for (std::size_t i = quotient.size(); i-- > 0;) {
                std::uint64_t c = rem[i + g.size() - 1];
                quotient[i] = c;
                if (c == 0) continue;
                for (std::size_t j = 0; j < g.size(); ++j)
                    rem[i + j] = sub(rem[i + j], mul(c, g[j]));
            }
            q = quotient;
            trim(q);
        }
        find_roots(g, out, shift_seed + attempt + 1);
        find_roots(q, out, shift_seed + attempt + 1);
        return;
    }
}

// Berlekamp-Massey: minimal LFSR c[1..L] with S_j = sum_i c_i S_{j-i}.
std::vector<std::uint64_t> berlekamp_massey(const std::vector<std::uint64_t>& s) {
    std::vector<std::uint64_t> ls, cur;
    std::uint64_t lf = 0, ld = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::uint64_t t = 0;
        for (std::size_t j = 0; j < cur.size(); ++j) t = add(t, mul(cur[j], s[i - 1 - j]));
        if (sub(s[i], t) == 0) continue;
        std::uint64_t delta = sub(s[i], t);
        if (cur.empty()) {
            cur.resize(i + 1, 0);
            lf = i;
            ld = delta;
            continue;
        }
        std::uint64_t k = mul(delta, inv(ld));
        std::vector<std::uint64_t> c(i - lf - 1, 0);
        c.push_back(k);
        for (std::size_t j = 0; j < ls.size(); ++j) c.push_back(sub(0, mul(ls[j], k)));
        if (c.size() < cur.size()) c.resize(cur.size(), 0);
        for (std::size_t j = 0; j < cur.size(); ++j) c[j] = add(c[j], cur[j]);
        if (i - cur.size() > lf - ls.size()) {
            ls = cur;
            lf = i;
            ld = delta;
        }
        cur = std::move(c);
    }
    return cur;
}

}  // namespace

// ---------------------------------------------------------------------------
// SparseRecovery
// ---------------------------------------------------------------------------

SparseRecovery::SparseRecovery(std::size_t capacity, std::uint64_t universe)
    : capacity_(capacity), universe_(universe), syndromes_(2 * capacity, 0) {
    if (universe >= P) throw InvalidParams("sparse recovery universe must be below 2^31-1");
    if (capacity == 0) throw InvalidParams("sparse recovery capacity must be positive");
}

void SparseRecovery::update(std::uint64_t item, int sign) {
    assert(item < universe_);
    live_ += sign;
    // x maps to x+1 so that item 0 contributes to syndromes past S_0.
    std::uint64_t x = (item + 1) % P;
    std::uint64_t pw = 1;
    for (auto& s : syndromes_) {
        s = sign > 0 ? add(s, pw) : sub(s, pw);
        pw = mul(pw, x);
    }
}

void SparseRecovery::merge(const SparseRecovery& other) {
    assert(other.syndromes_.size() == syndromes_.size());
    live_ += other.live_;
    for (std::size_t i = 0; i < syndromes_.size(); ++i)
        syndromes_[i] = add(syndromes_[i], other.syndromes_[i]);
}

bool SparseRecovery::all_zero() const {
    for (auto s : syndromes_)
        if (s) return false;
    return live_ != 0 ? false : true;
}

SparseRecovery::Result SparseRecovery::recover() const {
    Result res;
    if (all_zero()) {
        res.ok = true;
        return res;
    }
    if (live_ < 0 || static_cast<std::size_t>(live_) > capacity_) return res;  // FAIL

    auto rec = berlekamp_massey(syndromes_);
    std::size_t t = rec.size();
    if (t == 0 || t > capacity_) return res;

    // Characteristic polynomial x^t - rec[0] x^{t-1} - ... - rec[t-1].
    Poly lambda(t + 1, 0);
    lambda[t] = 1;
    for (std::size_t i = 0; i < t; ++i) lambda[t - 1 - i] = sub(0, rec[i]);

    // Restrict to roots living in F_p: gcd(lambda, x^p - x).
    Poly xp = poly_powmod(Poly{0, 1}, P, lambda);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = sub(xp[1], 1);
    Poly g = poly_gcd(xp, lambda);
    if (g.size() != lambda.size()) return res;  // some roots outside F_p -> FAIL

    std::vector<std::uint64_t> roots;
    find_roots(g, roots, 1);
    if (roots.size() != t) return res;

    // Verify: recompute every syndrome from the decoded set.
    std::vector<std::uint64_t> check(syndromes_.size(), 0);
    for (std::uint64_t r : roots) {
        if (r == 0 || r > universe_) return res;  // decoded value outside universe
        std::uint64_t pw = 1;
        for (auto& c : check) {
            c = add(c, pw);
            pw = mul(pw, r);
        }
    }
    if (check != syndromes_) return res;
    if (static_cast<long long>(t) != live_) return res;

    res.ok = true;
    for (std::uint64_t r : roots) res.items.push_back(r - 1);
    std::sort(res.items.begin(), res.items.end());
    return res;
}

std::string SparseRecovery::serialize() const {
    std::ostringstream out;
    out << "srs p=" << P << " cap=" << capacity_ << " universe=" << universe_ << " live=" << live_
        << "\n";
    for (auto s : syndromes_) out << s << " ";
    out << "\n";
    return out.str();
}

SparseRecovery SparseRecovery::deserialize(const std::string& text) {
    std::istringstream in(text);
    std::string tag, ptok, captok, utok, livetok;
    in >> tag >> ptok >> captok >> utok >> livetok;
    auto val = [](const std::string& t) { return std::stoull(t.substr(t.find('=') + 1)); };
    SparseRecovery s(val(captok), val(utok));
    s.live_ = static_cast<long long>(std::stoll(livetok.substr(livetok.find('=') + 1)));
    for (auto& x : s.syndromes_) in >> x;
    return s;
}

// ---------------------------------------------------------------------------
// ConnectivitySketch
// ---------------------------------------------------------------------------

ConnectivitySketch::ConnectivitySketch(int n, int failure_c, std::uint64_t seed, int banks,
                                       int copies)
    : n_(n), failure_c_(failure_c), seed_(seed) {
    banks_ = banks > 0 ? banks : 12;
    copies_ = copies > 0 ? copies : std::max(2, failure_c - 1);
    std::uint64_t uni = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    levels_ = 1;
    while ((1ULL << levels_) < uni) ++levels_;
    ++levels_;  // level 0 holds everything
    hash_ab_.reserve(static_cast<std::size_t>(banks_) * copies_);
    for (int b = 0; b < banks_ * copies_; ++b) {
        std::uint64_t a = splitmix64(seed ^ (0xabcdULL * (b + 1)));
        std::uint64_t bb = splitmix64(seed ^ (0x1234ULL * (b + 1)) ^ 0x77ULL);
        hash_ab_.emplace_back(a | 1, bb);
    }
}

int ConnectivitySketch::level_of(std::size_t bank_copy, std::uint64_t item) const {
    auto [a, b] = hash_ab_[bank_copy];
    std::uint64_t h = a * item + b;  // pairwise-independent enough for level masks
    int z = std::countr_zero(h | (1ULL << 62));
    return std::min(z, levels_ - 1);
}

void ConnectivitySketch::touch(VertexId endpoint, std::uint64_t item, int sign) {
    std::uint64_t fp_item = splitmix64(item ^ seed_ ^ 0xfeedULL) % kP61;
    for (int bc = 0; bc < banks_ * copies_; ++bc) {
        int maxlevel = level_of(bc, item);
        for (int lvl = 0; lvl <= maxlevel; ++lvl) {
            std::uint64_t key =
                ((static_cast<std::uint64_t>(endpoint) * banks_ * copies_ + bc) * levels_) + lvl;
            auto& cell = cells_[key];
            cell.cnt += sign;
            std::uint64_t it61 = item % kP61;
            cell.sum = sign > 0 ? addmod61(cell.sum, it61) : submod61(cell.sum, it61);
            cell.fp = sign > 0 ? addmod61(cell.fp, fp_item) : submod61(cell.fp, fp_item);
            if (cell.zero()) cells_.erase(key);
        }
    }
}

void ConnectivitySketch::update(VertexId u, VertexId v, int sign) {
    assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
    std::uint64_t item = edge_id(n_, u, v);
    // Signed per endpoint so that summing the states of both endpoints
    // cancels the edge; a merged component keeps only its boundary.
    touch(std::min(u, v), item, sign);
    touch(std::max(u, v), item, -sign);
}

void ConnectivitySketch::merge(const ConnectivitySketch& other) {
    assert(other.n_ == n_ && other.seed_ == seed_);
    for (const auto& [key, cell] : other.cells_) {
        auto& mine = cells_[key];
        mine.cnt += cell.cnt;
        mine.sum = addmod61(mine.sum, cell.sum);
        mine.fp = addmod61(mine.fp, cell.fp);
        if (mine.zero()) cells_.erase(key);
    }
}

bool ConnectivitySketch::same_cells(const ConnectivitySketch& other) const {
    if (cells_.size() != other.cells_.size()) return false;
    for (const auto& [key, cell] : cells_) {
        auto it = other.cells_.find(key);
        if (it == other.cells_.end()) return false;
        if (it->second.cnt != cell.cnt || it->second.sum != cell.sum || it->second.fp != cell.fp)
            return false;
    }
    return true;
}

std::optional<std::uint64_t> ConnectivitySketch::decode(const Cell& c) const {
    if (c.cnt != 1 && c.cnt != -1) return std::nullopt;
    std::uint64_t item = c.cnt == 1 ? c.sum : submod61(0, c.sum);
    if (item >= static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_)) return std::nullopt;
    std::uint64_t want_fp = splitmix64(item ^ seed_ ^ 0xfeedULL) % kP61;
    std::uint64_t have_fp = c.cnt == 1 ? c.fp : submod61(0, c.fp);
    if (want_fp != have_fp) return std::nullopt;
    VertexId u = static_cast<VertexId>(item / n_);
    VertexId v = static_cast<VertexId>(item % n_);
    if (u >= v) return std::nullopt;
    return item;
}

std::vector<std::pair<VertexId, VertexId>> ConnectivitySketch::spanning_forest() const {
    // DSU over local vertices.
    std::vector<int> parent(n_);
    for (int i = 0; i < n_; ++i) parent[i] = i;
    std::vector<int> rank(n_, 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
        return true;
    };

    // key layout: ((v * banks*copies + bc) * levels) + lvl
    auto bank_candidates = [&](int bank) {
        // Aggregate this bank's cells per current component, then decode one
        // candidate boundary edge per component.
        std::unordered_map<std::uint64_t, Cell> agg;  // (root * copies + copy) * levels + lvl
        for (const auto& [key, cell] : cells_) {
            std::uint64_t rest = key / levels_;
            int lvl = static_cast<int>(key % levels_);
            int bc = static_cast<int>(rest % (banks_ * copies_));
            VertexId v = static_cast<VertexId>(rest / (banks_ * copies_));
            if (bc / copies_ != bank) continue;
            int copy = bc % copies_;
            std::uint64_t akey =
                (static_cast<std::uint64_t>(find(v)) * copies_ + copy) * levels_ + lvl;
            auto& mine = agg[akey];
            mine.cnt += cell.cnt;
            mine.sum = addmod61(mine.sum, cell.sum);
            mine.fp = addmod61(mine.fp, cell.fp);
        }
        std::unordered_map<int, std::uint64_t> candidate;
        for (const auto& [akey, cell] : agg) {
            int root = static_cast<int>(akey / levels_ / copies_);
            if (candidate.count(root)) continue;
            auto item = decode(cell);
            if (item) candidate[root] = *item;
        }
        return candidate;
    };

    std::vector<std::pair<VertexId, VertexId>> forest;
    for (int bank = 0; bank < banks_; ++bank) {
        for (const auto& [root, item] : bank_candidates(bank)) {
            VertexId u = static_cast<VertexId>(item / n_);
            VertexId v = static_cast<VertexId>(item % n_);
            if (unite(u, v)) forest.emplace_back(u, v);
        }
    }
    // Stall detection: a verified boundary edge still crossing two final
    // components means the bank budget ran out mid-merge.
    for (const auto& [root, item] : bank_candidates(banks_ - 1)) {
        VertexId u = static_cast<VertexId>(item / n_);
        VertexId v = static_cast<VertexId>(item % n_);
        if (find(u) != find(v))
            throw SketchFailure("connectivity sketch stalled with non-merged candidates");
    }
    return forest;
}

std::vector<int> ConnectivitySketch::components() const {
    auto forest = spanning_forest();
    std::vector<int> parent(n_);
    for (int i = 0; i < n_; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (auto [u, v] : forest) parent[find(u)] = find(v);
    std::vector<int> comp(n_, -1);
    int c = 0;
    for (int v = 0; v < n_; ++v) {
        int r = find(v);
        if (comp[r] < 0) comp[r] = c++;
        comp[v] = comp[r];
    }
    return comp;
}

int ConnectivitySketch::component_count() const {
    auto forest = spanning_forest();
    return n_ - static_cast<int>(forest.size());
}

std::pair<std::pair<VertexId, VertexId>, std::pair<VertexId, VertexId>> double_cover_edges(
    int n, VertexId u, VertexId v) {
    return {{u, v + n}, {u + n, v}};
}

bool is_bipartite_sketched(const ConnectivitySketch& g_sketch,
                           const ConnectivitySketch& cover_sketch) {
    return cover_sketch.component_count() == 2 * g_sketch.component_count();
}

}  // namespace fpss
