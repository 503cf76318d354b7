#include "fpss/derand.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "fpss/errors.hpp"

namespace fpss {

namespace {

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::uint64_t next_prime_above(std::uint64_t x) {
    std::uint64_t p = x + 1;
    while (!is_prime(p)) ++p;
    return p;
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // exact: r * (n-k+i) always divisible by i here
        if (r > UINT64_MAX / (n - k + i)) throw CapExceeded("binomial overflow");
        r = r * (n - k + i) / i;
    }
    return r;
}

// Enumerates k-subsets of [n] in lexicographic order, calling fn(subset).
// Returns false early if fn returns false.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    if (k == 0) return fn(s);
    if (k > n) return true;
    while (true) {
        if (!fn(s)) return false;
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return true;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

bool injective_on(const SplitterFamily& f, std::size_t fi, const std::vector<int>& subset,
                  std::vector<int>& scratch) {
    scratch.clear();
    for (int x : subset) scratch.push_back(f.eval(fi, x));
    std::sort(scratch.begin(), scratch.end());
    return std::adjacent_find(scratch.begin(), scratch.end()) == scratch.end();
}

}  // namespace

int SplitterFamily::eval(std::size_t fi, int x) const {
    auto [a, b] = funcs[fi];
    if (a == 0) return x % range;
    return static_cast<int>(((a * static_cast<std::uint64_t>(x) + b) % prime) % range);
}

double SplitterFamily::measured_constant() const {
    double denom = std::pow(static_cast<double>(k), 6.0) *
                   std::max(1.0, std::log(static_cast<double>(k))) *
                   std::max(1.0, std::log(static_cast<double>(n)));
    return static_cast<double>(size()) / denom;
}

std::string SplitterFamily::serialize() const {
    std::ostringstream out;
    out << "splitter n=" << n << " k=" << k << " range=" << range << " p=" << prime << "\n";
    for (std::size_t i = 0; i < funcs.size(); ++i)
        out << i << " a=" << funcs[i].first << " b=" << funcs[i].second << "\n";
    return out.str();
}

std::string SeparatingFamily::serialize() const {
    std::ostringstream out;
    out << "separating n=" << n << " k=" << k << " l=" << l << "\n";
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        out << i;
        for (int v : subsets[i]) out << " " << v;
        out << "\n";
    }
    return out.str();
}

SplitterFamily build_splitter(int n, int k, std::uint64_t exhaustive_cap) {
    if (k < 1 || k > n) throw InvalidParams("splitter needs 1 <= k <= n");
    SplitterFamily fam;
    fam.n = n;
    fam.k = k;
    fam.range = k * k;
    fam.prime = next_prime_above(static_cast<std::uint64_t>(n));

    if (k == 1 || n <= fam.range) {
        // Identity (or constant when range 1) is injective on every k-subset.
        fam.funcs.emplace_back(0, 0);
        return fam;
    }

    // Witness sets to cover: all k-subsets if feasible, else a fixed sample.
    std::vector<std::vector<int>> targets;
    std::uint64_t total = binom(n, k);
    if (total <= exhaustive_cap) {
        targets.reserve(total);
        for_each_subset(n, k, [&](const std::vector<int>& s) {
            targets.push_back(s);
            return true;
        });
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(n) << 20) ^ k);
        targets.reserve(100'000);
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int t = 0; t < 100'000; ++t) {
            for (int i = 0; i < k; ++i)
                std::swap(pool[i], pool[i + rng() % (n - i)]);
            std::vector<int> s(pool.begin(), pool.begin() + k);
            std::sort(s.begin(), s.end());
            targets.push_back(std::move(s));
        }
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }

    std::mt19937_64 rng(0x5eed5eedULL ^ (static_cast<std::uint64_t>(n) * 31 + k));
    std::vector<char> covered(targets.size(), 0);
    std::size_t uncovered = targets.size();
    std::vector<int> scratch;
    int stale_guard = 0;
    while (uncovered > 0) {
        std::uint64_t a = 1 + rng() % (fam.prime - 1);
        std::uint64_t b = rng() % fam.prime;
        fam.funcs.emplace_back(a, b);
        std::size_t fi = fam.funcs.size() - 1;
        // Keep only if it covers the first still-uncovered witness.
        std::size_t first = 0;
        while (first < targets.size() && covered[first]) ++first;
        if (!injective_on(fam, fi, targets[first], scratch)) {
            fam.funcs.pop_back();
            if (++stale_guard > 100'000) throw CapExceeded("splitter greedy stalled");
            continue;
        }
        stale_guard = 0;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (covered[t]) continue;
            if (injective_on(fam, fi, targets[t], scratch)) {
                covered[t] = 1;
                --uncovered;
            }
        }
    }
    if (fam.funcs.empty()) fam.funcs.emplace_back(0, 0);
    return fam;
}

SeparatingFamily build_separating(int n, int k, int l) {
    if (l < 1 || l > k) throw InvalidParams("separating family needs 1 <= l <= k");
    if (n < k + l) throw InvalidParams("separating family needs n >= k + l");
    int q = k + l;
    SplitterFamily h = build_splitter(n, q, 2'000'000);
    SeparatingFamily fam;
    fam.n = n;
    fam.k = k;
    fam.l = l;
    std::vector<std::vector<int>> seen;
    // For each h and each color set Y of size l, output h^{-1}(Y).
    for (std::size_t fi = 0; fi < h.size(); ++fi) {
        std::vector<std::vector<int>> by_color(h.range);
        for (int x = 0; x < n; ++x) by_color[h.eval(fi, x)].push_back(x);
        std::vector<int> colors(l);
        for (int i = 0; i < l; ++i) colors[i] = i;
        while (true) {
            std::vector<int> subset;
            for (int c : colors)
                subset.insert(subset.end(), by_color[c].begin(), by_color[c].end());
            std::sort(subset.begin(), subset.end());
            fam.subsets.push_back(std::move(subset));
            int i = l - 1;
            while (i >= 0 && colors[i] == h.range - l + i) --i;
            if (i < 0) break;
            ++colors[i];
            for (int j = i + 1; j < l; ++j) colors[j] = colors[j - 1] + 1;
        }
    }
    std::sort(fam.subsets.begin(), fam.subsets.end());
    fam.subsets.erase(std::unique(fam.subsets.begin(), fam.subsets.end()), fam.subsets.end());
    return fam;
}

SeparatingFamily graph_separating(int n, int k) {
    if (n < k + 2) throw InvalidParams("graph separating family needs n >= k + 2");
    if (k < 0) throw InvalidParams("k >= 0");
    // Same construction with q = k + 2 and |Y| = 2; valid for every k >= 0.
    int q = k + 2;
    SplitterFamily h = build_splitter(n, std::min(q, n), 2'000'000);
    SeparatingFamily fam;
    fam.n = n;
    fam.k = k;
    fam.l = 2;
    for (std::size_t fi = 0; fi < h.size(); ++fi) {
        std::vector<std::vector<int>> by_color(h.range);
        for (int x = 0; x < n; ++x) by_color[h.eval(fi, x)].push_back(x);
        for (int c1 = 0; c1 < h.range; ++c1)
            for (int c2 = c1 + 1; c2 < h.range; ++c2) {
                std::vector<int> subset;
                subset.insert(subset.end(), by_color[c1].begin(), by_color[c1].end());
                subset.insert(subset.end(), by_color[c2].begin(), by_color[c2].end());
                if (subset.size() < 2) continue;
                std::sort(subset.begin(), subset.end());
                fam.subsets.push_back(std::move(subset));
            }
    }
    std::sort(fam.subsets.begin(), fam.subsets.end());
    fam.subsets.erase(std::unique(fam.subsets.begin(), fam.subsets.end()), fam.subsets.end());
    return fam;
}

bool verify_splitter(const SplitterFamily& f, int n, int k, std::uint64_t cap) {
    if (binom(n, k) > cap) throw CapExceeded("exhaustive splitter verification over cap");
    std::vector<int> scratch;
    return for_each_subset(n, k, [&](const std::vector<int>& s) {
        for (std::size_t fi = 0; fi < f.size(); ++fi)
            if (injective_on(f, fi, s, scratch)) return true;
        return false;
    });
}

bool verify_separating(const SeparatingFamily& f, int n, int k, int l, std::uint64_t cap) {
    // All disjoint pairs (A, B), |A| <= k, |B| <= l, B nonempty.
    std::uint64_t work = 0;
    for (int ka = 0; ka <= k; ++ka) work += binom(n, ka);
    if (work * (1ULL << l) * static_cast<std::uint64_t>(n) > cap)
        throw CapExceeded("exhaustive separating verification over cap");
    std::vector<char> in_a(n, 0);
    bool ok = true;
    for (int ka = 0; ka <= k && ok; ++ka) {
        for_each_subset(n, ka, [&](const std::vector<int>& a) {
            for (int x : a) in_a[x] = 1;
            std::vector<int> rest;
            for (int x = 0; x < n; ++x)
                if (!in_a[x]) rest.push_back(x);
            for (int kb = 1; kb <= l && ok; ++kb) {
                for_each_subset(static_cast<int>(rest.size()), kb, [&](const std::vector<int>& bi) {
                    std::vector<int> b;
                    for (int i : bi) b.push_back(rest[i]);
                    bool separated = false;
                    for (const auto& sub : f.subsets) {
                        bool b_in = true, a_out = true;
                        for (int x : b)
                            if (!std::binary_search(sub.begin(), sub.end(), x)) {
                                b_in = false;
                                break;
                            }
                        if (!b_in) continue;
                        for (int x : a)
                            if (std::binary_search(sub.begin(), sub.end(), x)) {
                                a_out = false;
                                break;
                            }
                        if (a_out) {
                            separated = true;
                            break;
                        }
                    }
                    if (!separated) ok = false;
                    return ok;
                });
            }
            for (int x : a) in_a[x] = 0;
            return ok;
        });
    }
    return ok;
}

bool verify_graph_separating(const SeparatingFamily& f, int n, int k, std::uint64_t cap) {
    return verify_separating(f, n, k, 2, cap);
}

}  // namespace fpss
