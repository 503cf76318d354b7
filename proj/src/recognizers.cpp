#include "fpss/recognizers.hpp"

#include <algorithm>
#include <numeric>

namespace fpss {

bool split_from_degrees(std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    int n = static_cast<int>(d.size());
    if (n == 0) return true;
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (d[i - 1] >= i - 1) m = i;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < m; ++i) lhs += d[i];
    for (int i = m; i < n; ++i) rhs += d[i];
    return lhs == rhs;
}

bool threshold_from_degrees(std::vector<int> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    int n = static_cast<int>(d.size());
    if (n == 0) return true;
    int m = 0;  // Durfee number
    for (int i = 1; i <= n; ++i)
        if (d[i - 1] >= i - 1) m = i;
    for (int i = 1; i <= m; ++i) {
        long long lhs = 0;
        for (int j = 0; j < i; ++j) lhs += d[j];
        long long rhs = static_cast<long long>(i) * (i - 1);
        for (int j = i; j < n; ++j) rhs += std::min(d[j], i);
        if (lhs != rhs) return false;
    }
    return true;
}

bool acyclic_tournament_from_scores(std::vector<int> s) {
    std::sort(s.begin(), s.end());
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        if (s[i] != i) return false;
    return true;
}

Recognizer::Recognizer(RecognizerKind kind, std::vector<VertexId> subset, int failure_c,
                       std::uint64_t seed)
    : kind_(kind), subset_(std::move(subset)) {
    int cap = subset_.empty() ? 0 : *std::max_element(subset_.begin(), subset_.end()) + 1;
    local_id_.assign(cap, -1);
    for (std::size_t i = 0; i < subset_.size(); ++i) local_id_[subset_[i]] = static_cast<int>(i);
    degree_.assign(subset_.size(), 0);
    if (kind_ == RecognizerKind::Cluster)
        sketch_ = std::make_unique<ConnectivitySketch>(static_cast<int>(subset_.size()), failure_c,
                                                       seed);
}

void Recognizer::on_event(int, const StreamEvent& e) {
    int cap = static_cast<int>(local_id_.size());
    if (e.u >= cap || e.v >= cap) return;
    int lu = local_id_[e.u], lv = local_id_[e.v];
    if (lu < 0 || lv < 0) return;
    int sign = e.op == StreamOp::Insert ? 1 : -1;
    if (kind_ == RecognizerKind::AcyclicTournament) {
        degree_[lu] += sign;  // out-degree of the arc tail
        return;
    }
    degree_[lu] += sign;
    degree_[lv] += sign;
    if (sketch_) sketch_->update(lu, lv, sign);
}

std::size_t Recognizer::state_words() const {
    return degree_.size() + (sketch_ ? sketch_->state_words() : 0) + 2;
}

RecognitionVerdict Recognizer::verdict() const {
    RecognitionVerdict v;
    switch (kind_) {
        case RecognizerKind::AcyclicTournament:
            v.in_class = acyclic_tournament_from_scores(degree_);
            break;
        case RecognizerKind::Split:
            v.in_class = split_from_degrees(degree_);
            break;
        case RecognizerKind::Threshold:
            v.in_class = threshold_from_degrees(degree_);
            break;
        case RecognizerKind::Cluster: {
            auto comp = sketch_->components();
            int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
            std::vector<int> size(nc, 0);
            for (int c : comp) ++size[c];
            v.in_class = true;
            for (std::size_t i = 0; i < degree_.size(); ++i)
                if (degree_[i] != size[comp[i]] - 1) {
                    v.in_class = false;
                    break;
                }
            v.witness_stats = size;
            break;
        }
    }
    return v;
}

}  // namespace fpss
