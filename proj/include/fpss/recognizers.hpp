#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fpss/sketch.hpp"
#include "fpss/stream.hpp"

namespace fpss {

struct RecognitionVerdict {
    bool in_class = false;
    std::vector<int> witness_stats;  // class-specific (e.g. component sizes)
};

enum class RecognizerKind { AcyclicTournament, Split, Threshold, Cluster };

// One-pass degree/sketch recognition consumer restricted to an induced vertex
// subset. Events with an endpoint outside the subset are ignored.
class Recognizer : public StreamConsumer {
  public:
    // subset: ascending vertex ids. For Cluster, `seed` drives the sketch and
    // `failure_c` its failure parameter.
    Recognizer(RecognizerKind kind, std::vector<VertexId> subset, int failure_c = 3,
               std::uint64_t seed = 1);

    void on_event(int pass, const StreamEvent& e) override;
    std::size_t state_words() const override;

    RecognitionVerdict verdict() const;  // may throw SketchFailure for Cluster

    RecognizerKind kind() const { return kind_; }
    const std::vector<VertexId>& subset() const { return subset_; }

  private:
    RecognizerKind kind_;
    std::vector<VertexId> subset_;
    std::vector<int> local_id_;   // -1 when not in subset (indexed by global id cap)
    std::vector<int> degree_;     // undirected degree or out-degree, per local id
    std::unique_ptr<ConnectivitySketch> sketch_;  // Cluster only
};

// Degree-sequence verdicts used by the recognizers (exposed for tests).
bool split_from_degrees(std::vector<int> degrees);       // splittance == 0
bool threshold_from_degrees(std::vector<int> degrees);   // Erdos-Gallai equalities
bool acyclic_tournament_from_scores(std::vector<int> out_degrees);

}  // namespace fpss
