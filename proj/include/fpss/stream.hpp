#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpss/graph.hpp"

namespace fpss {

enum class StreamOp { Insert, Delete };
enum class StreamMode { InsertionOnly, Turnstile };

struct StreamEvent {
    StreamOp op = StreamOp::Insert;
    VertexId u = 0, v = 0;
    bool term_u = false, term_v = false;
    bool has_flags = false;
};

struct StreamHeader {
    int n = 0;
    int k = 0;
    std::string problem = "none";
    StreamMode mode = StreamMode::Turnstile;
    std::vector<VertexId> terminals;  // header line plus first-edge flags
    bool directed() const { return problem == "fvst"; }
};

struct ParsedStream {
    StreamHeader header;
    std::vector<StreamEvent> events;
    bool has_deletes() const;
};

// Line grammar: `n <int>`, `k <int>`, `prob <tag>`, `mode <ins|turn>`,
// `terminals <id...>`, then `+ u v [tu tv]` / `- u v`. Lines starting with
// `#` are ignored. Validates simple-graph turnstile rules.
ParsedStream parse_stream(std::string_view text);
std::string format_stream(const ParsedStream& s);

// Oracle-side only: final graph after applying all events.
ExplicitGraph materialize(const StreamHeader& h, const std::vector<StreamEvent>& events);
inline ExplicitGraph materialize(const ParsedStream& s) { return materialize(s.header, s.events); }

// Word-count accounting for stream consumers. One machine word = O(log n) bits.
class SpaceLedger {
  public:
    std::size_t add_consumer(std::string name);
    void set_usage(std::size_t id, std::size_t words);
    std::size_t consumer_peak(std::size_t id) const { return peak_[id]; }
    // Peak of the sum of concurrent usages (consumers conceptually coexist).
    std::size_t peak_total() const { return peak_total_; }
    std::size_t consumer_count() const { return peak_.size(); }
    const std::string& name(std::size_t id) const { return names_[id]; }

  private:
    std::vector<std::string> names_;
    std::vector<std::size_t> current_, peak_;
    std::size_t current_total_ = 0, peak_total_ = 0;
};

class StreamConsumer {
  public:
    virtual ~StreamConsumer() = default;
    virtual int pass_budget() const { return 1; }
    virtual bool turnstile_ok() const { return true; }
    virtual void begin_pass(int) {}
    virtual void on_event(int pass, const StreamEvent& e) = 0;
    virtual void end_pass(int) {}
    virtual std::size_t state_words() const = 0;
};

// Delivers every event of one pass, in order, to every consumer. Throws
// PassBudgetExceeded / ModeMismatch per the consumer contracts. If a ledger
// is given, usage is polled every `poll_stride` events per consumer.
void replay(const ParsedStream& s, std::span<StreamConsumer* const> consumers, int pass_index,
            SpaceLedger* ledger = nullptr, const std::vector<std::size_t>* ledger_ids = nullptr,
            int poll_stride = 16);

}  // namespace fpss
