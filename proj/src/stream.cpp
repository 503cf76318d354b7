#include "fpss/stream.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "fpss/errors.hpp"

namespace fpss {

bool ParsedStream::has_deletes() const {
    for (const auto& e : events)
        if (e.op == StreamOp::Delete) return true;
    return false;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& t, int lineno) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw StreamError(StreamError::Kind::MalformedLine,
                          "line " + std::to_string(lineno) + ": bad integer '" + t + "'");
    }
}

}  // namespace

ParsedStream parse_stream(std::string_view text) {
    ParsedStream out;
    StreamHeader& h = out.header;
    bool saw_n = false, saw_events = false;
    // live edge set for simple-graph turnstile validation
    std::unordered_set<std::uint64_t> live;
    // -1 unknown, 0 non-terminal, 1 terminal; fixed at first sight
    std::vector<int> term_state;
    std::vector<char> touched;  // vertex has an incident inserted edge already

    auto edge_key = [&](int u, int v, bool directed) -> std::uint64_t {
        if (!directed && u > v) std::swap(u, v);
        return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(h.n) + v;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        const std::string& head = toks[0];

        auto need = [&](std::size_t cnt) {
            if (toks.size() != cnt)
                throw StreamError(StreamError::Kind::MalformedLine,
                                  "line " + std::to_string(lineno) + ": expected " +
                                      std::to_string(cnt) + " tokens");
        };

        if (head == "n") {
            need(2);
            h.n = parse_int(toks[1], lineno);
            if (h.n < 0)
                throw StreamError(StreamError::Kind::MalformedLine, "negative n");
            saw_n = true;
            term_state.assign(h.n, -1);
            touched.assign(h.n, 0);
        } else if (head == "k") {
            need(2);
            if (saw_events)
                throw StreamError(StreamError::Kind::MalformedLine,
                                  "line " + std::to_string(lineno) + ": k after events");
            h.k = parse_int(toks[1], lineno);
            if (h.k < 0) throw StreamError(StreamError::Kind::MalformedLine, "negative k");
        } else if (head == "prob") {
            need(2);
            h.problem = toks[1];
        } else if (head == "mode") {
            need(2);
            if (toks[1] == "ins")
                h.mode = StreamMode::InsertionOnly;
            else if (toks[1] == "turn")
                h.mode = StreamMode::Turnstile;
            else
                throw StreamError(StreamError::Kind::MalformedLine,
                                  "line " + std::to_string(lineno) + ": mode must be ins|turn");
        } else if (head == "terminals") {
            if (!saw_n)
                throw StreamError(StreamError::Kind::MalformedLine, "terminals before n");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                int t = parse_int(toks[i], lineno);
                if (t < 0 || t >= h.n)
                    throw StreamError(StreamError::Kind::VertexOutOfRange,
                                      "line " + std::to_string(lineno) + ": terminal out of range");
                term_state[t] = 1;
            }
        } else if (head == "+" || head == "-") {
            if (!saw_n)
                throw StreamError(StreamError::Kind::MalformedLine, "event before n");
            bool ins = head == "+";
            if (!ins && toks.size() != 3)
                throw StreamError(StreamError::Kind::MalformedLine,
                                  "line " + std::to_string(lineno) + ": delete takes 2 ids");
            if (ins && toks.size() != 3 && toks.size() != 5)
                throw StreamError(StreamError::Kind::MalformedLine,
                                  "line " + std::to_string(lineno) + ": insert takes 2 ids [+2 flags]");
            StreamEvent e;
            e.op = ins ? StreamOp::Insert : StreamOp::Delete;
            e.u = parse_int(toks[1], lineno);
            e.v = parse_int(toks[2], lineno);
            if (e.u < 0 || e.u >= h.n || e.v < 0 || e.v >= h.n)
                throw StreamError(StreamError::Kind::VertexOutOfRange,
                                  "line " + std::to_string(lineno) + ": vertex out of range");
            if (e.u == e.v)
                throw StreamError(StreamError::Kind::MalformedLine,
                                  "line " + std::to_string(lineno) + ": self loop");
            if (!ins && h.mode == StreamMode::InsertionOnly)
                throw StreamError(StreamError::Kind::MalformedLine,
                                  "line " + std::to_string(lineno) + ": delete in insertion-only stream");
            auto key = edge_key(e.u, e.v, h.directed());
            if (ins) {
                if (!live.insert(key).second)
                    throw StreamError(StreamError::Kind::DuplicateInsert,
                                      "line " + std::to_string(lineno) + ": edge already present");
            } else {
                if (live.erase(key) == 0)
                    throw StreamError(StreamError::Kind::DeleteAbsent,
                                      "line " + std::to_string(lineno) + ": edge not present");
            }
            if (ins && toks.size() == 5) {
                e.has_flags = true;
                e.term_u = parse_int(toks[3], lineno) != 0;
                e.term_v = parse_int(toks[4], lineno) != 0;
                // Flags fix the vertex attribute at first sight; a flag that
                // contradicts an already-settled vertex is an error.
                auto apply = [&](int v, bool flag) {
                    int want = flag ? 1 : 0;
                    if (term_state[v] == -1) {
                        if (flag && touched[v])
                            throw StreamError(StreamError::Kind::TerminalFlagOnLaterEdge,
                                              "line " + std::to_string(lineno) +
                                                  ": terminal flag after first incident edge");
                        term_state[v] = want;
                    } else if (term_state[v] != want) {
                        throw StreamError(StreamError::Kind::TerminalFlagOnLaterEdge,
                                          "line " + std::to_string(lineno) +
                                              ": terminal flag contradicts earlier attribute");
                    }
                };
                apply(e.u, e.term_u);
                apply(e.v, e.term_v);
            }
            if (ins) {
                touched[e.u] = touched[e.v] = 1;
            }
            out.events.push_back(e);
            saw_events = true;
        } else {
            throw StreamError(StreamError::Kind::MalformedLine,
                              "line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
        }
    }
    if (!saw_n) throw StreamError(StreamError::Kind::MalformedLine, "missing n header");
    for (int v = 0; v < h.n; ++v)
        if (!term_state.empty() && term_state[v] == 1) h.terminals.push_back(v);
    return out;
}

std::string format_stream(const ParsedStream& s) {
    std::ostringstream out;
    out << "n " << s.header.n << "\n";
    out << "k " << s.header.k << "\n";
    out << "prob " << s.header.problem << "\n";
    out << "mode " << (s.header.mode == StreamMode::InsertionOnly ? "ins" : "turn") << "\n";
    if (!s.header.terminals.empty()) {
        out << "terminals";
        for (VertexId t : s.header.terminals) out << " " << t;
        out << "\n";
    }
    for (const auto& e : s.events) {
        out << (e.op == StreamOp::Insert ? "+" : "-") << " " << e.u << " " << e.v;
        if (e.has_flags) out << " " << (e.term_u ? 1 : 0) << " " << (e.term_v ? 1 : 0);
        out << "\n";
    }
    return out.str();
}

ExplicitGraph materialize(const StreamHeader& h, const std::vector<StreamEvent>& events) {
    std::unordered_set<std::uint64_t> live;
    std::vector<StreamEvent> kept;
    for (const auto& e : events) {
        std::uint64_t key;
        int u = e.u, v = e.v;
        if (!h.directed() && u > v) std::swap(u, v);
        key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(h.n) + v;
        if (e.op == StreamOp::Insert)
            live.insert(key);
        else
            live.erase(key);
    }
    ExplicitGraph g(h.n, h.directed());
    for (std::uint64_t key : live)
        g.add_edge(static_cast<int>(key / h.n), static_cast<int>(key % h.n));
    g.terminals = h.terminals;
    return g;
}

std::size_t SpaceLedger::add_consumer(std::string name) {
    names_.push_back(std::move(name));
    current_.push_back(0);
    peak_.push_back(0);
    return names_.size() - 1;
}

void SpaceLedger::set_usage(std::size_t id, std::size_t words) {
    current_total_ += words;
    current_total_ -= current_[id];
    current_[id] = words;
    peak_[id] = std::max(peak_[id], words);
    peak_total_ = std::max(peak_total_, current_total_);
}

void replay(const ParsedStream& s, std::span<StreamConsumer* const> consumers, int pass_index,
            SpaceLedger* ledger, const std::vector<std::size_t>* ledger_ids, int poll_stride) {
    bool turnstile = s.has_deletes();
    for (std::size_t i = 0; i < consumers.size(); ++i) {
        if (pass_index >= consumers[i]->pass_budget())
            throw PassBudgetExceeded("consumer " + std::to_string(i) + " budget " +
                                     std::to_string(consumers[i]->pass_budget()) + " < pass " +
                                     std::to_string(pass_index + 1));
        if (turnstile && !consumers[i]->turnstile_ok())
            throw ModeMismatch("insertion-only consumer " + std::to_string(i) +
                               " on a turnstile stream");
    }
    for (auto* c : consumers) c->begin_pass(pass_index);
    int since_poll = 0;
    for (const auto& e : s.events) {
        for (auto* c : consumers) c->on_event(pass_index, e);
        if (ledger && ++since_poll >= poll_stride) {
            since_poll = 0;
            for (std::size_t i = 0; i < consumers.size(); ++i)
                ledger->set_usage(ledger_ids ? (*ledger_ids)[i] : i, consumers[i]->state_words());
        }
    }
    for (auto* c : consumers) c->end_pass(pass_index);
    if (ledger)
        for (std::size_t i = 0; i < consumers.size(); ++i)
            ledger->set_usage(ledger_ids ? (*ledger_ids)[i] : i, consumers[i]->state_words());
}

}  // namespace fpss
