#pragma once

#include <stdexcept>
#include <string>

namespace fpss {

// Input / contract violations surface as typed exceptions; algorithmic
// negatives (NO answers, recovery FAIL) are ordinary return values.

struct StreamError : std::runtime_error {
    enum class Kind {
        MalformedLine,
        DuplicateInsert,
        DeleteAbsent,
        VertexOutOfRange,
        TerminalFlagOnLaterEdge,
    };
    Kind kind;
    StreamError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct InvalidParams : std::runtime_error {
    explicit InvalidParams(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct PassBudgetExceeded : std::runtime_error {
    explicit PassBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct ModeMismatch : std::runtime_error {
    explicit ModeMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct SketchFailure : std::runtime_error {
    explicit SketchFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

struct PlanBudgetExceeded : std::runtime_error {
    explicit PlanBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fpss
