#pragma once

#include <stdexcept>
#include <string>

namespace presto {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- rational-function algebra ---

class DivisionByZeroFunction : public Error {
public:
    DivisionByZeroFunction() : Error("division by the zero rational function") {}
};

class MissingParameter : public Error {
public:
    explicit MissingParameter(const std::string& name)
        : Error("valuation does not assign parameter '" + name + "'") {}
};

class DenominatorNearZero : public Error {
public:
    explicit DenominatorNearZero(double value)
        : Error("denominator evaluates to " + std::to_string(value) +
                ", within epsilon of zero") {}
};

// --- parsing ---

class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, const std::string& msg)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) +
                ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

class DuplicateState : public Error {
public:
    explicit DuplicateState(const std::string& name)
        : Error("state '" + name + "' declared twice") {}
};

class UnknownParameter : public Error {
public:
    explicit UnknownParameter(const std::string& name)
        : Error("identifier '" + name + "' is neither a declared parameter nor a constant") {}
};

class RowIncomplete : public Error {
public:
    explicit RowIncomplete(const std::string& state)
        : Error("state '" + state + "' has no outgoing transitions") {}
};

class UnboundComparator : public Error {
public:
    explicit UnboundComparator(const std::string& id)
        : Error("requirement '" + id + "' lacks a threshold bound (expected >= or <=)") {}
};

// --- model checking ---

class EmptyTarget : public Error {
public:
    EmptyTarget() : Error("no state satisfies the target formula") {}
};

class RewardDivergence : public Error {
public:
    explicit RewardDivergence(const std::string& detail)
        : Error("reachability reward diverges: " + detail) {}
};

class UnknownRewardStructure : public Error {
public:
    explicit UnknownRewardStructure(const std::string& name)
        : Error("no reward structure named '" + name + "'") {}
};

class UnsupportedQuery : public Error {
public:
    explicit UnsupportedQuery(const std::string& what)
        : Error("unsupported query: " + what) {}
};

class SingularSystem : public Error {
public:
    SingularSystem() : Error("linear system is singular") {}
};

class NonConvergence : public Error {
public:
    explicit NonConvergence(long iterations)
        : Error("value iteration did not converge within " +
                std::to_string(iterations) + " iterations") {}
};

// --- forecasting / prediction ---

class SeriesTooShort : public Error {
public:
    SeriesTooShort(std::size_t got, std::size_t need)
        : Error("series has " + std::to_string(got) + " points, need at least " +
                std::to_string(need)) {}
};

class MissingParameterSeries : public Error {
public:
    explicit MissingParameterSeries(const std::string& name)
        : Error("observations lack a series for parameter '" + name + "'") {}
};

class InvalidConfig : public Error {
public:
    explicit InvalidConfig(const std::string& msg) : Error("invalid config: " + msg) {}
};

}  // namespace presto
