#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace presto {

/// Propositional state formula over atomic propositions: true, "ap",
/// negation and conjunction. Nested probability operators are not part of
/// the grammar.
class StateFormula {
public:
    enum class Kind { True, Atom, Not, And };

    static StateFormula truth();
    static StateFormula atom(std::string ap);
    static StateFormula negation(StateFormula inner);
    static StateFormula conjunction(StateFormula lhs, StateFormula rhs);

    Kind kind() const { return kind_; }
    const std::string& atom_name() const { return atom_; }
    const StateFormula& lhs() const { return *lhs_; }
    const StateFormula& rhs() const { return *rhs_; }

    bool holds(const std::set<std::string>& state_labels) const;
    std::string to_string() const;
    bool operator==(const StateFormula& other) const;

private:
    Kind kind_ = Kind::True;
    std::string atom_;
    std::shared_ptr<const StateFormula> lhs_;
    std::shared_ptr<const StateFormula> rhs_;
};

/// Path formula of a probability query. Eventually keeps its own node so
/// pretty-printing round-trips; semantically it is true U target.
struct PathFormula {
    enum class Kind { Next, Until, BoundedUntil, Eventually };
    Kind kind = Kind::Eventually;
    StateFormula lhs;   // Until/BoundedUntil only
    StateFormula rhs;   // Next/Eventually use rhs as the target
    int bound = 0;      // BoundedUntil only, >= 1

    std::string to_string() const;
    bool operator==(const PathFormula& other) const;
};

struct ProbQuery {
    PathFormula path;
    bool operator==(const ProbQuery&) const;
};

struct RewardQuery {
    enum class Kind { Reachability, Cumulative, Instantaneous, SteadyState };
    std::string reward_name;
    Kind kind = Kind::Reachability;
    StateFormula target;  // Reachability only
    int bound = 0;        // Cumulative / Instantaneous, >= 1

    bool operator==(const RewardQuery& other) const;
};

struct PropertyAst {
    std::variant<ProbQuery, RewardQuery> query;

    bool is_prob() const { return std::holds_alternative<ProbQuery>(query); }
    const ProbQuery& prob() const { return std::get<ProbQuery>(query); }
    const RewardQuery& reward() const { return std::get<RewardQuery>(query); }

    std::string to_string() const;
    bool operator==(const PropertyAst& other) const = default;
};

enum class Comparator { GreaterEq, LessEq };

/// PCTL query plus the threshold bound that turns it into a checkable
/// requirement, e.g. R1's ">= 0.8".
struct Requirement {
    std::string id;
    PropertyAst property;
    Comparator comparator = Comparator::GreaterEq;
    double threshold = 0.0;

    /// True when `value` breaks the bound (>= fails below, <= fails above).
    bool violated_by(double value) const {
        return comparator == Comparator::GreaterEq ? value < threshold : value > threshold;
    }

    std::string to_string() const;
    bool operator==(const Requirement& other) const = default;
};

}  // namespace presto
