#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "presto/rational.hpp"

namespace presto {

/// Closed real interval a monitored parameter ranges over.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const { return v >= lo && v <= hi; }
    double clamp(double v) const { return v < lo ? lo : (v > hi ? hi : v); }
    bool operator==(const Interval&) const = default;
};

/// Monitored parameters with their domains plus model constants with their
/// fixed values. Constants stay symbolic inside transition functions and are
/// bound when a valuation is assembled.
struct ParameterSet {
    std::map<ParamId, Interval> domains;
    std::map<ParamId, Rational> constants;

    bool is_declared(const ParamId& p) const {
        return domains.count(p) > 0 || constants.count(p) > 0;
    }
};

/// Assignment of parameter values, optionally stamped with the minute it
/// was observed at.
struct Valuation {
    std::map<ParamId, double> assignments;
    std::optional<double> timestamp_minutes;
};

/// Parametric DTMC. States are indexed densely; `trans[s]` holds the sparse
/// outgoing row of s as (successor, probability function) pairs sorted by
/// successor. Absorbing states carry an explicit probability-1 self-loop.
struct Pdtmc {
    std::vector<std::string> state_names;
    int init = 0;
    std::vector<std::vector<std::pair<int, RationalFunction>>> trans;
    std::vector<std::set<std::string>> labels;
    ParameterSet params;

    int state_count() const { return static_cast<int>(state_names.size()); }
    std::optional<int> state_index(const std::string& name) const;
    const RationalFunction* transition(int from, int to) const;
    void set_transition(int from, int to, RationalFunction f);

    /// Valuation for the monitored parameters merged with the model
    /// constants; input values are not clamped.
    std::map<ParamId, double> bind_constants(const std::map<ParamId, double>& point) const;
};

/// Named per-state reward function; states absent from the map have reward 0.
struct RewardStructure {
    std::string name;
    std::map<int, RationalFunction> rewards;

    RationalFunction reward_of(int state) const {
        auto it = rewards.find(state);
        return it == rewards.end() ? RationalFunction() : it->second;
    }
};

/// One structural or numeric defect found by validate().
struct ModelViolation {
    enum class Kind { MissingRow, RowSumNotOne, TransitionOutOfRange, NegativeReward };
    Kind kind;
    int state = -1;
    std::string message;
};

/// Checks the pDTMC invariants: symbolic row sums equal to 1, at least one
/// outgoing transition per state, and transition/reward ranges sampled at
/// 100 random in-domain valuations. Returns the violations found.
std::vector<ModelViolation> validate(const Pdtmc& m,
                                     const std::vector<RewardStructure>& rewards = {});

struct FruitPickingFixture {
    Pdtmc model;
    RewardStructure time_rewards;
    RewardStructure energy_rewards;
};

/// The six-state fruit-picking robot model: positioning (s0), picking (s1),
/// retry decision (s2), abandon (s3), success (s4), done (s5), with "time"
/// and "energy" rewards on the three operation states.
FruitPickingFixture fruit_picking_model();

}  // namespace presto
