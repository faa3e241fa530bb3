#pragma once

#include <optional>
#include <string>
#include <vector>

#include "presto/model.hpp"
#include "presto/property.hpp"

namespace presto {

/// Closed-form result of parametric model checking for one requirement.
struct PmcExpression {
    std::string requirement_id;
    RationalFunction function;
    std::vector<ParamId> params;  // parameters actually occurring

    static PmcExpression of(std::string id, RationalFunction f);
};

/// How the next state to eliminate is picked. Correctness is order
/// independent; the heuristic limits intermediate term growth.
enum class EliminationOrder {
    ConnectivityHeuristic,  // min in-degree * out-degree first, ties by index
    IndexAscending,
    IndexDescending,
};

/// Probability, from the initial state, of eventually reaching a state
/// satisfying `target`, as a rational function of the model parameters.
/// Computed by state elimination. States that cannot reach the target
/// contribute zero; an unreachable target yields the zero function.
PmcExpression check_reachability(const Pdtmc& m, const StateFormula& target,
                                 EliminationOrder order = EliminationOrder::ConnectivityHeuristic);

/// General unbounded until P=? [ lhs U rhs ].
PmcExpression check_until(const Pdtmc& m, const StateFormula& lhs, const StateFormula& rhs,
                          EliminationOrder order = EliminationOrder::ConnectivityHeuristic);

/// Expected reward cumulated until first reaching `target`. Requires the
/// target to be reached almost surely (checked structurally on the
/// reachable graph and numerically at sampled in-domain valuations).
PmcExpression check_reachability_reward(
    const Pdtmc& m, const RewardStructure& rwd, const StateFormula& target,
    EliminationOrder order = EliminationOrder::ConnectivityHeuristic);

/// One-step, step-bounded and reward-bounded operators; computed by k-step
/// parametric recurrences (no division introduced).
PmcExpression check_next(const Pdtmc& m, const StateFormula& target);
PmcExpression check_bounded_until(const Pdtmc& m, const StateFormula& lhs,
                                  const StateFormula& rhs, int k);
PmcExpression check_cumulative_reward(const Pdtmc& m, const RewardStructure& rwd, int k);
PmcExpression check_instantaneous_reward(const Pdtmc& m, const RewardStructure& rwd, int k);

/// Dispatch on a parsed property. Throws UnknownRewardStructure for an
/// unresolved reward name and UnsupportedQuery for the steady-state form.
PmcExpression check_property(const Pdtmc& m, const std::vector<RewardStructure>& rewards,
                             const std::string& requirement_id, const PropertyAst& property,
                             EliminationOrder order = EliminationOrder::ConnectivityHeuristic);

// ---------------------------------------------------------------------------
// numeric oracle
// ---------------------------------------------------------------------------

enum class OracleMethod {
    GaussianElimination,
    ValueIteration,
    /// Gaussian elimination, falling back to value iteration on a singular
    /// system.
    Auto,
};

/// Ground-truth check of a property on the model instantiated at `point`:
/// transition functions are evaluated numerically and the query is solved
/// by direct linear-system solution or value iteration (tolerance 1e-12,
/// at most 1e6 sweeps). Model constants are bound automatically.
double oracle_solve(const Pdtmc& m, const std::vector<RewardStructure>& rewards,
                    const std::map<ParamId, double>& point, const PropertyAst& property,
                    OracleMethod method = OracleMethod::Auto);

}  // namespace presto
