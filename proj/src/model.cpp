#include "presto/model.hpp"

#include <algorithm>

#include "presto/rng.hpp"

namespace presto {

std::optional<int> Pdtmc::state_index(const std::string& name) const {
    auto it = std::find(state_names.begin(), state_names.end(), name);
    if (it == state_names.end()) return std::nullopt;
    return static_cast<int>(it - state_names.begin());
}

const RationalFunction* Pdtmc::transition(int from, int to) const {
    for (const auto& [succ, f] : trans[from])
        if (succ == to) return &f;
    return nullptr;
}

void Pdtmc::set_transition(int from, int to, RationalFunction f) {
    auto& row = trans[from];
    auto it = std::lower_bound(row.begin(), row.end(), to,
                               [](const auto& e, int s) { return e.first < s; });
    if (it != row.end() && it->first == to)
        it->second = std::move(f);
    else
        row.insert(it, {to, std::move(f)});
}

std::map<ParamId, double> Pdtmc::bind_constants(const std::map<ParamId, double>& point) const {
    std::map<ParamId, double> full = point;
    for (const auto& [p, value] : params.constants) full.emplace(p, value.get_d());
    return full;
}

namespace {

std::map<ParamId, double> sample_in_domain(const ParameterSet& ps, SplitMix64& rng) {
    std::map<ParamId, double> v;
    for (const auto& [p, dom] : ps.domains) v[p] = rng.uniform(dom.lo, dom.hi);
    for (const auto& [p, value] : ps.constants) v[p] = value.get_d();
    return v;
}

}  // namespace

std::vector<ModelViolation> validate(const Pdtmc& m, const std::vector<RewardStructure>& rewards) {
    std::vector<ModelViolation> out;
    const RationalFunction one = RationalFunction::constant(1);

    for (int s = 0; s < m.state_count(); ++s) {
        if (m.trans[s].empty()) {
            out.push_back({ModelViolation::Kind::MissingRow, s,
                           "state " + m.state_names[s] + " has no outgoing transitions"});
            continue;
        }
        RationalFunction sum;
        for (const auto& [succ, f] : m.trans[s]) sum = sum + f;
        if (!equals(sum, one)) {
            out.push_back({ModelViolation::Kind::RowSumNotOne, s,
                           "row sum of " + m.state_names[s] + " is " + sum.to_string()});
        }
    }

    constexpr int kSamples = 100;
    constexpr double kTol = 1e-9;
    SplitMix64 rng(0x9d7a5c3b2e1f4680ULL);
    std::set<std::pair<int, int>> flagged_edges;
    std::set<std::pair<std::string, int>> flagged_rewards;
    for (int i = 0; i < kSamples; ++i) {
        const auto point = sample_in_domain(m.params, rng);
        for (int s = 0; s < m.state_count(); ++s) {
            for (const auto& [succ, f] : m.trans[s]) {
                const double v = f.evaluate(point);
                if ((v < -kTol || v > 1.0 + kTol) && flagged_edges.emplace(s, succ).second) {
                    out.push_back({ModelViolation::Kind::TransitionOutOfRange, s,
                                   "transition " + m.state_names[s] + " -> " +
                                       m.state_names[succ] + " evaluates to " +
                                       std::to_string(v)});
                }
            }
        }
        for (const auto& rs : rewards) {
            for (const auto& [s, f] : rs.rewards) {
                const double v = f.evaluate(point);
                if (v < -kTol && flagged_rewards.emplace(rs.name, s).second) {
                    out.push_back({ModelViolation::Kind::NegativeReward, s,
                                   "reward " + rs.name + " at " + m.state_names[s] +
                                       " evaluates to " + std::to_string(v)});
                }
            }
        }
    }
    return out;
}

FruitPickingFixture fruit_picking_model() {
    const ParamId alpha("alpha"), beta("beta");
    const ParamId p1("p1"), p2("p2"), p3("p3");
    const ParamId t0("t0"), t1("t1"), t2("t2");
    const ParamId e0("e0"), e1("e1"), e2("e2");

    Pdtmc m;
    m.state_names = {"s0", "s1", "s2", "s3", "s4", "s5"};
    m.init = 0;
    m.trans.resize(6);
    m.labels.resize(6);
    m.labels[4] = {"picking success"};
    m.labels[5] = {"done"};

    m.params.domains[alpha] = {0.7, 0.99};
    m.params.domains[beta] = {0.01, 0.2};
    for (const auto& t : {t0, t1, t2}) m.params.domains[t] = {1.0, 30.0};
    for (const auto& e : {e0, e1, e2}) m.params.domains[e] = {0.3, 4.5};
    m.params.constants[p1] = rational_from_string("0.95");
    m.params.constants[p2] = rational_from_string("0.2");
    m.params.constants[p3] = rational_from_string("0.95");

    const RationalFunction one = RationalFunction::constant(1);
    const RationalFunction pos_ok = RationalFunction::variable(alpha) * RationalFunction::variable(p1);
    const RationalFunction pick_fail = RationalFunction::variable(beta) * RationalFunction::variable(p2);
    const RationalFunction retry = RationalFunction::variable(p3);

    m.set_transition(0, 1, pos_ok);
    m.set_transition(0, 3, one - pos_ok);
    m.set_transition(1, 2, pick_fail);
    m.set_transition(1, 4, one - pick_fail);
    m.set_transition(2, 0, retry);
    m.set_transition(2, 3, one - retry);
    m.set_transition(3, 5, one);
    m.set_transition(4, 5, one);
    m.set_transition(5, 5, one);

    RewardStructure time_rwd{"time", {}};
    time_rwd.rewards[0] = RationalFunction::variable(t0);
    time_rwd.rewards[1] = RationalFunction::variable(t1);
    time_rwd.rewards[2] = RationalFunction::variable(t2);

    RewardStructure energy_rwd{"energy", {}};
    energy_rwd.rewards[0] = RationalFunction::variable(e0);
    energy_rwd.rewards[1] = RationalFunction::variable(e1);
    energy_rwd.rewards[2] = RationalFunction::variable(e2);

    return {std::move(m), std::move(time_rwd), std::move(energy_rwd)};
}

}  // namespace presto
