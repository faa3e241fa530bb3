#include "presto/property.hpp"

#include <sstream>

namespace presto {

StateFormula StateFormula::truth() {
    return StateFormula();
}

StateFormula StateFormula::atom(std::string ap) {
    StateFormula f;
    f.kind_ = Kind::Atom;
    f.atom_ = std::move(ap);
    return f;
}

StateFormula StateFormula::negation(StateFormula inner) {
    StateFormula f;
    f.kind_ = Kind::Not;
    f.lhs_ = std::make_shared<const StateFormula>(std::move(inner));
    return f;
}

StateFormula StateFormula::conjunction(StateFormula lhs, StateFormula rhs) {
    StateFormula f;
    f.kind_ = Kind::And;
    f.lhs_ = std::make_shared<const StateFormula>(std::move(lhs));
    f.rhs_ = std::make_shared<const StateFormula>(std::move(rhs));
    return f;
}

bool StateFormula::holds(const std::set<std::string>& state_labels) const {
    switch (kind_) {
        case Kind::True: return true;
        case Kind::Atom: return state_labels.count(atom_) > 0;
        case Kind::Not: return !lhs_->holds(state_labels);
        case Kind::And: return lhs_->holds(state_labels) && rhs_->holds(state_labels);
    }
    return false;
}

std::string StateFormula::to_string() const {
    switch (kind_) {
        case Kind::True: return "true";
        case Kind::Atom: return "\"" + atom_ + "\"";
        case Kind::Not: {
            const bool paren = lhs_->kind_ == Kind::And;
            return "!" + (paren ? "(" + lhs_->to_string() + ")" : lhs_->to_string());
        }
        case Kind::And: {
            auto wrap = [](const StateFormula& f) {
                return f.kind_ == Kind::And ? "(" + f.to_string() + ")" : f.to_string();
            };
            return wrap(*lhs_) + " & " + wrap(*rhs_);
        }
    }
    return "";
}

bool StateFormula::operator==(const StateFormula& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::True: return true;
        case Kind::Atom: return atom_ == other.atom_;
        case Kind::Not: return *lhs_ == *other.lhs_;
        case Kind::And: return *lhs_ == *other.lhs_ && *rhs_ == *other.rhs_;
    }
    return false;
}

std::string PathFormula::to_string() const {
    switch (kind) {
        case Kind::Next: return "X " + rhs.to_string();
        case Kind::Eventually: return "F " + rhs.to_string();
        case Kind::Until: return lhs.to_string() + " U " + rhs.to_string();
        case Kind::BoundedUntil:
            return lhs.to_string() + " U<=" + std::to_string(bound) + " " + rhs.to_string();
    }
    return "";
}

bool PathFormula::operator==(const PathFormula& other) const {
    if (kind != other.kind) return false;
    switch (kind) {
        case Kind::Next:
        case Kind::Eventually: return rhs == other.rhs;
        case Kind::Until: return lhs == other.lhs && rhs == other.rhs;
        case Kind::BoundedUntil:
            return bound == other.bound && lhs == other.lhs && rhs == other.rhs;
    }
    return false;
}

bool ProbQuery::operator==(const ProbQuery& other) const {
    return path == other.path;
}

bool RewardQuery::operator==(const RewardQuery& other) const {
    if (reward_name != other.reward_name || kind != other.kind) return false;
    switch (kind) {
        case Kind::Reachability: return target == other.target;
        case Kind::Cumulative:
        case Kind::Instantaneous: return bound == other.bound;
        case Kind::SteadyState: return true;
    }
    return false;
}

std::string PropertyAst::to_string() const {
    if (is_prob()) return "P=? [ " + prob().path.to_string() + " ]";
    const RewardQuery& r = reward();
    std::string body;
    switch (r.kind) {
        case RewardQuery::Kind::Reachability: body = "F " + r.target.to_string(); break;
        case RewardQuery::Kind::Cumulative: body = "C<=" + std::to_string(r.bound); break;
        case RewardQuery::Kind::Instantaneous: body = "I=" + std::to_string(r.bound); break;
        case RewardQuery::Kind::SteadyState: body = "S"; break;
    }
    return "R{\"" + r.reward_name + "\"}=? [ " + body + " ]";
}

std::string Requirement::to_string() const {
    std::ostringstream out;
    out << id << ": " << property.to_string()
        << (comparator == Comparator::GreaterEq ? " >= " : " <= ");
    out.precision(17);
    out << threshold;
    return out.str();
}

}  // namespace presto
