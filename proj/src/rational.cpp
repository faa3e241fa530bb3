#include "presto/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace presto {

namespace {

bool valid_param_name(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw Error("empty rational literal");
    if (s.find('/') != std::string::npos) {
        try {
            Rational q(s);
            if (q.get_den() == 0) throw Error("zero denominator in literal: '" + text + "'");
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            throw Error("not a rational literal: '" + text + "'");
        }
    }
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        pos = 1;
    }
    const std::size_t dot = s.find('.');
    std::string int_part = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    std::string frac_part = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw Error("not a rational literal: '" + text + "'");
    auto all_digits = [](const std::string& d) {
        return std::all_of(d.begin(), d.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (!all_digits(int_part) || !all_digits(frac_part))
        throw Error("not a rational literal: '" + text + "'");
    mpz_class num(int_part.empty() ? std::string("0") : int_part);
    mpz_class den(1);
    for (char c : frac_part) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    if (negative) num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_decimal_string(const Rational& q) {
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    mpz_class rest;
    mpz_class two(2), five(5);
    const auto a = mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), two.get_mpz_t());
    mpz_class rest2;
    const auto b = mpz_remove(rest2.get_mpz_t(), rest.get_mpz_t(), five.get_mpz_t());
    if (rest2 != 1) return rational_to_fraction_string(q);
    const unsigned long k = std::max(a, b);
    mpz_class pow10(1);
    for (unsigned long i = 0; i < k; ++i) pow10 *= 10;
    mpz_class scaled = num * (pow10 / den);
    const bool neg = scaled < 0;
    std::string digits = mpz_class(abs(scaled)).get_str();
    if (k == 0) return (neg ? "-" : "") + digits;
    if (digits.size() <= k) digits.insert(0, k + 1 - digits.size(), '0');
    digits.insert(digits.size() - k, ".");
    return (neg ? "-" : "") + digits;
}

ParamId::ParamId(std::string name) : name_(std::move(name)) {
    if (!valid_param_name(name_)) throw Error("invalid parameter name: '" + name_ + "'");
}

Monomial::Monomial(std::vector<std::pair<ParamId, int>> exponents) : exps_(std::move(exponents)) {
    std::sort(exps_.begin(), exps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<ParamId, int>> merged;
    for (auto& [p, e] : exps_) {
        if (e < 0) throw Error("negative exponent in monomial");
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.emplace_back(p, e);
    }
    exps_ = std::move(merged);
}

Monomial Monomial::variable(const ParamId& p, int exp) {
    return Monomial({{p, exp}});
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [p, e] : exps_) d += e;
    return d;
}

int Monomial::exponent_of(const ParamId& p) const {
    for (const auto& [q, e] : exps_)
        if (q == p) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<std::pair<ParamId, int>> out;
    out.reserve(exps_.size() + other.exps_.size());
    auto it = exps_.begin();
    auto jt = other.exps_.begin();
    while (it != exps_.end() && jt != other.exps_.end()) {
        if (it->first < jt->first) {
            out.push_back(*it++);
        } else if (jt->first < it->first) {
            out.push_back(*jt++);
        } else {
            out.emplace_back(it->first, it->second + jt->second);
            ++it;
            ++jt;
        }
    }
    out.insert(out.end(), it, exps_.end());
    out.insert(out.end(), jt, other.exps_.end());
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = total_degree() <=> other.total_degree(); c != std::strong_ordering::equal)
        return c;
    auto it = exps_.begin();
    auto jt = other.exps_.begin();
    while (it != exps_.end() && jt != other.exps_.end()) {
        if (it->first != jt->first) {
            // Owner of the lexicographically earlier name has the larger
            // exponent at the first differing position.
            return it->first < jt->first ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        }
        if (it->second != jt->second) return it->second <=> jt->second;
        ++it;
        ++jt;
    }
    if (it != exps_.end()) return std::strong_ordering::greater;
    if (jt != other.exps_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(const ParamId& p) {
    Polynomial out;
    out.add_term(Monomial::variable(p), Rational(1));
    return out;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out;
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("zero polynomial has no leading term");
    return *terms_.rbegin();
}

int Polynomial::total_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

std::set<ParamId> Polynomial::parameters() const {
    std::set<ParamId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [p, e] : m.exponents()) out.insert(p);
    return out;
}

Rational Polynomial::evaluate_exact(const std::map<ParamId, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [p, e] : m.exponents()) {
            auto it = point.find(p);
            if (it == point.end()) throw MissingParameter(p.name());
            term *= rational_pow(it->second, e);
        }
        acc += term;
    }
    return acc;
}

RationalFunction::RationalFunction() : num_(), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalFunction RationalFunction::constant(const Rational& c) {
    return RationalFunction(Polynomial::constant(c));
}

RationalFunction RationalFunction::variable(const ParamId& p) {
    return RationalFunction(Polynomial::variable(p));
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZeroFunction();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Rational& lead = den_.leading_term().second;
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

std::set<ParamId> RationalFunction::parameters() const {
    std::set<ParamId> out = num_.parameters();
    auto d = den_.parameters();
    out.insert(d.begin(), d.end());
    return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
    if (num_.is_zero()) return other;
    if (other.num_.is_zero()) return *this;
    if (den_ == other.den_) {
        RationalFunction out;
        out.num_ = num_ + other.num_;
        out.den_ = den_;
        if (out.num_.is_zero()) out.den_ = Polynomial::constant(1);
        return out;
    }
    return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
    return *this + (-other);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
    if (num_.is_zero() || other.num_.is_zero()) return RationalFunction();
    if (num_ == den_) return other;        // this == 1
    if (other.num_ == other.den_) return *this;  // other == 1
    return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
    if (other.num_.is_zero()) throw DivisionByZeroFunction();
    if (num_.is_zero()) return RationalFunction();
    return RationalFunction(num_ * other.den_, den_ * other.num_);
}

double RationalFunction::evaluate(const std::map<ParamId, double>& point) const {
    std::map<ParamId, Rational> exact;
    for (const ParamId& p : parameters()) {
        auto it = point.find(p);
        if (it == point.end()) throw MissingParameter(p.name());
        exact.emplace(p, Rational(it->second));
    }
    return evaluate_exact_point(exact);
}

double RationalFunction::evaluate_exact_point(const std::map<ParamId, Rational>& point) const {
    const Rational num_val = num_.evaluate_exact(point);
    const Rational den_val = den_.evaluate_exact(point);
    const double den_d = den_val.get_d();
    if (std::abs(den_d) <= kDenominatorEpsilon) throw DenominatorNearZero(den_d);
    return Rational(num_val / den_val).get_d();
}

RationalFunction add(const RationalFunction& a, const RationalFunction& b) { return a + b; }
RationalFunction sub(const RationalFunction& a, const RationalFunction& b) { return a - b; }
RationalFunction mul(const RationalFunction& a, const RationalFunction& b) { return a * b; }
RationalFunction div(const RationalFunction& a, const RationalFunction& b) { return a / b; }
RationalFunction neg(const RationalFunction& a) { return -a; }

bool equals(const RationalFunction& a, const RationalFunction& b) {
    return a.num() * b.den() == b.num() * a.den();
}

namespace {

std::string coeff_string(const Rational& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return rational_to_fraction_string(c);
}

std::string term_string(const Monomial& m, const Rational& c) {
    std::string vars;
    for (const auto& [p, e] : m.exponents()) {
        if (!vars.empty()) vars += "*";
        vars += p.name();
        if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
        const std::string s = coeff_string(c);
        return c < 0 ? "(" + s + ")" : s;
    }
    if (c == 1) return vars;
    const std::string s = coeff_string(c);
    return (c < 0 ? "(" + s + ")" : s) + "*" + vars;
}

}  // namespace

std::string polynomial_to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += "+";
        out += term_string(it->first, it->second);
    }
    return out;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant() && den_.constant_value() == 1) return polynomial_to_string(num_);
    return "(" + polynomial_to_string(num_) + ")/(" + polynomial_to_string(den_) + ")";
}

namespace {

nlohmann::json polynomial_to_json_terms(const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [param, e] : it->first.exponents()) exps[param.name()] = e;
        arr.push_back({{"coeff", rational_to_fraction_string(it->second)}, {"exps", exps}});
    }
    return arr;
}

Polynomial polynomial_from_json_terms(const nlohmann::json& arr) {
    Polynomial p;
    for (const auto& term : arr) {
        Rational c = rational_from_string(term.at("coeff").get<std::string>());
        std::vector<std::pair<ParamId, int>> exps;
        for (const auto& [name, e] : term.at("exps").items())
            exps.emplace_back(ParamId(name), e.get<int>());
        p.add_term(Monomial(std::move(exps)), c);
    }
    return p;
}

}  // namespace

std::string rational_function_to_json(const RationalFunction& f) {
    nlohmann::json j;
    j["num"] = polynomial_to_json_terms(f.num());
    j["den"] = polynomial_to_json_terms(f.den());
    return j.dump();
}

RationalFunction rational_function_from_json(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    return RationalFunction(polynomial_from_json_terms(j.at("num")),
                            polynomial_from_json_terms(j.at("den")));
}

}  // namespace presto
