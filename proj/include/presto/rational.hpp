#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "presto/errors.hpp"

namespace presto {

/// Exact rational coefficient.
using Rational = mpq_class;

/// Parse an exact rational from a decimal or fraction literal ("0.95", "-3", "19/20").
Rational rational_from_string(const std::string& text);

/// Render a rational as "num/den" with den >= 1 (always slashed).
std::string rational_to_fraction_string(const Rational& q);

/// Render a rational as an exact finite decimal if one exists, else "num/den".
std::string rational_to_decimal_string(const Rational& q);

/// Named model parameter.
///
/// Names follow [A-Za-z_][A-Za-z0-9_]* and order lexicographically, which
/// fixes the variable order used by the term order below.
class ParamId {
public:
    explicit ParamId(std::string name);

    const std::string& name() const { return name_; }

    auto operator<=>(const ParamId&) const = default;

private:
    std::string name_;
};

/// Power product of parameters; the empty product is the constant monomial.
/// Exponents are strictly positive, keys sorted by parameter name.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<ParamId, int>> exponents);

    static Monomial variable(const ParamId& p, int exp = 1);

    const std::vector<std::pair<ParamId, int>>& exponents() const { return exps_; }
    int total_degree() const;
    bool is_constant() const { return exps_.empty(); }
    int exponent_of(const ParamId& p) const;

    Monomial operator*(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

    /// Graded lexicographic order: total degree first, then the exponent
    /// vector over names ascending.
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    std::vector<std::pair<ParamId, int>> exps_;
};

/// Multivariate polynomial with exact rational coefficients.
/// Canonical: no zero coefficients stored; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(const Rational& c);
    static Polynomial constant(long c) { return constant(Rational(c)); }
    static Polynomial variable(const ParamId& p);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value when is_constant(); zero polynomial yields 0.
    Rational constant_value() const;

    void add_term(const Monomial& m, const Rational& coeff);

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& scalar) const;

    bool operator==(const Polynomial& other) const = default;

    /// Leading term under the graded lexicographic order.
    /// Precondition: not the zero polynomial.
    const std::pair<const Monomial, Rational>& leading_term() const;

    int total_degree() const;
    std::set<ParamId> parameters() const;

    /// Exact evaluation; every parameter of the polynomial must be assigned.
    Rational evaluate_exact(const std::map<ParamId, Rational>& point) const;

private:
    std::map<Monomial, Rational> terms_;
};

/// Quotient of two polynomials, the carrier of PMC expressions.
///
/// Normal form: a zero numerator is stored as 0/1, and the denominator is
/// scaled monic (leading coefficient 1 under the term order). Denominators
/// are never the zero polynomial. No polynomial GCD cancellation is
/// performed, so structurally different representatives of the same
/// function can exist; `equals` decides functional equality exactly by
/// cross-multiplication. Term counts can grow along long derivations.
class RationalFunction {
public:
    /// The zero function 0/1.
    RationalFunction();
    /// p/1.
    RationalFunction(Polynomial p);  // NOLINT: implicit by design
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(const Rational& c);
    static RationalFunction constant(long c) { return constant(Rational(c)); }
    static RationalFunction variable(const ParamId& p);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    std::set<ParamId> parameters() const;

    RationalFunction operator+(const RationalFunction& other) const;
    RationalFunction operator-(const RationalFunction& other) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& other) const;
    RationalFunction operator/(const RationalFunction& other) const;

    /// Structural identity (same representative). Functional equality is `equals`.
    bool operator==(const RationalFunction& other) const = default;

    /// Numerator and denominator are evaluated exactly and divided before
    /// the single conversion to double. Throws MissingParameter or
    /// DenominatorNearZero (|den| <= 1e-12).
    double evaluate(const std::map<ParamId, double>& point) const;
    double evaluate_exact_point(const std::map<ParamId, Rational>& point) const;

    /// Infix rendering, terms in descending term order, e.g.
    /// "(alpha*p1*beta*p2+(-1)*alpha*p1)/(alpha*p1*beta*p2*p3+(-1))".
    std::string to_string() const;

    static constexpr double kDenominatorEpsilon = 1e-12;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

// Spec-facing operation names.
RationalFunction add(const RationalFunction& a, const RationalFunction& b);
RationalFunction sub(const RationalFunction& a, const RationalFunction& b);
RationalFunction mul(const RationalFunction& a, const RationalFunction& b);
RationalFunction div(const RationalFunction& a, const RationalFunction& b);
RationalFunction neg(const RationalFunction& a);

/// Exact functional equality: a.num * b.den == b.num * a.den after expansion.
bool equals(const RationalFunction& a, const RationalFunction& b);

/// JSON interchange: {"num": [{"coeff": "p/q", "exps": {...}}, ...], "den": [...]}.
std::string rational_function_to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const std::string& json_text);

std::string polynomial_to_string(const Polynomial& p);

}  // namespace presto
