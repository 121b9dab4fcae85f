#pragma once

#include "skelcollar/exact/rational.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skelcollar::exact {

/// Exponent vector aligned with `LaurentPoly::variables()`; entries may be negative.
using Exponent = std::vector<int>;

/// Sparse monomial description keyed by symbol name, e.g. {{"z", -1}, {"u", 2}}.
using PowerMap = std::map<std::string, int>;

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Canonical form: the variable list is sorted by name and holds exactly the
/// symbols that occur with a nonzero exponent in some term; zero coefficients
/// are never stored. Two polynomials are equal iff their representations are
/// identical, so `operator==` is structural.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

    static LaurentPoly variable(const std::string& name, int power = 1);
    static LaurentPoly monomial(const Rational& coefficient, const PowerMap& powers);
    /// Builds from an arbitrary (possibly redundant) term list and canonicalizes.
    static LaurentPoly from_terms(std::vector<std::string> vars,
                                  const std::vector<std::pair<Exponent, Rational>>& terms);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return vars_.empty(); }
    std::optional<Rational> constant_value() const;
    bool contains(const std::string& var) const;

    /// Coefficient of the monomial described by `powers` (zero if absent).
    Rational coefficient(const PowerMap& powers) const;
    /// Converts an exponent vector of this polynomial into a PowerMap.
    PowerMap powers_of(const Exponent& e) const;
    /// Term list as (PowerMap, coefficient) pairs in canonical order.
    std::vector<std::pair<PowerMap, Rational>> monomials() const;

    /// Largest / smallest exponent of `var` over all terms (0 when absent or zero poly).
    int max_degree(const std::string& var) const;
    int min_degree(const std::string& var) const;

    /// Groups terms by the power of `var`: result[k] is the coefficient of var^k.
    std::map<int, LaurentPoly> collect(const std::string& var) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);

    LaurentPoly scaled(const Rational& c) const;
    /// Multiplies by the monomial x^powers (negative powers allowed).
    LaurentPoly shifted(const PowerMap& powers) const;

    /// Integer power. Negative exponents are defined only for nonzero monomials;
    /// zero raised to a negative power throws ZeroIntoNegativePower, any other
    /// non-monomial throws NotInvertible.
    LaurentPoly pow(int exponent) const;

    /// Simultaneous substitution of symbols. Variables without a binding are kept.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings) const;

    /// Full evaluation; every variable must be bound.
    Rational evaluate(const std::map<std::string, Rational>& point) const;

    /// Formal partial derivative.
    LaurentPoly derivative(const std::string& var) const;

    std::string to_string() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    void canonicalize();
    Exponent remap(const Exponent& e, const std::vector<int>& index_map, std::size_t width) const;

    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Shorthand for a symbol.
inline LaurentPoly var(const std::string& name, int power = 1) {
    return LaurentPoly::variable(name, power);
}

}  // namespace skelcollar::exact
