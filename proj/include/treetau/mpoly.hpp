#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treetau/errors.hpp"

namespace treetau {

using BigInt = boost::multiprecision::cpp_int;

/// An indeterminate: x1, x2, ... or y1, y2, ...
///
/// Total order: x_i < x_j iff i < j, every x precedes every y, y_i < y_j iff i < j.
enum class VarKind : std::uint8_t { X = 0, Y = 1 };

struct Variable {
    VarKind kind = VarKind::X;
    std::uint32_t index = 1; // 1-based

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable x_var(std::uint32_t index) { return {VarKind::X, index}; }
inline Variable y_var(std::uint32_t index) { return {VarKind::Y, index}; }

std::string to_string(Variable v);

/// A power product of variables. Exponents are strictly positive; the empty
/// monomial is 1. Ordered lexicographically with x1 < x2 < ... < y1 < y2 < ...
/// as the variable order, so e.g. x1^2 > x1*x2 > x1 > x2 > y1 > 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(Variable v, std::uint64_t exponent = 1);

    bool is_unit() const { return factors_.empty(); }
    std::uint64_t exponent_of(Variable v) const;
    std::uint64_t total_degree() const;

    /// (variable, exponent) pairs in ascending variable order.
    const std::vector<std::pair<Variable, std::uint64_t>>& factors() const { return factors_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// *this = a * b, reusing existing capacity; a and b must not alias this.
    /// Hot path of polynomial multiplication, where throwaway products would
    /// otherwise allocate once per term pair.
    void assign_product(const Monomial& a, const Monomial& b);
    Monomial pow(std::uint64_t k) const;

    bool divides(const Monomial& m) const;
    /// this / d; requires d.divides(*this).
    Monomial divided_by(const Monomial& d) const;

    bool operator==(const Monomial&) const = default;
    std::strong_ordering operator<=>(const Monomial& other) const;

private:
    std::vector<std::pair<Variable, std::uint64_t>> factors_;
};

struct Term {
    Monomial monomial;
    BigInt coefficient;

    bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Terms are kept strictly descending by monomial order with no
/// zero coefficients, so equal polynomials have identical term lists.
class Polynomial {
public:
    Polynomial() = default; // zero
    Polynomial(int c) : Polynomial(BigInt(c)) {}
    Polynomial(long long c) : Polynomial(BigInt(c)) {}
    Polynomial(BigInt c);

    static Polynomial variable(Variable v);
    /// Canonicalizes: merges like monomials, drops zeros, sorts descending.
    static Polynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const; // 0 for the zero polynomial
    const Term& leading_term() const;   // requires !is_zero()

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& b);
    Polynomial& operator-=(const Polynomial& b);
    Polynomial& operator*=(const Polynomial& b);
    Polynomial pow(std::uint64_t k) const;

    bool operator==(const Polynomial&) const = default;

    /// Canonical rendering, e.g. "3*x1^2*y2 - x2 + 7"; "0" for zero.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

inline Polynomial var(Variable v) { return Polynomial::variable(v); }
inline Polynomial x(std::uint32_t i) { return Polynomial::variable(x_var(i)); }
inline Polynomial y(std::uint32_t j) { return Polynomial::variable(y_var(j)); }

/// Exact quotient p / q in the integer-coefficient ring.
/// Throws DivisionByZeroError if q = 0, NotDivisibleError if q does not divide p.
Polynomial exact_div(const Polynomial& p, const Polynomial& q);

/// Exact quotient if q divides p (q nonzero), otherwise nullopt.
std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q);

using Assignment = std::map<Variable, BigInt>;

/// Ring-homomorphic evaluation. Every variable occurring in p must be assigned.
BigInt evaluate(const Polynomial& p, const Assignment& assignment);

/// Assignment sending every variable occurring in p to `value`.
Assignment all_equal_assignment(const Polynomial& p, const BigInt& value);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Quotient of two polynomials. The denominator is never zero. No reduced
/// canonical form is maintained: equality is by cross-multiplication.
/// Simplification is opportunistic (integer content, common monomial factor,
/// collapse to a polynomial when the denominator divides exactly).
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {} // zero
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    /// Reciprocal. Throws DivisionByZeroError on zero.
    RationalFunction inverse() const;

    /// Exact quotient numerator / denominator, or NotDivisibleError.
    Polynomial to_polynomial() const;

    /// Cross-multiplication equality: p/q = r/s iff p*s = r*q.
    bool operator==(const RationalFunction& other) const;

    std::string str() const;

private:
    void simplify();

    Polynomial num_;
    Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

} // namespace treetau
