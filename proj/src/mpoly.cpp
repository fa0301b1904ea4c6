#include "treetau/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace treetau {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s < a) {
        throw ExponentOverflowError("exponent overflow in monomial product");
    }
    return s;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        throw ExponentOverflowError("exponent overflow in monomial power");
    }
    return a * b;
}

} // namespace

std::string to_string(Variable v) {
    return (v.kind == VarKind::X ? "x" : "y") + std::to_string(v.index);
}

// --- Monomial ---

Monomial Monomial::variable(Variable v, std::uint64_t exponent) {
    Monomial m;
    if (exponent > 0) {
        m.factors_.push_back({v, exponent});
    }
    return m;
}

std::uint64_t Monomial::exponent_of(Variable v) const {
    for (const auto& [w, e] : factors_) {
        if (w == v) return e;
        if (v < w) break;
    }
    return 0;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [w, e] : factors_) {
        d = checked_add(d, e);
    }
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.assign_product(a, b);
    return out;
}

void Monomial::assign_product(const Monomial& a, const Monomial& b) {
    assert(this != &a && this != &b);
    factors_.clear();
    factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        if (ia->first < ib->first) {
            factors_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            factors_.push_back(*ib++);
        } else {
            factors_.push_back({ia->first, checked_add(ia->second, ib->second)});
            ++ia;
            ++ib;
        }
    }
    factors_.insert(factors_.end(), ia, a.factors_.end());
    factors_.insert(factors_.end(), ib, b.factors_.end());
}

Monomial Monomial::pow(std::uint64_t k) const {
    Monomial out;
    if (k == 0) return out;
    out.factors_.reserve(factors_.size());
    for (const auto& [v, e] : factors_) {
        out.factors_.push_back({v, checked_mul(e, k)});
    }
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    auto id = factors_.begin();
    auto im = m.factors_.begin();
    while (id != factors_.end()) {
        while (im != m.factors_.end() && im->first < id->first) ++im;
        if (im == m.factors_.end() || im->first != id->first || im->second < id->second) {
            return false;
        }
        ++id;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
    assert(d.divides(*this));
    Monomial out;
    auto id = d.factors_.begin();
    for (const auto& [v, e] : factors_) {
        std::uint64_t sub = 0;
        if (id != d.factors_.end() && id->first == v) {
            sub = id->second;
            ++id;
        }
        if (e > sub) {
            out.factors_.push_back({v, e - sub});
        }
    }
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    // Lexicographic on exponent vectors: the first variable (in ascending
    // variable order) with differing exponents decides; larger exponent wins.
    auto ia = factors_.begin(), ib = other.factors_.begin();
    while (ia != factors_.end() && ib != other.factors_.end()) {
        if (ia->first < ib->first) return std::strong_ordering::greater;
        if (ib->first < ia->first) return std::strong_ordering::less;
        if (ia->second != ib->second) {
            return ia->second > ib->second ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
        }
        ++ia;
        ++ib;
    }
    if (ia != factors_.end()) return std::strong_ordering::greater;
    if (ib != other.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// --- Polynomial ---

Polynomial::Polynomial(BigInt c) {
    if (c != 0) {
        terms_.push_back({Monomial{}, std::move(c)});
    }
}

Polynomial Polynomial::variable(Variable v) {
    Polynomial p;
    p.terms_.push_back({Monomial::variable(v), BigInt(1)});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coefficient += t.coefficient;
            if (p.terms_.back().coefficient == 0) {
                p.terms_.pop_back();
            }
        } else if (t.coefficient != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_[0].monomial.is_unit() && terms_[0].coefficient == 1;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit());
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.monomial.total_degree());
    }
    return d;
}

const Term& Polynomial::leading_term() const {
    assert(!terms_.empty());
    return terms_.front();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        auto cmp = ia->monomial <=> ib->monomial;
        if (cmp == std::strong_ordering::greater) {
            out.terms_.push_back(*ia++);
        } else if (cmp == std::strong_ordering::less) {
            out.terms_.push_back(*ib++);
        } else {
            BigInt c = ia->coefficient + ib->coefficient;
            if (c != 0) {
                out.terms_.push_back({ia->monomial, std::move(c)});
            }
            ++ia;
            ++ib;
        }
    }
    out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
    out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& t : out.terms_) {
        t.coefficient = -t.coefficient;
    }
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        auto cmp = ia->monomial <=> ib->monomial;
        if (cmp == std::strong_ordering::greater) {
            out.terms_.push_back(*ia++);
        } else if (cmp == std::strong_ordering::less) {
            out.terms_.push_back({ib->monomial, -ib->coefficient});
            ++ib;
        } else {
            BigInt c = ia->coefficient - ib->coefficient;
            if (c != 0) {
                out.terms_.push_back({ia->monomial, std::move(c)});
            }
            ++ia;
            ++ib;
        }
    }
    out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
    for (; ib != b.terms_.end(); ++ib) {
        out.terms_.push_back({ib->monomial, -ib->coefficient});
    }
    return out;
}

namespace {

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (const auto& [v, e] : m.factors()) {
            h ^= (static_cast<std::size_t>(v.index) << 8) | static_cast<std::size_t>(v.kind);
            h *= 0x100000001b3ull;
            h ^= static_cast<std::size_t>(e);
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

// term * polynomial keeps the strict descending order: multiplying every
// monomial by the same monomial preserves all lex comparisons.
std::vector<Term> scale_terms(const Term& t, const std::vector<Term>& terms) {
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& q : terms)
        out.push_back({t.monomial * q.monomial, t.coefficient * q.coefficient});
    return out;
}

} // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.term_count() == 1 || b.term_count() == 1) {
        const Term& single = a.term_count() == 1 ? a.terms_.front() : b.terms_.front();
        const auto& rest = a.term_count() == 1 ? b.terms_ : a.terms_;
        Polynomial out;
        out.terms_ = scale_terms(single, rest);
        return out;
    }

    std::unordered_map<Monomial, BigInt, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size() / 2 + 8, 1u << 20));
    Monomial scratch; // reused across pairs; copied into the map only on a miss
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            scratch.assign_product(ta.monomial, tb.monomial);
            auto it = acc.find(scratch);
            if (it == acc.end()) {
                acc.emplace(scratch, ta.coefficient * tb.coefficient);
            } else {
                it->second += ta.coefficient * tb.coefficient;
            }
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (c != 0) {
            terms.push_back({m, std::move(c)});
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& s, const Term& t) { return t.monomial < s.monomial; });
    Polynomial out;
    out.terms_ = std::move(terms);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) { return *this = *this + b; }
Polynomial& Polynomial::operator-=(const Polynomial& b) { return *this = *this - b; }
Polynomial& Polynomial::operator*=(const Polynomial& b) { return *this = *this * b; }

Polynomial Polynomial::pow(std::uint64_t k) const {
    Polynomial result(1);
    Polynomial base(*this);
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

std::optional<Polynomial> try_exact_div(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) return std::nullopt;
    if (p.is_zero()) return Polynomial{};

    const Term& qlead = q.leading_term();
    const std::vector<Term>& qs = q.terms();
    std::vector<Term> rem(p.terms());
    std::vector<Term> quotient, next;
    Monomial prod; // t * qs[iq], materialized once per q term
    while (!rem.empty()) {
        const Term& lead = rem.front();
        if (!qlead.monomial.divides(lead.monomial) ||
            lead.coefficient % qlead.coefficient != 0) {
            return std::nullopt;
        }
        Term t{lead.monomial.divided_by(qlead.monomial), lead.coefficient / qlead.coefficient};
        // rem -= t*q in one linear merge; both sides are sorted and the
        // leading terms cancel exactly.
        next.clear();
        next.reserve(rem.size() + qs.size());
        std::size_t ir = 0, iq = 0;
        prod.assign_product(t.monomial, qs[iq].monomial);
        while (ir < rem.size() && iq < qs.size()) {
            auto cmp = rem[ir].monomial <=> prod;
            if (cmp == std::strong_ordering::greater) {
                next.push_back(std::move(rem[ir++]));
            } else if (cmp == std::strong_ordering::less) {
                next.push_back({std::move(prod), -(t.coefficient * qs[iq].coefficient)});
                if (++iq < qs.size()) prod.assign_product(t.monomial, qs[iq].monomial);
            } else {
                BigInt c = rem[ir].coefficient - t.coefficient * qs[iq].coefficient;
                if (c != 0) {
                    next.push_back({std::move(rem[ir].monomial), std::move(c)});
                }
                ++ir;
                if (++iq < qs.size()) prod.assign_product(t.monomial, qs[iq].monomial);
            }
        }
        for (; ir < rem.size(); ++ir) {
            next.push_back(std::move(rem[ir]));
        }
        while (iq < qs.size()) {
            next.push_back({std::move(prod), -(t.coefficient * qs[iq].coefficient)});
            if (++iq < qs.size()) prod.assign_product(t.monomial, qs[iq].monomial);
        }
        rem.swap(next);
        quotient.push_back(std::move(t));
    }
    // Quotient terms were produced in strictly descending monomial order.
    return Polynomial::from_terms(std::move(quotient));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) {
        throw DivisionByZeroError("exact_div: division by the zero polynomial");
    }
    auto r = try_exact_div(p, q);
    if (!r) {
        throw NotDivisibleError("exact_div: dividend is not an exact multiple of divisor");
    }
    return *std::move(r);
}

BigInt evaluate(const Polynomial& p, const Assignment& assignment) {
    BigInt total = 0;
    for (const auto& t : p.terms()) {
        BigInt value = t.coefficient;
        for (const auto& [v, e] : t.monomial.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw UnassignedVariableError("evaluate: no value for " + to_string(v));
            }
            BigInt base = it->second;
            std::uint64_t k = e;
            while (k > 0) {
                if (k & 1) value *= base;
                k >>= 1;
                if (k > 0) base *= base;
            }
        }
        total += value;
    }
    return total;
}

Assignment all_equal_assignment(const Polynomial& p, const BigInt& value) {
    Assignment a;
    for (const auto& t : p.terms()) {
        for (const auto& [v, e] : t.monomial.factors()) {
            a.emplace(v, value);
        }
    }
    return a;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        BigInt mag = t.coefficient < 0 ? BigInt(-t.coefficient) : t.coefficient;
        if (first) {
            if (t.coefficient < 0) os << "-";
            first = false;
        } else {
            os << (t.coefficient < 0 ? " - " : " + ");
        }
        if (t.monomial.is_unit()) {
            os << mag;
        } else {
            bool need_star = false;
            if (mag != 1) {
                os << mag;
                need_star = true;
            }
            for (const auto& [v, e] : t.monomial.factors()) {
                if (need_star) os << "*";
                os << to_string(v);
                if (e > 1) os << "^" << e;
                need_star = true;
            }
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// --- RationalFunction ---

namespace {

BigInt integer_content(const Polynomial& p) {
    BigInt g = 0;
    for (const auto& t : p.terms()) {
        g = boost::multiprecision::gcd(g, t.coefficient);
        if (g == 1) break;
    }
    return g;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    Monomial g;
    auto ib = b.factors().begin();
    for (const auto& [v, e] : a.factors()) {
        while (ib != b.factors().end() && ib->first < v) ++ib;
        if (ib != b.factors().end() && ib->first == v) {
            g = g * Monomial::variable(v, std::min(e, ib->second));
        }
    }
    return g;
}

Monomial monomial_content(const Polynomial& p) {
    assert(!p.is_zero());
    Monomial g = p.terms().front().monomial;
    for (const auto& t : p.terms()) {
        if (g.is_unit()) break;
        g = monomial_gcd(g, t.monomial);
    }
    return g;
}

Polynomial divide_by_monomial_and_content(const Polynomial& p, const Monomial& m,
                                          const BigInt& c) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        terms.push_back({t.monomial.divided_by(m), t.coefficient / c});
    }
    return Polynomial::from_terms(std::move(terms));
}

} // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw DivisionByZeroError("RationalFunction: zero denominator");
    }
    simplify();
}

void RationalFunction::simplify() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den_.is_one()) {
        if (auto q = try_exact_div(num_, den_)) {
            num_ = *std::move(q);
            den_ = Polynomial(1);
        } else {
            Monomial mg = monomial_gcd(monomial_content(num_), monomial_content(den_));
            BigInt cg = boost::multiprecision::gcd(integer_content(num_), integer_content(den_));
            if (!mg.is_unit() || cg > 1) {
                num_ = divide_by_monomial_and_content(num_, mg, cg);
                den_ = divide_by_monomial_and_content(den_, mg, cg);
            }
        }
    }
    if (den_.leading_term().coefficient < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out(*this);
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) {
        throw DivisionByZeroError("RationalFunction::inverse of zero");
    }
    return {den_, num_};
}

Polynomial RationalFunction::to_polynomial() const {
    return exact_div(num_, den_);
}

bool RationalFunction::operator==(const RationalFunction& other) const {
    return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

} // namespace treetau
