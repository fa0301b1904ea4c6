#include "treetau/weight_expr.hpp"

#include <cassert>
#include <limits>

#include "treetau/errors.hpp"

namespace treetau {

WeightExpr WeightExpr::integer(BigInt value) {
    assert(value >= 0);
    WeightExpr e;
    e.kind_ = Kind::Integer;
    e.value_ = std::move(value);
    return e;
}

WeightExpr WeightExpr::variable(Variable v) {
    WeightExpr e;
    e.kind_ = Kind::Variable;
    e.var_ = v;
    return e;
}

WeightExpr WeightExpr::negate(WeightExpr inner) {
    WeightExpr e;
    e.kind_ = Kind::Negate;
    e.children_.push_back(std::move(inner));
    return e;
}

WeightExpr WeightExpr::add(WeightExpr lhs, WeightExpr rhs) {
    WeightExpr e;
    e.kind_ = Kind::Add;
    e.children_.push_back(std::move(lhs));
    e.children_.push_back(std::move(rhs));
    return e;
}

WeightExpr WeightExpr::sub(WeightExpr lhs, WeightExpr rhs) {
    WeightExpr e;
    e.kind_ = Kind::Sub;
    e.children_.push_back(std::move(lhs));
    e.children_.push_back(std::move(rhs));
    return e;
}

WeightExpr WeightExpr::mul(WeightExpr lhs, WeightExpr rhs) {
    WeightExpr e;
    e.kind_ = Kind::Mul;
    e.children_.push_back(std::move(lhs));
    e.children_.push_back(std::move(rhs));
    return e;
}

WeightExpr WeightExpr::pow(WeightExpr base, std::uint64_t exponent) {
    WeightExpr e;
    e.kind_ = Kind::Pow;
    e.exponent_ = exponent;
    e.children_.push_back(std::move(base));
    return e;
}

const BigInt& WeightExpr::value() const {
    assert(kind_ == Kind::Integer);
    return value_;
}

Variable WeightExpr::var() const {
    assert(kind_ == Kind::Variable);
    return var_;
}

const WeightExpr& WeightExpr::child(std::size_t i) const {
    assert(i < children_.size());
    return children_[i];
}

std::uint64_t WeightExpr::exponent() const {
    assert(kind_ == Kind::Pow);
    return exponent_;
}

namespace {

// Binding strength; a child below the position's minimum gets parentheses.
int level(WeightExpr::Kind k) {
    switch (k) {
    case WeightExpr::Kind::Add:
    case WeightExpr::Kind::Sub: return 1;
    case WeightExpr::Kind::Mul: return 2;
    case WeightExpr::Kind::Negate: return 3;
    case WeightExpr::Kind::Pow: return 4;
    case WeightExpr::Kind::Integer:
    case WeightExpr::Kind::Variable: return 5;
    }
    return 5;
}

void render(const WeightExpr& e, std::string& out);

void render_child(const WeightExpr& e, int min_level, std::string& out) {
    if (level(e.kind()) < min_level) {
        out += '(';
        render(e, out);
        out += ')';
    } else {
        render(e, out);
    }
}

void render(const WeightExpr& e, std::string& out) {
    switch (e.kind()) {
    case WeightExpr::Kind::Integer:
        out += e.value().str();
        break;
    case WeightExpr::Kind::Variable:
        out += to_string(e.var());
        break;
    case WeightExpr::Kind::Negate:
        out += '-';
        render_child(e.child(), 3, out);
        break;
    case WeightExpr::Kind::Add:
        // Left-associative: an equal-level right operand needs parentheses
        // to parse back to the same shape.
        render_child(e.child(0), 1, out);
        out += '+';
        render_child(e.child(1), 2, out);
        break;
    case WeightExpr::Kind::Sub:
        render_child(e.child(0), 1, out);
        out += '-';
        render_child(e.child(1), 2, out);
        break;
    case WeightExpr::Kind::Mul:
        render_child(e.child(0), 2, out);
        out += '*';
        render_child(e.child(1), 3, out);
        break;
    case WeightExpr::Kind::Pow:
        render_child(e.child(), 5, out);
        out += '^';
        out += std::to_string(e.exponent());
        break;
    }
}

} // namespace

std::string WeightExpr::str() const {
    std::string out;
    render(*this, out);
    return out;
}

Polynomial WeightExpr::lower() const {
    switch (kind_) {
    case Kind::Integer: return Polynomial(value_);
    case Kind::Variable: return Polynomial::variable(var_);
    case Kind::Negate: return -children_[0].lower();
    case Kind::Add: return children_[0].lower() + children_[1].lower();
    case Kind::Sub: return children_[0].lower() - children_[1].lower();
    case Kind::Mul: return children_[0].lower() * children_[1].lower();
    case Kind::Pow: return children_[0].lower().pow(exponent_);
    }
    return {};
}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, std::size_t line, std::size_t start_column)
        : text_(text), line_(line), start_column_(start_column) {}

    WeightExpr parse() {
        WeightExpr e = parse_expr();
        skip_blanks();
        if (pos_ < text_.size()) {
            fail("unexpected character");
        }
        return e;
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    std::size_t column() const { return start_column_ + pos_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw SyntaxError(message, line_, column());
    }

    void skip_blanks() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    // Next meaningful character without consuming it; 0 at end of input.
    char peek() {
        skip_blanks();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    WeightExpr parse_expr() {
        WeightExpr e = parse_term();
        for (;;) {
            const char c = peek();
            if (c != '+' && c != '-') {
                return e;
            }
            ++pos_;
            WeightExpr rhs = parse_term();
            e = c == '+' ? WeightExpr::add(std::move(e), std::move(rhs))
                         : WeightExpr::sub(std::move(e), std::move(rhs));
        }
    }

    WeightExpr parse_term() {
        WeightExpr e = parse_factor();
        while (peek() == '*') {
            ++pos_;
            e = WeightExpr::mul(std::move(e), parse_factor());
        }
        return e;
    }

    WeightExpr parse_factor() {
        if (peek() == '-') {
            ++pos_;
            return WeightExpr::negate(parse_factor());
        }
        return parse_power();
    }

    WeightExpr parse_power() {
        WeightExpr base = parse_atom();
        if (peek() != '^') {
            return base;
        }
        ++pos_;
        if (peek() == '-') {
            throw ExponentNegativeError(line_, column());
        }
        if (!is_digit(peek())) {
            fail("expected exponent");
        }
        return WeightExpr::pow(std::move(base), parse_small_integer("exponent"));
    }

    WeightExpr parse_atom() {
        const char c = peek();
        if (c == '\0') {
            fail("unexpected end of input");
        }
        if (is_digit(c)) {
            return WeightExpr::integer(parse_integer_literal());
        }
        if (c == 'x' || c == 'y') {
            const VarKind kind = c == 'x' ? VarKind::X : VarKind::Y;
            ++pos_;
            if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
                throw SyntaxError("expected variable index", line_, column());
            }
            const std::uint64_t index = parse_small_integer("variable index");
            if (index > std::numeric_limits<std::uint32_t>::max()) {
                fail("variable index too large");
            }
            return WeightExpr::variable({kind, static_cast<std::uint32_t>(index)});
        }
        if (c == '(') {
            ++pos_;
            WeightExpr e = parse_expr();
            if (peek() != ')') {
                fail("expected ')'");
            }
            ++pos_;
            return e;
        }
        fail("unexpected character");
    }

    BigInt parse_integer_literal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            ++pos_;
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    // Digit run that must fit a machine word (exponents, variable indices).
    std::uint64_t parse_small_integer(const std::string& what) {
        std::uint64_t value = 0;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                throw SyntaxError(what + " too large", line_, start_column_ + start);
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    std::string_view text_;
    std::size_t line_;
    std::size_t start_column_;
    std::size_t pos_ = 0;
};

} // namespace

WeightExpr parse_weight_expr(std::string_view text, std::size_t line, std::size_t start_column) {
    return ExprParser(text, line, start_column).parse();
}

} // namespace treetau
