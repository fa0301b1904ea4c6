#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treetau/mpoly.hpp"

namespace treetau {

/// Arithmetic expression over integer literals and x<i>/y<j> variables, as
/// written in graph files. Grammar, loosest to tightest binding:
///   expr   := term (('+'|'-') term)*        left-associative
///   term   := factor ('*' factor)*          left-associative
///   factor := '-' factor | power
///   power  := atom ('^' <integer>)?
///   atom   := <integer> | <variable> | '(' expr ')'
class WeightExpr {
public:
    enum class Kind { Integer, Variable, Negate, Add, Sub, Mul, Pow };

    static WeightExpr integer(BigInt value); // value >= 0; negation is a node
    static WeightExpr variable(Variable v);
    static WeightExpr negate(WeightExpr e);
    static WeightExpr add(WeightExpr lhs, WeightExpr rhs);
    static WeightExpr sub(WeightExpr lhs, WeightExpr rhs);
    static WeightExpr mul(WeightExpr lhs, WeightExpr rhs);
    static WeightExpr pow(WeightExpr base, std::uint64_t exponent);

    Kind kind() const { return kind_; }
    const BigInt& value() const;                      // Integer only
    Variable var() const;                             // Variable only
    const WeightExpr& child(std::size_t i = 0) const; // Negate/Pow: 0; Add/Sub/Mul: 0,1
    std::uint64_t exponent() const;                   // Pow only

    bool operator==(const WeightExpr&) const = default; // structural

    /// Rendered with minimal parentheses, so that parsing the string back
    /// yields a structurally equal tree.
    std::string str() const;

    Polynomial lower() const;

private:
    WeightExpr() = default;

    Kind kind_ = Kind::Integer;
    BigInt value_ = 0;
    Variable var_{VarKind::X, 0};
    std::uint64_t exponent_ = 0;
    std::vector<WeightExpr> children_;
};

/// Throws SyntaxError / ExponentNegativeError with 1-based positions. `line`
/// and `start_column` locate the text inside a larger source, so reported
/// columns are relative to the enclosing line.
WeightExpr parse_weight_expr(std::string_view text, std::size_t line = 1,
                             std::size_t start_column = 1);

} // namespace treetau
