#pragma once

#include "pivotal/function_table.hpp"
#include "pivotal/sort.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pivotal {

/// Syntax tree of an expression over x1..xn.
struct Expression {
  enum class Op {
    variable,
    constant,
    negate,   // ! or ¬
    minus,    // unary -
    meet,     // & or ∧
    join,     // | or ∨
    exclusive_or,  // ^ or ⊕
    add,
    subtract,
    multiply,  // * or ·
    min,
    max,
    median,
  };

  Op op = Op::constant;
  std::size_t variable = 0;  // 1-based, Op::variable only
  Value constant;            // Op::constant only
  std::vector<Expression> args;

  friend bool operator==(const Expression&, const Expression&) = default;
};

/// Value context an expression is read in. Boolean contexts accept
/// ! & | ^ min max med and 0/1; rational contexts accept + - * & | min max med
/// and rational literals; lattice contexts accept & | min max med and element
/// names.
enum class ExpressionSort { boolean, rational, lattice };

ExpressionSort expression_sort_for(const Sort& codomain);

/// Parses with precedence ¬ > ∧,· > ⊕ > ∨ > +,− (binary operators are left
/// associative). Throws ParseError with the byte offset and the expected
/// tokens, or SortError for an operator foreign to the context.
Expression parse_ast(std::string_view text, const Sort& codomain);

/// Canonical ASCII rendering; parse_ast(to_string(e)) == e.
std::string to_string(const Expression& e, const Sort& codomain);

/// Largest variable index used (0 for variable-free expressions).
std::size_t max_variable(const Expression& e);

Value evaluate(const Expression& e, const Point& x, const Sort& codomain);

/// Exhaustive tabulation. The arity is the largest variable index (at least
/// 1) unless `arity` is given; a variable beyond an explicit arity is a
/// DomainError.
FunctionTable parse_expression(std::string_view text, const Sort& domain, const Sort& codomain,
                               std::optional<std::size_t> arity = std::nullopt);

}  // namespace pivotal
