#ifndef INTDIFF_PARSE_HPP
#define INTDIFF_PARSE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "intdiff/element.hpp"

namespace intdiff {

/// Syntax tree of an operator expression.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ['^' digits]
///   primary := number ['/' number] | generator | '(' expr ')' | tensor
///
/// Generators carry a 1-based slot: D1, I2, H1, X3, e1[r,c]. A tensor monomial
/// lists one slot factor per slot separated by '⊗' or '@', each factor being
/// "1", "H^b", "I^a", "D^a", "H^b I^a", "H^b D^a" or "e[r,c]". This is the
/// form produced by to_string, so printed elements parse back.
struct Expression {
    enum class Kind { literal, generator, matrix_unit, tensor, negate, add, subtract, multiply, power };

    Kind kind = Kind::literal;
    std::size_t offset = 0;  // byte offset of the first token
    Scalar value;
    GeneratorKind generator = GeneratorKind::deriv;
    std::size_t slot = 0;
    std::int64_t row = 0;
    std::int64_t col = 0;
    BasisMonomial monomial;
    std::uint32_t exponent = 0;
    std::vector<Expression> children;
};

/// Throws SyntaxError (with byte offset) or AlgebraError(IndexOutOfRange).
Expression parse_expression(std::string_view text, std::size_t n);

AlgebraElement evaluate(const Expression& expr, std::size_t n);

inline AlgebraElement parse_element(std::string_view text, std::size_t n)
{
    return evaluate(parse_expression(text, n), n);
}

}  // namespace intdiff

#endif
