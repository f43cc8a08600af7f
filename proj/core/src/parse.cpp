#include "intdiff/parse.hpp"

#include <cctype>
#include <charconv>

#include "intdiff/error.hpp"

namespace intdiff {

namespace {

constexpr std::string_view partial_sign = "\xE2\x88\x82";   // ∂
constexpr std::string_view integral_sign = "\xE2\x88\xAB";  // ∫
constexpr std::string_view tensor_sign = "\xE2\x8A\x97";    // ⊗

class Parser {
public:
    Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

    Expression parse()
    {
        Expression e = expr();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        if (pos_ >= s_.size())
            throw SyntaxError(s_.size(), "unexpected end of input");
        throw SyntaxError(pos_, what + " near '" + std::string(s_.substr(pos_, 8)) + "'");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool at_digit(std::size_t at) const
    {
        return at < s_.size() && std::isdigit(static_cast<unsigned char>(s_[at]));
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    bool eat_tensor_sign()
    {
        skip_ws();
        if (s_.substr(pos_).starts_with(tensor_sign)) {
            pos_ += tensor_sign.size();
            return true;
        }
        return eat('@');
    }

    bool at_tensor_sign()
    {
        std::size_t saved = pos_;
        bool found = eat_tensor_sign();
        pos_ = saved;
        return found;
    }

    // One of 'D', 'I', 'H', 'X', 'e' at `at`, with the byte length of its spelling.
    char letter_at(std::size_t at, std::size_t& len) const
    {
        std::string_view rest = s_.substr(std::min(at, s_.size()));
        if (rest.starts_with(partial_sign)) {
            len = partial_sign.size();
            return 'D';
        }
        if (rest.starts_with(integral_sign)) {
            len = integral_sign.size();
            return 'I';
        }
        if (!rest.empty() && std::string_view("DIHXe").find(rest.front()) != std::string_view::npos) {
            len = 1;
            return rest.front();
        }
        len = 0;
        return 0;
    }

    std::string_view digits()
    {
        std::size_t start = pos_;
        while (at_digit(pos_))
            ++pos_;
        if (start == pos_)
            fail("expected a digit");
        return s_.substr(start, pos_ - start);
    }

    template <typename T>
    T small_integer()
    {
        std::size_t start = pos_;
        std::string_view d = digits();
        T value{};
        auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
        if (ec != std::errc() || ptr != d.data() + d.size())
            throw SyntaxError(start, "integer literal out of range");
        return value;
    }

    std::int64_t factor_exponent()
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            return small_integer<std::int64_t>();
        }
        return 1;
    }

    Expression node(Expression::Kind kind, std::size_t offset)
    {
        Expression e;
        e.kind = kind;
        e.offset = offset;
        return e;
    }

    Expression binary(Expression::Kind kind, std::size_t offset, Expression lhs, Expression rhs)
    {
        Expression e = node(kind, offset);
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }

    Expression expr()
    {
        skip_ws();
        std::size_t start = pos_;
        Expression lhs = term();
        for (;;) {
            if (eat('+'))
                lhs = binary(Expression::Kind::add, start, std::move(lhs), term());
            else if (eat('-'))
                lhs = binary(Expression::Kind::subtract, start, std::move(lhs), term());
            else
                return lhs;
        }
    }

    Expression term()
    {
        skip_ws();
        std::size_t start = pos_;
        Expression lhs = unary();
        while (eat('*'))
            lhs = binary(Expression::Kind::multiply, start, std::move(lhs), unary());
        return lhs;
    }

    Expression unary()
    {
        skip_ws();
        std::size_t start = pos_;
        if (eat('-')) {
            Expression e = node(Expression::Kind::negate, start);
            e.children.push_back(unary());
            return e;
        }
        return power();
    }

    Expression power()
    {
        skip_ws();
        std::size_t start = pos_;
        Expression base = primary();
        if (!eat('^'))
            return base;
        skip_ws();
        if (!at_digit(pos_))
            fail("exponent must be a nonnegative integer literal");
        Expression e = node(Expression::Kind::power, start);
        e.exponent = small_integer<std::uint32_t>();
        e.children.push_back(std::move(base));
        return e;
    }

    std::size_t slot_index(std::size_t start)
    {
        auto slot = small_integer<std::size_t>();
        if (slot < 1 || slot > n_)
            throw AlgebraError(ErrorCode::IndexOutOfRange, "slot " + std::to_string(slot) + " at byte " +
                                                               std::to_string(start) + " is outside 1.." +
                                                               std::to_string(n_));
        return slot;
    }

    std::pair<std::int64_t, std::int64_t> bracket_pair()
    {
        expect('[');
        skip_ws();
        auto r = small_integer<std::int64_t>();
        expect(',');
        skip_ws();
        auto c = small_integer<std::int64_t>();
        expect(']');
        return {r, c};
    }

    Expression primary()
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        if (eat('('))
        {
            Expression e = expr();
            expect(')');
            return e;
        }
        if (at_digit(pos_))
            return number(start);

        std::size_t len = 0;
        char letter = letter_at(pos_, len);
        if (letter == 0)
            fail("unexpected character");
        if (at_digit(pos_ + len)) {
            pos_ += len;
            std::size_t slot = slot_index(start);
            if (letter == 'e') {
                Expression e = node(Expression::Kind::matrix_unit, start);
                e.slot = slot;
                std::tie(e.row, e.col) = bracket_pair();
                return e;
            }
            Expression e = node(Expression::Kind::generator, start);
            e.slot = slot;
            e.generator = letter == 'D'   ? GeneratorKind::deriv
                          : letter == 'I' ? GeneratorKind::integ
                          : letter == 'H' ? GeneratorKind::euler
                                          : GeneratorKind::coord;
            return e;
        }
        if (letter == 'X')
            fail("X needs a slot index");
        return tensor(start, {});
    }

    Expression number(std::size_t start)
    {
        std::string_view num = digits();
        std::size_t after_num = pos_;
        Scalar value{Integer{std::string(num)}};
        bool has_den = false;
        if (eat('/')) {
            skip_ws();
            std::size_t den_at = pos_;
            Integer den{std::string(digits())};
            if (den == 0)
                throw SyntaxError(den_at, "zero denominator");
            value = Scalar(value.get_num(), den);
            value.canonicalize();
            has_den = true;
        } else {
            pos_ = after_num;
        }
        if (!has_den && num == "1" && at_tensor_sign())
            return tensor(start, {FactorMonomial::one()});
        Expression e = node(Expression::Kind::literal, start);
        e.value = value;
        return e;
    }

    FactorMonomial slot_factor()
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '1' && !at_digit(pos_ + 1)) {
            ++pos_;
            return FactorMonomial::one();
        }
        std::size_t len = 0;
        char letter = letter_at(pos_, len);
        if (letter == 0 || letter == 'X' || at_digit(pos_ + len))
            fail("expected a slot factor");
        pos_ += len;
        if (letter == 'e') {
            auto [r, c] = bracket_pair();
            return FactorMonomial::matrix(r, c);
        }
        std::int64_t h = 0;
        if (letter == 'H') {
            h = factor_exponent();
            std::size_t saved = pos_;
            skip_ws();
            letter = letter_at(pos_, len);
            if ((letter == 'I' || letter == 'D') && !at_digit(pos_ + len)) {
                pos_ += len;
            } else {
                pos_ = saved;
                return FactorMonomial::band(h, 0);
            }
        }
        std::int64_t a = factor_exponent();
        return FactorMonomial::band(h, letter == 'I' ? a : -a);
    }

    Expression tensor(std::size_t start, BasisMonomial factors)
    {
        if (factors.empty())
            factors.push_back(slot_factor());
        while (eat_tensor_sign())
            factors.push_back(slot_factor());
        if (factors.size() != n_)
            throw SyntaxError(start, "tensor monomial has " + std::to_string(factors.size()) + " slots, expected " +
                                         std::to_string(n_));
        Expression e = node(Expression::Kind::tensor, start);
        e.monomial = std::move(factors);
        return e;
    }
};

}  // namespace

Expression parse_expression(std::string_view text, std::size_t n)
{
    if (n == 0)
        throw AlgebraError(ErrorCode::DimensionMismatch, "n must be positive");
    return Parser(text, n).parse();
}

AlgebraElement evaluate(const Expression& expr, std::size_t n)
{
    using K = Expression::Kind;
    switch (expr.kind) {
    case K::literal:
        return AlgebraElement::constant(n, expr.value);
    case K::generator:
        return generator(expr.generator, expr.slot, n);
    case K::matrix_unit:
        return matrix_unit(expr.slot, expr.row, expr.col, n);
    case K::tensor:
        return AlgebraElement::monomial(expr.monomial);
    case K::negate:
        return -evaluate(expr.children.at(0), n);
    case K::add:
        return evaluate(expr.children.at(0), n) + evaluate(expr.children.at(1), n);
    case K::subtract:
        return evaluate(expr.children.at(0), n) - evaluate(expr.children.at(1), n);
    case K::multiply:
        return multiply(evaluate(expr.children.at(0), n), evaluate(expr.children.at(1), n));
    case K::power:
        return power(evaluate(expr.children.at(0), n), expr.exponent);
    }
    throw AlgebraError(ErrorCode::SyntaxError, "unknown expression node");
}

}  // namespace intdiff
