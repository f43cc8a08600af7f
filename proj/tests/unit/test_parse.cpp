#include "generators.hpp"
#include "helpers.hpp"

using namespace intdiff;
using namespace intdiff::testing;

TEST_SUITE("parser") {

TEST_CASE("parse examples")
{
    const auto e = parse_expression("D1*I1", 1);
    CHECK(e.kind == Expression::Kind::multiply);
    CHECK(evaluate(e, 1) == one());
    CHECK(el("I1*D1 + e1[0,0]") == one());
    CHECK(error_of([] { parse_expression("D1^(-1)", 1); }) == ErrorCode::SyntaxError);
}

TEST_CASE("evaluate examples")
{
    CHECK(el("X1") == multiply(I(), H()));
    CHECK(el("H1*(1 - I1*D1)") == E(0, 0));
    CHECK(el("0").is_zero());
    CHECK(el("-2/4 * D1^2 + 3") == power(D(), 2) * Scalar(-1, 2) + AlgebraElement::constant(1, 3));
    CHECK(el("e2[1,0] * D1", 2) == multiply(E(1, 0, 2, 2), D(1, 2)));
}

TEST_CASE("precedence and associativity")
{
    CHECK(el("1 - D1 - I1") == one() - D() - I());
    CHECK(el("2 * D1^2") == power(D(), 2) * Scalar(2));
    CHECK(el("-D1^2") == -power(D(), 2));
    CHECK(el("D1 * I1 * D1") == D());
    CHECK(el("I1 * D1") != el("D1 * I1"));
}

TEST_CASE("unicode aliases and tensor monomials")
{
    CHECK(el("∂1*∫1") == one());
    CHECK(el("∂ ⊗ ∫", 2) == multiply(D(1, 2), I(2, 2)));
    CHECK(el("D @ I", 2) == el("D ⊗ I", 2));
    CHECK(el("1 ⊗ H^2 D^3", 2) == multiply(power(H(2, 2), 2), power(D(2, 2), 3)));
    CHECK(el("e[1,2]⊗1", 2) == E(1, 2, 1, 2));
    CHECK(el("H I") == AlgebraElement::monomial({FactorMonomial::band(1, 1)}));
}

TEST_CASE("errors carry offsets")
{
    try {
        parse_expression("D1 + + I1", 1);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 5);
    }
    try {
        parse_expression("D1 I1", 1);
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK(error_of([] { parse_expression("D3", 2); }) == ErrorCode::IndexOutOfRange);
    CHECK(error_of([] { parse_expression("D0", 2); }) == ErrorCode::IndexOutOfRange);
    CHECK(error_of([] { parse_expression("D ⊗ I ⊗ H", 2); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_expression("1/0", 1); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_expression("(D1", 1); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_expression("", 1); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_expression("X", 1); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_expression("D1^", 1); }) == ErrorCode::SyntaxError);
}

TEST_CASE("printed elements parse back")
{
    Rng rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const auto a = random_element(rng, n, {});
        const auto text = to_string(a);
        const auto back = parse_element(text, n);
        REQUIRE(back == a);
        REQUIRE(to_string(back) == text);
    }
    CHECK(parse_element(to_string(AlgebraElement::zero(2)), 2).is_zero());
}

}
