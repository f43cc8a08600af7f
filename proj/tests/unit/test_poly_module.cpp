#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace intdiff;
using namespace intdiff::testing;

TEST_SUITE("poly_module") {

TEST_CASE("apply examples")
{
    CHECK(apply(D(), DividedPolynomial::basis({0})).is_zero());
    CHECK(apply(E(2, 3), DividedPolynomial::basis({3})) == DividedPolynomial::basis({2}));
    CHECK(apply(E(2, 3), DividedPolynomial::basis({4})).is_zero());
    CHECK(apply(H(), DividedPolynomial::basis({5})) == DividedPolynomial::basis({5}, 6));
    CHECK(apply(I(), DividedPolynomial::basis({5})) == DividedPolynomial::basis({6}));
    CHECK(apply(D(), DividedPolynomial::basis({5})) == DividedPolynomial::basis({4}));
    CHECK(apply(H(2, 2), DividedPolynomial::basis({1, 3})) == DividedPolynomial::basis({1, 3}, 4));
    CHECK(error_of([] { apply(D(1, 2), DividedPolynomial::basis({1})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("action is a homomorphism and agrees with the operator-word oracle")
{
    Rng rng(31);
    ElementBounds b;
    b.index = 5;
    b.shift = 4;
    for (int trial = 0; trial < 1500; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
        const auto x = random_element(rng, n, b), y = random_element(rng, n, b);
        const auto p = random_polynomial(rng, n, 7, 4);
        REQUIRE(apply(multiply(x, y), p) == apply(x, apply(y, p)));
        REQUIRE(apply(x, p) == oracle_apply(x, p));
    }
}

TEST_CASE("truncated matrices")
{
    const auto m = truncated_matrix(E(0, 0), 4);
    CHECK(m.matrix == [] {
        RationalMatrix e(4);
        e(0, 0) = 1;
        return e;
    }());
    CHECK(truncated_matrix(one(), 3).matrix == RationalMatrix::identity(3));
    CHECK(truncated_matrix(one(2), 3).matrix == RationalMatrix::identity(9));

    const auto d = truncated_matrix(D(), 3);
    RationalMatrix shift(3);
    shift(0, 1) = 1;
    shift(1, 2) = 1;
    CHECK(d.matrix == shift);
    CHECK(std::none_of(d.escapes.begin(), d.escapes.end(), [](bool e) { return e; }));

    const auto in = truncated_matrix(I(), 3);
    CHECK(in.escapes.back());
    CHECK_FALSE(in.escapes.front());
}

TEST_CASE("transpose of matrix units on the window")
{
    for (std::int64_t i = 0; i < 4; ++i)
        for (std::int64_t j = 0; j < 4; ++j) {
            const auto a = truncated_matrix(E(i, j), 5).matrix;
            const auto b = truncated_matrix(involution(E(i, j)), 5).matrix;
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t c = 0; c < 5; ++c)
                    REQUIRE(a(r, c) == b(c, r));
        }
}

TEST_CASE("window positions are lexicographic")
{
    const auto m = truncated_matrix(one(2), 3);
    CHECK(m.position({0, 0}) == 0);
    CHECK(m.position({0, 2}) == 2);
    CHECK(m.position({1, 0}) == 3);
    CHECK(m.index_at(5) == MultiIndex{1, 2});
}

TEST_CASE("agree_on_window examples")
{
    CHECK(agree_on_window(multiply(I(), D()), one() - E(0, 0), 6));
    CHECK(agree_on_window(multiply(D(), I()), one(), 6));
    CHECK_FALSE(agree_on_window(H(), H() + E(0, 0), 1));
}

TEST_CASE("faithful window detects every nonzero element")
{
    Rng rng(37);
    ElementBounds b;
    b.h_pow = 2;
    b.shift = 2;
    b.index = 3;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
        const auto a = random_element(rng, n, b);
        if (a.is_zero())
            continue;
        CHECK_FALSE(agree_on_window(a, AlgebraElement::zero(n), faithful_window(a)));
    }
    // exhaustive single-slot combinations of e_ij and H^b v_a cancelling on small windows
    for (std::int64_t r = 0; r < 3; ++r)
        for (std::int64_t c = 0; c < 3; ++c) {
            const auto a = E(r, c) - AlgebraElement::monomial({FactorMonomial::band(1, r - c)});
            CHECK_FALSE(agree_on_window(a, AlgebraElement::zero(1), faithful_window(a)));
        }
}

TEST_CASE("polynomial text form")
{
    const auto p = parse_polynomial("2 * x1^[3] x2^[1] + -1/2 * x2^[4]", 2);
    CHECK(p == DividedPolynomial::basis({3, 1}, 2) + DividedPolynomial::basis({0, 4}, Scalar(-1, 2)));
    CHECK(parse_polynomial(to_string(p), 2) == p);
    CHECK(parse_polynomial("x1", 1) == DividedPolynomial::basis({1}));
    CHECK(parse_polynomial("3", 1) == DividedPolynomial::basis({0}, 3));
    CHECK(to_string(DividedPolynomial(1)) == "0");
    CHECK(error_of([] { parse_polynomial("x1^[2] x1^[3]", 1); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_polynomial("x3^[2]", 2); }) == ErrorCode::IndexOutOfRange);
    CHECK(error_of([] { parse_polynomial("x1^2", 1); }) == ErrorCode::SyntaxError);
}

}
