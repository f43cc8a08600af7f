#include "generators.hpp"
#include "helpers.hpp"

using namespace intdiff;
using namespace intdiff::testing;

namespace {

CanonicalAutomorphism omega(const AlgebraElement& phi)
{
    return CanonicalAutomorphism::inner(InnerUnit::from_finite_unit(phi));
}

GeneratorImages conjugation_images(const AlgebraElement& phi, const AlgebraElement& inv)
{
    GeneratorImages g = identity_images(phi.dim());
    for (auto* family : {&g.d, &g.i, &g.h})
        for (auto& x : *family)
            x = multiply(multiply(phi, x), inv);
    return g;
}

}  // namespace

TEST_SUITE("automorphism") {

TEST_CASE("apply_aut examples")
{
    const auto t = CanonicalAutomorphism::torus({Scalar(3)});
    CHECK(apply_aut(t, D()) == D() * Scalar(1, 3));
    CHECK(apply_aut(t, I()) == I() * Scalar(3));
    const auto swap = CanonicalAutomorphism::permutation(Permutation::from_one_line({2, 1}));
    CHECK(apply_aut(swap, H(1, 2)) == H(2, 2));
    CHECK(apply_aut(omega(one() + E(0, 0)), D()) == D() + E(0, 1));
    // (1 + e00) D (1 - 1/2 e00) expanded by hand: e00 D = e01 and D e00 = 0
    CHECK(multiply(multiply(one() + E(0, 0), D()), one() - E(0, 0) * Scalar(1, 2)) == D() + E(0, 1));
}

TEST_CASE("apply_aut is an algebra automorphism")
{
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
        const auto sigma = random_automorphism(rng, n, 3, 3);
        const auto a = random_element(rng, n, {}), b = random_element(rng, n, {});
        REQUIRE(apply_aut(sigma, multiply(a, b)) == multiply(apply_aut(sigma, a), apply_aut(sigma, b)));
        REQUIRE(apply_aut(sigma, one(n)) == one(n));
        REQUIRE(apply_aut(invert(sigma), apply_aut(sigma, a)) == a);
        ImageHomomorphism hom(images_of(sigma));
        REQUIRE(hom(a) == apply_aut(sigma, a));
    }
}

TEST_CASE("perm and torus actions")
{
    CHECK(torus_action({Scalar(2)}, E(2, 0)) == E(2, 0) * Scalar(4));
    CHECK(torus_action({Scalar(2)}, multiply(power(I(), 2), E(0, 0))) == multiply(power(I(), 2), E(0, 0)) * Scalar(4));
    const auto s = Permutation::from_one_line({2, 1});
    CHECK(perm_action(s, multiply(D(1, 2), I(2, 2))) == multiply(I(1, 2), D(2, 2)));
    const auto a = multiply(D(1, 2), E(1, 3, 2, 2));
    CHECK(torus_action({Scalar(1), Scalar(1)}, a) == a);
    // the three-slot cycle sends slot i to slot s(i)
    const auto c = Permutation::from_one_line({2, 3, 1});
    CHECK(perm_action(c, D(1, 3)) == D(2, 3));
    CHECK(perm_action(c, D(3, 3)) == D(1, 3));
}

TEST_CASE("idempotents p(I,d) q(CI,d)")
{
    CHECK(idempotent_pq(0b1, 2, 1) == E(0, 0) + E(1, 1));
    CHECK(idempotent_pq(0b0, 1, 1) == one() - E(0, 0));
    AlgebraElement sum(2);
    for (std::uint32_t s = 0; s < 4; ++s)
        sum += idempotent_pq(s, 2, 2);
    CHECK(sum == one(2));
    for (std::uint32_t s = 0; s < 4; ++s)
        for (std::uint32_t t = 0; t < 4; ++t) {
            const auto prod = multiply(idempotent_pq(s, 2, 2), idempotent_pq(t, 2, 2));
            CHECK(prod == (s == t ? idempotent_pq(s, 2, 2) : AlgebraElement::zero(2)));
        }
}

TEST_CASE("conjugator formulas")
{
    const auto id = identity_images(1);
    CHECK(conjugator_from_inner(id) == one());
    CHECK(conjugator_inverse_from_inner(id) == one());

    const auto g = conjugation_images(one() + E(0, 0), one() - E(0, 0) * Scalar(1, 2));
    CHECK(g.d[0] == D() + E(0, 1));
    CHECK(g.i[0] == I() - E(1, 0) * Scalar(1, 2));
    CHECK(conjugator_bandwidth(g) == 2);
    CHECK(conjugator_from_inner(g) == one() + E(0, 0));
    CHECK(conjugator_inverse_from_inner(g) == one() - E(0, 0) * Scalar(1, 2));

    const auto g2 = conjugation_images(one() + E(0, 1), one() - E(0, 1));
    CHECK(conjugator_from_inner(g2) == one() + E(0, 1));

    CHECK(error_of([] { conjugator_from_inner(images_of(CanonicalAutomorphism::torus({Scalar(2)}))); }) ==
          ErrorCode::NotInKernelXi);
}

TEST_CASE("conjugator formulas invert each other on sampled inner units")
{
    Rng rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
        const InnerUnit u = n == 1 ? random_g1_inner_unit(rng, 4, 3) : random_inner_unit(rng, n, 4, 3);
        const auto g = images_of(CanonicalAutomorphism::inner(u));
        const auto phi = conjugator_from_inner(g);
        const auto inv = conjugator_inverse_from_inner(g);
        REQUIRE(phi == u.phi());
        REQUIRE(multiply(phi, inv) == one(n));
    }
}

TEST_CASE("recognize examples")
{
    const auto t = CanonicalAutomorphism::torus({Scalar(-2, 7)});
    CHECK(recognize(images_of(t)) == t);
    const auto w = omega(one() + E(0, 0));
    const auto r = recognize(images_of(w));
    CHECK(r == w);
    CHECK(r.phi.inverse() == one() - E(0, 0) * Scalar(1, 2));

    GeneratorImages bad = identity_images(1);
    bad.d[0] = I();
    CHECK(error_of([&] { recognize(bad); }) == ErrorCode::BadResidue);
}

TEST_CASE("recognize rejects broken images")
{
    GeneratorImages relation = identity_images(1);
    relation.d[0] = D() + E(0, 0);
    CHECK(error_of([&] { recognize(relation); }) == ErrorCode::RelationViolation);

    GeneratorImages cross = identity_images(2);
    cross.h[0] = H(1, 2) + E(0, 0, 1, 2) * E(0, 0, 2, 2) * Scalar(0) + multiply(E(0, 0, 1, 2), D(2, 2));
    CHECK(error_of([&] { recognize(cross); }) == ErrorCode::RelationViolation);

    GeneratorImages residue = identity_images(2);
    residue.d[1] = D(1, 2);
    CHECK(error_of([&] { recognize(residue); }) == ErrorCode::BadResidue);

    GeneratorImages scaled = identity_images(1);
    scaled.d[0] = D() * Scalar(2);
    CHECK(error_of([&] { recognize(scaled); }) == ErrorCode::BadResidue);

    GeneratorImages dims = identity_images(2);
    dims.h.pop_back();
    CHECK(error_of([&] { recognize(dims); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("round trip through images")
{
    Rng rng(61);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const auto sigma = random_automorphism(rng, n, n == 3 ? 2 : 4, 3);
        REQUIRE(recognize(images_of(sigma)) == sigma);
    }
}

TEST_CASE("is_inner")
{
    CHECK(is_inner(images_of(omega(one() + E(0, 0)))));
    CHECK_FALSE(is_inner(images_of(CanonicalAutomorphism::torus({Scalar(2)}))));
    CHECK(is_inner(identity_images(2)));
    GeneratorImages relation = identity_images(1);
    relation.i[0] = I() * Scalar(2);
    CHECK(error_of([&] { is_inner(relation); }) == ErrorCode::RelationViolation);
}

TEST_CASE("compose examples")
{
    const TorusVector l{Scalar(2), Scalar(3)}, m{Scalar(5), Scalar(-1)};
    CHECK(compose(CanonicalAutomorphism::torus(l), CanonicalAutomorphism::torus(m)) ==
          CanonicalAutomorphism::torus({Scalar(10), Scalar(-3)}));
    const auto s = Permutation::from_one_line({2, 1});
    const auto ps = CanonicalAutomorphism::permutation(s);
    CHECK(compose(ps, CanonicalAutomorphism::torus(l)) == CanonicalAutomorphism(s, l, InnerUnit::identity(2)));
    CHECK(compose(CanonicalAutomorphism::torus(l), ps) == CanonicalAutomorphism(s, {l[1], l[0]}, InnerUnit::identity(2)));
    Rng rng(67);
    const auto sigma = random_automorphism(rng, 2);
    CHECK(compose(sigma, CanonicalAutomorphism::identity(2)) == sigma);
    CHECK(compose(CanonicalAutomorphism::identity(2), sigma) == sigma);
}

TEST_CASE("compose matches the generator action and is associative")
{
    Rng rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
        const auto a = random_automorphism(rng, n, 2, 3), b = random_automorphism(rng, n, 2, 3),
                   c = random_automorphism(rng, n, 2, 3);
        const auto ab = compose(a, b);
        const auto gb = images_of(b), gab = images_of(ab);
        for (std::size_t k = 0; k < n; ++k) {
            REQUIRE(apply_aut(a, gb.d[k]) == gab.d[k]);
            REQUIRE(apply_aut(a, gb.i[k]) == gab.i[k]);
            REQUIRE(apply_aut(a, gb.h[k]) == gab.h[k]);
        }
        REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
        REQUIRE(invert(invert(a)) == a);
        REQUIRE(invert(ab) == compose(invert(b), invert(a)));
    }
}

TEST_CASE("inner units compose by multiplication")
{
    Rng rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
        const auto u = random_inner_unit(rng, n, 3, 3), v = random_inner_unit(rng, n, 3, 3);
        const auto uv = compose(CanonicalAutomorphism::inner(u), CanonicalAutomorphism::inner(v));
        REQUIRE(uv.phi.phi() == multiply(u.phi(), v.phi()));
        REQUIRE(uv.s.is_identity());
    }
}

TEST_CASE("invert examples")
{
    const auto t = CanonicalAutomorphism::torus({Scalar(2), Scalar(-3)});
    CHECK(invert(t) == CanonicalAutomorphism::torus({Scalar(1, 2), Scalar(-1, 3)}));
    const auto swap = CanonicalAutomorphism::permutation(Permutation::from_one_line({2, 1}));
    CHECK(invert(swap) == swap);
    const auto w = omega(one() + E(0, 0));
    CHECK(invert(w).phi.phi() == one() - E(0, 0) * Scalar(1, 2));
    CHECK(compose(w, invert(w)) == CanonicalAutomorphism::identity(1));
}

TEST_CASE("hat_star")
{
    CHECK(hat_star(CanonicalAutomorphism::torus({Scalar(5)})) == CanonicalAutomorphism::torus({Scalar(1, 5)}));
    CHECK(hat_star(CanonicalAutomorphism::identity(2)) == CanonicalAutomorphism::identity(2));
    Rng rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        const auto sigma = random_automorphism(rng, 1 + static_cast<std::size_t>(trial % 2), 3, 3);
        const auto hat = hat_star(sigma);
        REQUIRE(hat_star(hat) == sigma);
        const auto a = random_element(rng, sigma.dim(), {});
        REQUIRE(apply_aut(hat, a) == involution(apply_aut(sigma, involution(a))));
    }
}

TEST_CASE("one-variable generators")
{
    CHECK(g1_generator(G1Kind::transvection, {.lambda = 1, .i = 0, .j = 1}) == omega(one() + E(0, 1)));
    CHECK(g1_generator(G1Kind::torus, {.lambda = 3}) == CanonicalAutomorphism::torus({Scalar(3)}));
    CHECK(error_of([] { g1_generator(G1Kind::dilation, {.mu = -1}); }) == ErrorCode::BadParameter);
    CHECK(error_of([] { g1_generator(G1Kind::torus, {.lambda = 0}); }) == ErrorCode::BadParameter);
    CHECK(error_of([] { g1_generator(G1Kind::transvection, {.lambda = 1, .i = 2, .j = 2}); }) == ErrorCode::BadParameter);
    const auto dil = g1_generator(G1Kind::dilation, {.mu = Scalar(2, 3)});
    CHECK(dil.phi.phi() == one() + E(1, 1) * Scalar(2, 3));
    CHECK(multiply(dil.phi.phi(), dil.phi.inverse()) == one());
}

TEST_CASE("inner units are validated")
{
    CHECK(error_of([] { InnerUnit(one() + E(0, 0), one()); }) == ErrorCode::InvalidAutomorphism);
    CHECK(error_of([] { InnerUnit(AlgebraElement::constant(1, 2), AlgebraElement::constant(1, Scalar(1, 2))); }) ==
          ErrorCode::InvalidAutomorphism);
    CHECK(error_of([] { CanonicalAutomorphism::torus({Scalar(0)}); }) == ErrorCode::InvalidAutomorphism);
}

TEST_CASE("rigidity samples")
{
    Rng rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
        const auto sigma = random_automorphism(rng, n, 3, 3), tau = random_automorphism(rng, n, 3, 3);
        const bool same_d = images_of(sigma).d == images_of(tau).d;
        REQUIRE(same_d == (sigma == tau));
    }
}

TEST_CASE("torus elements fix every H; sampled inner units do not")
{
    Rng rng(89);
    const auto t = CanonicalAutomorphism::torus(random_torus(rng, 2));
    CHECK(images_of(t).h == identity_images(2).h);
    int moved = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto u = random_inner_unit(rng, 2, 3, 3);
        if (u.is_identity())
            continue;
        moved += images_of(CanonicalAutomorphism::inner(u)).h != identity_images(2).h ? 1 : 0;
    }
    CHECK(moved > 0);
}

TEST_CASE("centre spot check")
{
    Rng rng(97);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sigma = random_automorphism(rng, 2, 2, 3);
        if (sigma == CanonicalAutomorphism::identity(2))
            continue;
        bool separated = false;
        for (std::int64_t a = 0; a < 3 && !separated; ++a)
            for (std::int64_t b = 0; b < 3 && !separated; ++b) {
                const std::vector<std::int64_t> alpha{a, b}, beta{b, a + 1};
                const auto w = CanonicalAutomorphism::inner(InnerUnit::from_finite_unit(one(2) + matrix_unit(alpha, beta)));
                separated = compose(sigma, w) != compose(w, sigma);
            }
        CHECK(separated);
    }
}

TEST_CASE("the maximal ideal is fixed by recognized automorphisms")
{
    Rng rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sigma = recognize(images_of(random_automorphism(rng, 2, 3, 3)));
        for (std::int64_t r = 0; r < 3; ++r)
            CHECK(is_in_ideal(apply_aut(sigma, multiply(E(r, 1, 1, 2), D(2, 2))), maximal_ideal(2)));
    }
}

TEST_CASE("documents round trip")
{
    Rng rng(103);
    const auto sigma = random_automorphism(rng, 2);
    CHECK(automorphism_from_json(to_json(sigma)) == sigma);
    const auto images = images_of(sigma);
    CHECK(images_from_json(to_json(images)) == images);
    CHECK(automorphism_from_json(R"({"n": 1, "perm": [1], "lambda": ["2"], "phi": "1 + e1[0,0]"})") ==
          compose(CanonicalAutomorphism::torus({Scalar(2)}), omega(one() + E(0, 0))));
    CHECK(error_of([] { automorphism_from_json("{\"n\": 1, \"perm\": [1, 1]}"); }) != ErrorCode::SyntaxError);
    CHECK(error_of([] { images_from_json("{\"n\": 1}"); }) == ErrorCode::BadDocument);
    CHECK(error_of([] { images_from_json("not json"); }) == ErrorCode::BadDocument);
}

}
