#include <algorithm>
#include <set>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace intdiff;
using namespace intdiff::testing;

namespace {

IdealDescriptor p(std::vector<std::size_t> indices, std::size_t n)
{
    return prime(indices, n);
}

IdealDescriptor random_ideal(Rng& rng, std::size_t n)
{
    const auto all = enumerate_ideals(n);
    return all[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(all.size()) - 1))];
}

}  // namespace

TEST_SUITE("ideal_lattice") {

TEST_CASE("primes")
{
    CHECK(p({1}, 2).antichain() == std::vector<Subset>{0b01});
    CHECK(p({1, 2}, 2) == maximal_ideal(2));
    CHECK(height(p({1, 2}, 2)) == 2);
    CHECK(error_of([] { prime(Subset{0}, 2); }) == ErrorCode::EmptySet);
    CHECK(error_of([] { prime(std::vector<std::size_t>{}, 2); }) == ErrorCode::EmptySet);
    CHECK(error_of([] { prime(std::vector<std::size_t>{3}, 2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("sum")
{
    const auto f2 = ideal_product(p({1}, 2), p({2}, 2));
    CHECK(ideal_sum(p({1}, 2), p({2}, 2)) == maximal_ideal(2));
    CHECK(ideal_sum(f2, p({1}, 2)) == p({1}, 2));
    CHECK(ideal_sum(f2, IdealDescriptor::zero(2)) == f2);
    CHECK(ideal_sum(f2, IdealDescriptor::whole(2)) == IdealDescriptor::whole(2));
}

TEST_CASE("product and intersection")
{
    const auto f2 = ideal_product(p({1}, 2), p({2}, 2));
    CHECK(f2.antichain() == std::vector<Subset>{0b01, 0b10});
    CHECK(f2 == smallest_ideal(2));
    CHECK(ideal_product(p({1}, 2), p({1, 2}, 2)) == p({1}, 2));
    CHECK(ideal_product(f2, IdealDescriptor::whole(2)) == f2);
    CHECK(ideal_product(f2, f2) == f2);
    CHECK(ideal_product(f2, IdealDescriptor::zero(2)) == IdealDescriptor::zero(2));
    Rng rng(107);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_ideal(rng, 3), b = random_ideal(rng, 3);
        REQUIRE(ideal_product(a, b) == ideal_intersect(a, b));
    }
}

TEST_CASE("containment")
{
    const auto f2 = smallest_ideal(2);
    CHECK(contains(p({1}, 2), f2));
    CHECK_FALSE(contains(p({2}, 2), p({1}, 2)));
    CHECK(contains(IdealDescriptor::whole(2), p({1}, 2)));
    CHECK(contains(p({1}, 2), IdealDescriptor::zero(2)));
    CHECK(equals(ideal_sum(p({1}, 3), p({2}, 3)), p({1, 2}, 3)));
    CHECK(error_of([] { contains(p({1}, 2), p({1}, 3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("minimal primes, height, primality")
{
    const auto f2 = smallest_ideal(2);
    CHECK(min_primes(f2) == std::vector<Subset>{0b01, 0b10});
    CHECK(is_prime(maximal_ideal(2)));
    CHECK(height(maximal_ideal(2)) == 2);
    CHECK_FALSE(is_prime(f2));
    CHECK_FALSE(is_prime(IdealDescriptor::whole(2)));
    CHECK(error_of([] { min_primes(IdealDescriptor::zero(2)); }) == ErrorCode::NotProper);
    CHECK(error_of([] { height(IdealDescriptor::whole(2)); }) == ErrorCode::NotProper);
}

TEST_CASE("descriptor validation")
{
    CHECK(error_of([] { IdealDescriptor::from_min_primes(3, {0b001, 0b011}); }) == ErrorCode::NotAntichain);
    CHECK(error_of([] { IdealDescriptor::from_min_primes(3, {}); }) == ErrorCode::NotAntichain);
    CHECK(error_of([] { IdealDescriptor::from_min_primes(3, {0}); }) == ErrorCode::EmptySet);
    CHECK(error_of([] { IdealDescriptor::from_min_primes(2, {0b100}); }) == ErrorCode::IndexOutOfRange);
    CHECK(IdealDescriptor::from_generators(3, {0b011, 0b001, 0b110}).antichain() == std::vector<Subset>{0b001, 0b110});
}

TEST_CASE("function antichains")
{
    CHECK(from_function_antichain(1, {{0}}) == p({1}, 1));
    CHECK(from_function_antichain(2, {}) == IdealDescriptor::zero(2));
    CHECK(from_function_antichain(2, {{1, 1}}) == IdealDescriptor::whole(2));
    CHECK(from_function_antichain(2, {{0, 1}, {1, 0}}) == maximal_ideal(2));
    CHECK(error_of([] { from_function_antichain(2, {{0, 0}, {0, 1}}); }) == ErrorCode::NotAntichain);
    CHECK(error_of([] { from_function_antichain(2, {{0, 2}}); }) == ErrorCode::BadParameter);
    for (std::size_t n = 1; n <= 4; ++n) {
        std::set<std::string> seen;
        for (const auto& a : enumerate_ideals(n)) {
            REQUIRE(from_function_antichain(n, to_function_antichain(a)) == a);
            seen.insert(to_string(a));
        }
        REQUIRE(seen.size() == enumerate_ideals(n).size());
    }
}

TEST_CASE("enumeration")
{
    CHECK(count_ideals(1) == 3);
    CHECK(count_ideals(2) == 6);
    CHECK(count_ideals(3) == 20);
    CHECK(count_ideals(4) == 168);
    for (std::size_t n = 1; n <= 4; ++n)
        CHECK(count_ideals(n) == brute_force_ideal_count(n));
    const auto one = enumerate_ideals(1);
    CHECK(one.front() == IdealDescriptor::zero(1));
    CHECK(one[1] == p({1}, 1));
    CHECK(one.back() == IdealDescriptor::whole(1));
    CHECK(enumerate_ideals(4, true) == enumerate_ideals(4, false));
    CHECK(count_ideals(5, true) == 7581);
    CHECK(error_of([] { enumerate_ideals(6); }) == ErrorCode::TooLarge);
}

TEST_CASE("prime count")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto all = enumerate_ideals(n);
        // the whole algebra is not prime; the zero ideal is
        const auto nonzero_primes = std::count_if(all.begin(), all.end(), [](const auto& a) { return is_prime(a); });
        CHECK(static_cast<std::size_t>(nonzero_primes) + 1 == (std::size_t{1} << n));
    }
}

TEST_CASE("stabilizers")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto report = stabilizer(p({1}, n));
        CHECK(report.index == n);
        CHECK(report.order == factorial(n - 1));
        CHECK(report.permutations.size() == report.order);
    }
    CHECK(stabilizer(maximal_ideal(3)).index == 1);
    CHECK(stabilizer(smallest_ideal(3)).index == 1);
    CHECK(error_of([] { stabilizer(IdealDescriptor::zero(2)); }) == ErrorCode::NotProper);
    CHECK(error_of([] { stabilizer(IdealDescriptor::whole(2)); }) == ErrorCode::NotProper);
}

TEST_CASE("generic ideals")
{
    const auto a = ideal_product(p({1}, 3), p({2}, 3));
    REQUIRE(is_generic(a));
    const GenericStructure s{1, {{1, 2}}};
    CHECK(generic_structure(a) == s);
    CHECK(s.stabilizer_order() == 2);
    CHECK(stabilizer(a).order == 2);
    CHECK_FALSE(is_generic(ideal_product(p({1, 2}, 3), p({1, 3}, 3))));
    CHECK(stabilizer(ideal_product(p({1, 2}, 3), p({1, 3}, 3))).generic == std::nullopt);
    const auto b = maximal_ideal(2);
    CHECK(generic_structure(b) == GenericStructure{0, {{2, 1}}});
    CHECK(stabilizer(b).order == 2);
    CHECK(error_of([] { generic_structure(ideal_product(p({1, 2}, 3), p({1, 3}, 3))); }) == ErrorCode::BadParameter);
    CHECK(error_of([] { is_generic(IdealDescriptor::zero(2)); }) == ErrorCode::NotProper);
}

TEST_CASE("generic stabilizer orders match the wreath formula")
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& a : enumerate_ideals(n)) {
            if (!a.is_proper() || !is_generic(a))
                continue;
            REQUIRE(stabilizer(a).order == generic_structure(a).stabilizer_order());
        }
}

TEST_CASE("invariant ideals")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto inv = invariant_ideals(n);
        CHECK(inv.size() == n + 2);
        std::size_t scanned = 0;
        for (const auto& a : enumerate_ideals(n))
            scanned += (!a.is_proper() || stabilizer(a).index == 1) ? 1 : 0;
        CHECK(scanned == n + 2);
    }
    const auto two = invariant_ideals(2);
    CHECK(two[1] == smallest_ideal(2));
    CHECK(two[2] == maximal_ideal(2));
}

TEST_CASE("lattice laws")
{
    Rng rng(109);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_ideal(rng, 3), b = random_ideal(rng, 3), c = random_ideal(rng, 3);
        REQUIRE(ideal_sum(a, b) == ideal_sum(b, a));
        REQUIRE(ideal_product(a, b) == ideal_product(b, a));
        REQUIRE(ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c)));
        REQUIRE(ideal_product(ideal_product(a, b), c) == ideal_product(a, ideal_product(b, c)));
        REQUIRE(ideal_sum(a, ideal_product(a, b)) == a);
        REQUIRE(ideal_product(a, ideal_sum(a, b)) == a);
        REQUIRE(ideal_product(a, ideal_sum(b, c)) == ideal_sum(ideal_product(a, b), ideal_product(a, c)));
        REQUIRE(contains(ideal_sum(a, b), a));
        REQUIRE(contains(a, ideal_product(a, b)));
    }
}

TEST_CASE("element membership agrees with the descriptors")
{
    Rng rng(113);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        const auto a = random_ideal(rng, n), b = random_ideal(rng, n);
        const auto x = random_element(rng, n, {});
        const bool in_a = is_in_ideal(x, a), in_b = is_in_ideal(x, b);
        REQUIRE(is_in_ideal(x, ideal_intersect(a, b)) == (in_a && in_b));
        if (in_a || in_b)
            REQUIRE(is_in_ideal(x, ideal_sum(a, b)));
        REQUIRE(is_in_ideal(x, generated_ideal(x)));
        REQUIRE(in_a == contains(a, generated_ideal(x)));
    }
    CHECK(generated_ideal(E(0, 0, 1, 2)) == p({1}, 2));
    CHECK(generated_ideal(multiply(E(0, 0, 1, 2), E(1, 1, 2, 2))) == smallest_ideal(2));
    CHECK(generated_ideal(E(0, 0, 1, 2) + E(1, 1, 2, 2)) == maximal_ideal(2));
    CHECK(generated_ideal(one(2)) == IdealDescriptor::whole(2));
    CHECK(generated_ideal(AlgebraElement::zero(2)) == IdealDescriptor::zero(2));
}

TEST_CASE("unique factorization into minimal primes")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& a : enumerate_ideals(n)) {
            if (!a.is_proper())
                continue;
            IdealDescriptor prod = IdealDescriptor::whole(n), meet = IdealDescriptor::whole(n);
            for (Subset s : min_primes(a)) {
                prod = ideal_product(prod, prime(s, n));
                meet = ideal_intersect(meet, prime(s, n));
            }
            REQUIRE(prod == a);
            REQUIRE(meet == a);
        }
}

TEST_CASE("orbit-stabilizer")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& a : enumerate_ideals(n)) {
            if (!a.is_proper())
                continue;
            const auto report = stabilizer(a);
            REQUIRE(report.index == brute_force_orbit_size(n, a.antichain()));
            REQUIRE(report.order == brute_force_stabilizer_order(n, a.antichain()));
            REQUIRE(report.order * report.index == factorial(n));
            for (const auto& s : report.permutations)
                REQUIRE(apply_permutation(s, a) == a);
        }
}

TEST_CASE("text form")
{
    CHECK(to_string(IdealDescriptor::zero(2)) == "0");
    CHECK(to_string(IdealDescriptor::whole(2)) == "1");
    const auto a = ideal_product(p({1}, 3), p({2, 3}, 3));
    CHECK(to_string(a) == "min{ {1}, {2,3} }");
    CHECK(parse_ideal(to_string(a), 3) == a);
    CHECK(parse_ideal("min{{2,3},{1}}", 3) == a);
    CHECK(parse_ideal("0", 3) == IdealDescriptor::zero(3));
    CHECK(error_of([] { parse_ideal("min{ {1} ", 3); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_ideal("min{ {4} }", 3); }) == ErrorCode::IndexOutOfRange);
    for (const auto& b : enumerate_ideals(3))
        REQUIRE(parse_ideal(to_string(b), 3) == b);
}

}
