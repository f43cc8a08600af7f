#ifndef INTDIFF_TESTS_HELPERS_HPP
#define INTDIFF_TESTS_HELPERS_HPP

#include <doctest.h>

#include <intdiff/intdiff.hpp>

namespace intdiff {

inline doctest::String toString(const AlgebraElement& a)
{
    return to_string(a).c_str();
}

inline doctest::String toString(const IdealDescriptor& a)
{
    return to_string(a).c_str();
}

inline doctest::String toString(const DividedPolynomial& p)
{
    return to_string(p).c_str();
}

inline doctest::String toString(const BElement& u)
{
    return to_string(u).c_str();
}

inline doctest::String toString(const Scalar& s)
{
    return to_string(s).c_str();
}

}  // namespace intdiff

namespace intdiff::testing {

inline AlgebraElement D(std::size_t slot = 1, std::size_t n = 1)
{
    return generator(GeneratorKind::deriv, slot, n);
}

inline AlgebraElement I(std::size_t slot = 1, std::size_t n = 1)
{
    return generator(GeneratorKind::integ, slot, n);
}

inline AlgebraElement H(std::size_t slot = 1, std::size_t n = 1)
{
    return generator(GeneratorKind::euler, slot, n);
}

inline AlgebraElement E(std::int64_t r, std::int64_t c, std::size_t slot = 1, std::size_t n = 1)
{
    return matrix_unit(slot, r, c, n);
}

inline AlgebraElement one(std::size_t n = 1)
{
    return AlgebraElement::one(n);
}

inline AlgebraElement el(std::string_view text, std::size_t n = 1)
{
    return parse_element(text, n);
}

template <typename F>
ErrorCode error_of(F&& f)
{
    try {
        f();
    } catch (const AlgebraError& e) {
        return e.code();
    }
    FAIL("no AlgebraError raised");
    return ErrorCode::BadDocument;
}

}  // namespace intdiff::testing

#endif
