#include "intdiff/finite_unit.hpp"

#include <map>

#include "intdiff/error.hpp"
#include "intdiff/linalg.hpp"

namespace intdiff {

namespace {

bool all_matrix(const BasisMonomial& m)
{
    for (const auto& f : m)
        if (!f.is_matrix())
            return false;
    return true;
}

}  // namespace

bool is_finite_unit_shape(const AlgebraElement& a)
{
    const BasisMonomial one = identity_monomial(a.dim());
    if (a.coefficient(one) == 0)
        return false;
    for (const auto& [m, c] : a.terms())
        if (m != one && !all_matrix(m))
            return false;
    return true;
}

AlgebraElement try_invert_finite_unit(const AlgebraElement& a)
{
    if (!is_finite_unit_shape(a))
        throw AlgebraError(ErrorCode::NotFiniteUnitShape, to_string(a));
    const std::size_t n = a.dim();
    const BasisMonomial one = identity_monomial(n);
    const Scalar c = a.coefficient(one);

    using MultiIndex = std::vector<std::int64_t>;
    std::map<MultiIndex, std::size_t> support;
    auto row_of = [n](const BasisMonomial& m) {
        MultiIndex r(n);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = m[i].row();
        return r;
    };
    auto col_of = [n](const BasisMonomial& m) {
        MultiIndex r(n);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = m[i].col();
        return r;
    };
    for (const auto& [m, coef] : a.terms()) {
        if (m == one)
            continue;
        support.try_emplace(row_of(m), 0);
        support.try_emplace(col_of(m), 0);
    }
    std::vector<MultiIndex> basis;
    for (auto& [idx, pos] : support) {
        pos = basis.size();
        basis.push_back(idx);
    }

    RationalMatrix block = RationalMatrix::identity(basis.size());
    for (const auto& [m, coef] : a.terms())
        if (m != one)
            block(support[row_of(m)], support[col_of(m)]) += coef / c;
    auto inv = inverse(block);
    if (!inv)
        throw AlgebraError(ErrorCode::SingularBlock, to_string(a));

    AlgebraElement result = AlgebraElement::one(n);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Scalar v = (*inv)(r, k) - (r == k ? Scalar(1) : Scalar(0));
            if (v != 0)
                result += matrix_unit(basis[r], basis[k]) * v;
        }
    result *= Scalar(1 / c);
    return result;
}

}  // namespace intdiff
