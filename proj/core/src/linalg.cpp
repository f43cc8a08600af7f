#include "intdiff/linalg.hpp"

#include <utility>

namespace intdiff {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix r(a.size);
    for (std::size_t i = 0; i < a.size; ++i)
        for (std::size_t k = 0; k < a.size; ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < a.size; ++j)
                r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

std::optional<RationalMatrix> inverse(RationalMatrix m)
{
    const std::size_t n = m.size;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        Scalar scale = 1 / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0)
                continue;
            Scalar f = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace intdiff
