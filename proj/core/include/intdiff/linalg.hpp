#ifndef INTDIFF_LINALG_HPP
#define INTDIFF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "intdiff/scalar.hpp"

namespace intdiff {

/// Dense square rational matrix, row-major.
struct RationalMatrix {
    std::size_t size = 0;
    std::vector<Scalar> entries;

    explicit RationalMatrix(std::size_t n = 0) : size(n), entries(n * n) {}
    static RationalMatrix identity(std::size_t n);

    Scalar& operator()(std::size_t r, std::size_t c) { return entries[r * size + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries[r * size + c]; }

    bool operator==(const RationalMatrix&) const = default;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Gauss-Jordan over the rationals; nullopt when singular.
std::optional<RationalMatrix> inverse(RationalMatrix m);

}  // namespace intdiff

#endif
