#ifndef INTDIFF_MONOMIAL_HPP
#define INTDIFF_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace intdiff {

/// One tensor slot of a canonical basis monomial of the one-variable algebra.
///
/// Band{h, shift} stands for H^h * v_shift, where v_a is the a-th power of the
/// integration operator for a > 0, the (-a)-th power of the derivation for
/// a < 0, and 1 for a = 0. Matrix{row, col} stands for the matrix unit e_{row,col}.
/// The tag is the first ordering key, so all Band factors sort before Matrix ones.
struct FactorMonomial {
    enum class Kind : std::uint8_t { band = 0, matrix = 1 };

    Kind kind = Kind::band;
    std::int64_t first = 0;   // H-power for band, row for matrix
    std::int64_t second = 0;  // shift for band, column for matrix

    static constexpr FactorMonomial band(std::int64_t h_pow, std::int64_t shift) noexcept
    {
        return {Kind::band, h_pow, shift};
    }
    static constexpr FactorMonomial matrix(std::int64_t row, std::int64_t col) noexcept
    {
        return {Kind::matrix, row, col};
    }
    static constexpr FactorMonomial one() noexcept { return band(0, 0); }

    bool is_band() const noexcept { return kind == Kind::band; }
    bool is_matrix() const noexcept { return kind == Kind::matrix; }
    bool is_one() const noexcept { return is_band() && first == 0 && second == 0; }

    std::int64_t h_pow() const noexcept { return first; }
    std::int64_t shift() const noexcept { return second; }
    std::int64_t row() const noexcept { return first; }
    std::int64_t col() const noexcept { return second; }

    /// Z-degree of the factor: shift for bands, row - col for matrix units.
    std::int64_t degree() const noexcept { return is_band() ? second : first - second; }

    auto operator<=>(const FactorMonomial&) const = default;
};

/// Tensor product of n slot factors.
using BasisMonomial = std::vector<FactorMonomial>;

BasisMonomial identity_monomial(std::size_t n);

bool is_identity(const BasisMonomial& m) noexcept;

/// Bitmask of the slots carrying a Matrix factor (bit i-1 for slot i).
std::uint32_t matrix_slots(const BasisMonomial& m) noexcept;

/// "H^2 I^3", "D", "1", "e[1,2]".
std::string to_string(const FactorMonomial& f);

/// Slot factors joined by the tensor sign.
std::string to_string(const BasisMonomial& m);

}  // namespace intdiff

#endif
