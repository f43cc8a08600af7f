#ifndef INTDIFF_PERMUTATION_HPP
#define INTDIFF_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace intdiff {

/// A bijection of {1..n}, stored 0-based.
class Permutation {
public:
    explicit Permutation(std::size_t n = 0);
    explicit Permutation(std::vector<std::size_t> zero_based);

    static Permutation identity(std::size_t n) { return Permutation(n); }
    /// From one-line notation with entries in 1..n.
    static Permutation from_one_line(const std::vector<std::size_t>& one_based);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_.at(i); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    std::vector<std::size_t> one_line() const;

    bool is_identity() const noexcept;
    Permutation inverse() const;
    /// (*this) after `other`.
    Permutation after(const Permutation& other) const;

    /// Image of a slot subset given as a bitmask.
    std::uint32_t apply_to_subset(std::uint32_t mask) const noexcept;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<std::size_t> images_;
};

/// One-line notation, e.g. "[2 1 3]".
std::string to_string(const Permutation& p);

}  // namespace intdiff

#endif
