#include "intdiff/permutation.hpp"

#include <numeric>

#include "intdiff/error.hpp"

namespace intdiff {

Permutation::Permutation(std::size_t n) : images_(n)
{
    std::iota(images_.begin(), images_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<std::size_t> zero_based) : images_(std::move(zero_based))
{
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v])
            throw AlgebraError(ErrorCode::BadParameter, "not a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::from_one_line(const std::vector<std::size_t>& one_based)
{
    std::vector<std::size_t> z;
    z.reserve(one_based.size());
    for (std::size_t v : one_based) {
        if (v == 0)
            throw AlgebraError(ErrorCode::BadParameter, "permutation entries are 1-based");
        z.push_back(v - 1);
    }
    return Permutation(std::move(z));
}

std::vector<std::size_t> Permutation::one_line() const
{
    std::vector<std::size_t> r(images_);
    for (auto& v : r)
        ++v;
    return r;
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& other) const
{
    if (other.size() != size())
        throw AlgebraError(ErrorCode::DimensionMismatch, "permutations of different degree");
    std::vector<std::size_t> r(size());
    for (std::size_t i = 0; i < size(); ++i)
        r[i] = images_[other.images_[i]];
    return Permutation(std::move(r));
}

std::uint32_t Permutation::apply_to_subset(std::uint32_t mask) const noexcept
{
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (mask & (1U << i))
            out |= 1U << images_[i];
    return out;
}

std::string to_string(const Permutation& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != 0)
            s += ' ';
        s += std::to_string(p(i) + 1);
    }
    return s + "]";
}

}  // namespace intdiff
