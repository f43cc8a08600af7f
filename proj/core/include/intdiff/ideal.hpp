#ifndef INTDIFF_IDEAL_HPP
#define INTDIFF_IDEAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "intdiff/permutation.hpp"

namespace intdiff {

/// Subset of {1..n} as a bitmask, bit i-1 standing for index i.
using Subset = std::uint32_t;

/// Maximum number of variables the lattice code accepts (bitmask width and S_n scans).
inline constexpr std::size_t max_lattice_dim = 16;

/// An ideal of the n-variable algebra, normalized to its minimal primes.
///
/// A proper ideal is the intersection (equivalently the product) of the primes
/// p_I for I in its antichain; p_I is spanned by the basis monomials carrying a
/// Matrix factor in at least one slot of I.
class IdealDescriptor {
public:
    enum class Kind { zero, whole, proper };

    static IdealDescriptor zero(std::size_t n);
    static IdealDescriptor whole(std::size_t n);
    /// Validates: nonempty list, nonempty in-range members, pairwise incomparable.
    static IdealDescriptor from_min_primes(std::size_t n, std::vector<Subset> antichain);
    /// Keeps only the inclusion-minimal members of an arbitrary family.
    static IdealDescriptor from_generators(std::size_t n, std::vector<Subset> family);

    Kind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return n_; }
    bool is_zero() const noexcept { return kind_ == Kind::zero; }
    bool is_whole() const noexcept { return kind_ == Kind::whole; }
    bool is_proper() const noexcept { return kind_ == Kind::proper; }

    /// Canonically ordered antichain; empty unless proper.
    const std::vector<Subset>& antichain() const noexcept { return min_; }

    bool operator==(const IdealDescriptor&) const = default;

private:
    IdealDescriptor(std::size_t n, Kind kind, std::vector<Subset> min);

    std::size_t n_ = 0;
    Kind kind_ = Kind::zero;
    std::vector<Subset> min_;
};

/// Ordering used for canonical antichains: by size, then lexicographic on elements.
bool subset_less(Subset a, Subset b) noexcept;

IdealDescriptor prime(Subset indices, std::size_t n);
IdealDescriptor prime(const std::vector<std::size_t>& one_based, std::size_t n);
/// The unique maximal ideal p_{1..n}.
IdealDescriptor maximal_ideal(std::size_t n);
/// The smallest nonzero ideal, the intersection of all height-one primes.
IdealDescriptor smallest_ideal(std::size_t n);

IdealDescriptor ideal_sum(const IdealDescriptor& a, const IdealDescriptor& b);
IdealDescriptor ideal_product(const IdealDescriptor& a, const IdealDescriptor& b);
IdealDescriptor ideal_intersect(const IdealDescriptor& a, const IdealDescriptor& b);

/// b ⊆ a.
bool contains(const IdealDescriptor& a, const IdealDescriptor& b);
bool equals(const IdealDescriptor& a, const IdealDescriptor& b);

const std::vector<Subset>& min_primes(const IdealDescriptor& a);
std::size_t height(const IdealDescriptor& prime_ideal);
bool is_prime(const IdealDescriptor& a);

/// Membership of a basis monomial whose Matrix slots are `matrix_mask`.
bool contains_monomial_pattern(const IdealDescriptor& a, Subset matrix_mask) noexcept;

/// 0/1-valued function on {1..n}, entry i-1 holding f(i).
using BoolFunction = std::vector<std::uint8_t>;

IdealDescriptor from_function_antichain(std::size_t n, const std::vector<BoolFunction>& functions);
/// The inverse of from_function_antichain.
std::vector<BoolFunction> to_function_antichain(const IdealDescriptor& a);

/// All ideals of the n-variable algebra in a fixed order: Zero, the proper ones, Whole.
std::vector<IdealDescriptor> enumerate_ideals(std::size_t n, bool parallel = false);
std::size_t count_ideals(std::size_t n, bool parallel = false);
inline constexpr std::size_t max_enumeration_dim = 5;

IdealDescriptor apply_permutation(const Permutation& s, const IdealDescriptor& a);

struct GenericStructure {
    std::size_t m = 0;
    /// (height h_i, multiplicity n_i) with h_1 < h_2 < ...
    std::vector<std::pair<std::size_t, std::size_t>> blocks;

    /// m! * prod (h_i!)^{n_i} * n_i!
    std::uint64_t stabilizer_order() const;
    bool operator==(const GenericStructure&) const = default;
};

struct StabilizerReport {
    std::vector<Permutation> permutations;
    std::uint64_t order = 0;
    std::uint64_t index = 0;
    std::optional<GenericStructure> generic;
};

StabilizerReport stabilizer(const IdealDescriptor& a);
bool is_generic(const IdealDescriptor& a);
GenericStructure generic_structure(const IdealDescriptor& a);

/// Zero, b_1, ..., b_n, Whole, where b_s has Min = all s-element subsets.
std::vector<IdealDescriptor> invariant_ideals(std::size_t n);

std::string subset_to_string(Subset s);
/// "0", "1", or "min{ {1}, {2,3} }".
std::string to_string(const IdealDescriptor& a);
IdealDescriptor parse_ideal(std::string_view text, std::size_t n);

std::uint64_t factorial(std::size_t k);

}  // namespace intdiff

#endif
