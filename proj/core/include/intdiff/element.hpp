#ifndef INTDIFF_ELEMENT_HPP
#define INTDIFF_ELEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "intdiff/monomial.hpp"
#include "intdiff/scalar.hpp"

namespace intdiff {

/// A finite exact-rational combination of canonical basis monomials of the
/// n-variable integro-differential algebra. Zero coefficients are never stored,
/// and the std::map ordering of monomials is the canonical print order.
class AlgebraElement {
public:
    using TermMap = std::map<BasisMonomial, Scalar>;

    explicit AlgebraElement(std::size_t n = 1);
    AlgebraElement(std::size_t n, TermMap terms);

    static AlgebraElement zero(std::size_t n) { return AlgebraElement(n); }
    static AlgebraElement one(std::size_t n);
    static AlgebraElement constant(std::size_t n, const Scalar& c);
    static AlgebraElement monomial(BasisMonomial m, const Scalar& c = Scalar(1));

    std::size_t dim() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coefficient(const BasisMonomial& m) const;

    /// Adds c*m in place, erasing the entry if it cancels.
    void add_term(const BasisMonomial& m, const Scalar& c);

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Scalar& c);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Scalar& c) { return a *= c; }
    friend AlgebraElement operator*(const Scalar& c, AlgebraElement a) { return a *= c; }
    AlgebraElement operator-() const;

    bool operator==(const AlgebraElement& other) const = default;

private:
    std::size_t n_;
    TermMap terms_;
};

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

enum class GeneratorKind { deriv, integ, euler, coord };

/// The generator of the given kind in slot `slot` (1-based) of the n-variable algebra.
AlgebraElement generator(GeneratorKind kind, std::size_t slot, std::size_t n);

/// e_{row,col} placed in slot `slot` (1-based), identity elsewhere.
AlgebraElement matrix_unit(std::size_t slot, std::int64_t row, std::int64_t col, std::size_t n);

/// e_{alpha,beta} = product over all slots of e_{alpha_i,beta_i}(i).
AlgebraElement matrix_unit(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta);

AlgebraElement linear_combine(std::span<const Scalar> coeffs, std::span<const AlgebraElement> elems);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement power(const AlgebraElement& a, std::uint32_t k);

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b)
{
    return multiply(a, b) - multiply(b, a);
}

/// The anti-automorphism exchanging derivation and integration in every slot.
AlgebraElement involution(const AlgebraElement& a);

using GradedDegree = std::vector<std::int64_t>;

std::map<GradedDegree, AlgebraElement> graded_components(const AlgebraElement& a);

/// Canonical text: "c * f1⊗f2⊗…" terms joined by " + "; "0" for zero.
std::string to_string(const AlgebraElement& a);

/// Largest row/column index over all Matrix factors of all monomials, or -1.
std::int64_t max_matrix_index(const AlgebraElement& a);

namespace detail {

using SlotTerms = std::vector<std::pair<Integer, FactorMonomial>>;

/// Product of two slot factors of the one-variable algebra rewritten in the canonical basis.
void multiply_factors(const FactorMonomial& x, const FactorMonomial& y, SlotTerms& out);

/// Image of one slot factor under the involution.
void involute_factor(const FactorMonomial& x, SlotTerms& out);

/// Expands the tensor product of per-slot term lists into `acc` with overall coefficient `c`.
void accumulate_tensor(const std::vector<SlotTerms>& slots, const Scalar& c, AlgebraElement& acc);

}  // namespace detail

}  // namespace intdiff

#endif
