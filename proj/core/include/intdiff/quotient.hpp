#ifndef INTDIFF_QUOTIENT_HPP
#define INTDIFF_QUOTIENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "intdiff/element.hpp"
#include "intdiff/laurent.hpp"

namespace intdiff {

/// Element of the skew Laurent ring B_n = K[H_1..H_n][z_1^±1..z_n^±1] with
/// z_i H_j = (H_j - δ_ij) z_i, written sum c_beta(H) z^beta with H on the left.
/// z_i is the image of the i-th integration.
class BElement {
public:
    using TermMap = std::map<Exponent, LaurentPolynomial>;

    explicit BElement(std::size_t n = 1);
    BElement(std::size_t n, TermMap terms);

    static BElement constant(std::size_t n, const Scalar& c);
    static BElement euler(std::size_t i, std::size_t n);
    static BElement z_power(std::size_t i, std::int64_t e, std::size_t n);
    static BElement term(LaurentPolynomial h_coef, Exponent z_exp);

    std::size_t dim() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponent& z_exp, const LaurentPolynomial& h_coef);

    BElement& operator+=(const BElement& o);
    BElement& operator-=(const BElement& o);
    BElement& operator*=(const Scalar& c);
    friend BElement operator+(BElement a, const BElement& b) { return a += b; }
    friend BElement operator-(BElement a, const BElement& b) { return a -= b; }
    friend BElement operator*(BElement a, const Scalar& c) { return a *= c; }

    bool operator==(const BElement&) const = default;

private:
    std::size_t n_;
    TermMap terms_;
};

BElement b_multiply(const BElement& u, const BElement& v);
BElement b_power(const BElement& u, std::int64_t k);

/// Image in the quotient by the maximal ideal: monomials with a Matrix slot die,
/// Band{b, a} in slot i maps to H_i^b z_i^a.
BElement quotient_image(const AlgebraElement& a);

/// Largest z-exponent of a nonzero one-variable element.
std::int64_t top_degree(const BElement& u);

/// Fredholm index on K[x] for n = 1: minus the top z-degree of the quotient image.
/// Throws NotFredholm for elements of the smallest ideal.
std::int64_t fredholm_index(const AlgebraElement& a);

/// "(c(H)) * z1^b1 z2^b2" terms joined by " + ".
std::string to_string(const BElement& u);

using LnVector = std::vector<LaurentPolynomial>;

/// z_i dp_j/dz_i = z_j dp_i/dz_j for all i != j.
bool ln_prime_check(const LnVector& p);

/// The basis vector b_alpha of the compatible-shift space for alpha != 0.
LnVector ln_prime_basis_vector(const Exponent& alpha);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Automorphism a·t_λ·s_p of B_n acting by z_i ↦ λ_i ∏ z_j^{a_ij},
/// H_i ↦ Σ_j H_j b_ji + a t_λ(p_i) where b = a^{-1}.
class BAutomorphism {
public:
    BAutomorphism(IntMatrix a, std::vector<Scalar> lambda, LnVector p);

    static BAutomorphism identity(std::size_t n);
    static BAutomorphism torus(std::vector<Scalar> lambda);
    static BAutomorphism shift(LnVector p);
    static BAutomorphism linear(IntMatrix a);

    std::size_t dim() const noexcept { return a_.size(); }
    const IntMatrix& matrix() const noexcept { return a_; }
    const IntMatrix& inverse_matrix() const noexcept { return b_; }
    const std::vector<Scalar>& lambda() const noexcept { return lambda_; }
    const LnVector& shifts() const noexcept { return p_; }

    /// Image of z^gamma under the monomial map z_k ↦ λ_k z^{a_k}, and its inverse.
    LaurentPolynomial monomial_map(const LaurentPolynomial& q) const;
    LaurentPolynomial monomial_map_inverse(const LaurentPolynomial& q) const;

    BElement image_of_z(std::size_t i, std::int64_t e = 1) const;
    BElement image_of_h(std::size_t i) const;

    bool operator==(const BAutomorphism& o) const;

private:
    IntMatrix a_;
    IntMatrix b_;
    std::vector<Scalar> lambda_;
    LnVector p_;
};

BElement b_aut_apply(const BAutomorphism& g, const BElement& u);
/// g after h.
BAutomorphism b_aut_compose(const BAutomorphism& g, const BAutomorphism& h);
BAutomorphism b_aut_inverse(const BAutomorphism& g);

/// Reads the canonical triple off the images of z_1..z_n and H_1..H_n.
BAutomorphism b_aut_from_images(const std::vector<BElement>& z_images, const std::vector<BElement>& h_images);

/// The {matrix, lambda, p} document.
std::string to_json(const BAutomorphism& g);
BAutomorphism b_aut_from_json(const std::string& text);

}  // namespace intdiff

#endif
