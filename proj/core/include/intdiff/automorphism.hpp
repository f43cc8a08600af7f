#ifndef INTDIFF_AUTOMORPHISM_HPP
#define INTDIFF_AUTOMORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "intdiff/element.hpp"
#include "intdiff/permutation.hpp"
#include "intdiff/quotient.hpp"

namespace intdiff {

/// Nonzero scaling factors, one per slot.
using TorusVector = std::vector<Scalar>;

/// A unit congruent to 1 modulo the maximal ideal, stored with its inverse.
/// Construction verifies phi * inverse = 1 = inverse * phi and that phi - 1 lies
/// in the maximal ideal.
class InnerUnit {
public:
    InnerUnit(AlgebraElement phi, AlgebraElement inverse);

    static InnerUnit identity(std::size_t n);
    /// Inverts a unit of the form 1 + f with f in F_n.
    static InnerUnit from_finite_unit(const AlgebraElement& phi);

    std::size_t dim() const noexcept { return phi_.dim(); }
    const AlgebraElement& phi() const noexcept { return phi_; }
    const AlgebraElement& inverse() const noexcept { return inverse_; }
    bool is_identity() const;

    /// phi determines the inverse, so equality compares phi alone.
    bool operator==(const InnerUnit& o) const { return phi_ == o.phi_; }

private:
    AlgebraElement phi_;
    AlgebraElement inverse_;
};

/// sigma = s ∘ t_lambda ∘ omega_phi, where s permutes slots (slot i goes to s(i)),
/// t_lambda scales integration in slot i by lambda_i, and omega_phi is
/// conjugation a ↦ phi a phi^{-1}.
struct CanonicalAutomorphism {
    Permutation s;
    TorusVector lambda;
    InnerUnit phi;

    CanonicalAutomorphism(Permutation s, TorusVector lambda, InnerUnit phi);

    static CanonicalAutomorphism identity(std::size_t n);
    static CanonicalAutomorphism torus(TorusVector lambda);
    static CanonicalAutomorphism permutation(Permutation s);
    static CanonicalAutomorphism inner(InnerUnit phi);

    std::size_t dim() const noexcept { return lambda.size(); }
    bool operator==(const CanonicalAutomorphism& o) const = default;
};

/// Images of the derivations, integrations and Euler operators, indexed by slot.
struct GeneratorImages {
    std::vector<AlgebraElement> d;
    std::vector<AlgebraElement> i;
    std::vector<AlgebraElement> h;

    std::size_t dim() const noexcept { return d.size(); }
    bool operator==(const GeneratorImages& o) const = default;
};

AlgebraElement perm_action(const Permutation& s, const AlgebraElement& a);
AlgebraElement torus_action(const TorusVector& lambda, const AlgebraElement& a);
AlgebraElement inner_action(const InnerUnit& phi, const AlgebraElement& a);
AlgebraElement apply_aut(const CanonicalAutomorphism& sigma, const AlgebraElement& a);

GeneratorImages identity_images(std::size_t n);
GeneratorImages images_of(const CanonicalAutomorphism& sigma);

/// The algebra endomorphism determined by the images of the generators, applied
/// to arbitrary elements. Powers of the images are cached, so one instance should
/// be reused for many applications.
class ImageHomomorphism {
public:
    explicit ImageHomomorphism(GeneratorImages images);

    std::size_t dim() const noexcept { return images_.dim(); }
    AlgebraElement operator()(const AlgebraElement& a);

private:
    const AlgebraElement& cached_power(std::vector<std::vector<AlgebraElement>>& cache,
                                       const std::vector<AlgebraElement>& base, std::size_t slot,
                                       std::int64_t k);
    AlgebraElement slot_image(std::size_t slot, const FactorMonomial& f);

    GeneratorImages images_;
    std::vector<std::vector<AlgebraElement>> d_pow_, i_pow_, h_pow_;
};

/// p(I, d) q(CI, d) where p(i, d) = sum_{j<d} e_jj(i) and q = 1 - p; bit k of
/// `subset` is slot k+1.
AlgebraElement idempotent_pq(std::uint32_t subset, std::int64_t d, std::size_t n);

/// 1 + the largest Matrix index in any difference g(x) - x over the generators;
/// 1 when every difference vanishes.
std::int64_t conjugator_bandwidth(const GeneratorImages& images);

/// The unit phi with phi a phi^{-1} = sigma(a) for an automorphism sigma whose
/// images agree with the generators modulo the maximal ideal; NotInKernelXi otherwise.
AlgebraElement conjugator_from_inner(const GeneratorImages& images);
AlgebraElement conjugator_inverse_from_inner(const GeneratorImages& images);

/// Validates the images and returns the canonical form. Residues are checked
/// first (BadResidue), then the defining relations (RelationViolation), then the
/// reconstructed automorphism must reproduce every image (ConjugatorMismatch).
CanonicalAutomorphism recognize(const GeneratorImages& images);

/// Throws RelationViolation when the images break a defining relation.
void check_relations(const GeneratorImages& images);

bool is_inner(const GeneratorImages& images);

/// sigma1 after sigma2.
CanonicalAutomorphism compose(const CanonicalAutomorphism& sigma1, const CanonicalAutomorphism& sigma2);
CanonicalAutomorphism invert(const CanonicalAutomorphism& sigma);

/// * ∘ sigma ∘ *.
CanonicalAutomorphism hat_star(const CanonicalAutomorphism& sigma);

enum class G1Kind { torus, transvection, dilation };

struct G1Params {
    Scalar lambda{1};
    std::int64_t i = 0;
    std::int64_t j = 1;
    Scalar mu{1};
};

/// Generators of the one-variable group: t_lambda, omega_{1 + lambda e_ij} with
/// i != j, and omega_{1 + mu e_11} with mu != -1.
CanonicalAutomorphism g1_generator(G1Kind kind, const G1Params& params);

/// (permutation matrix of s, lambda, 0).
BAutomorphism xi_image(const CanonicalAutomorphism& sigma);

std::string to_json(const CanonicalAutomorphism& sigma);
CanonicalAutomorphism automorphism_from_json(const std::string& text);

std::string to_json(const GeneratorImages& images);
GeneratorImages images_from_json(const std::string& text);

}  // namespace intdiff

#endif
