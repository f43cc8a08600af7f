#include "intdiff/automorphism.hpp"

#include <json.hpp>

#include "intdiff/error.hpp"
#include "intdiff/finite_unit.hpp"
#include "intdiff/parse.hpp"

namespace intdiff {

namespace {

bool in_maximal_ideal(const AlgebraElement& a)
{
    return quotient_image(a).is_zero();
}

void require_dim(std::size_t expected, std::size_t actual)
{
    if (expected != actual)
        throw AlgebraError(ErrorCode::DimensionMismatch,
                           "dimensions " + std::to_string(expected) + " and " + std::to_string(actual));
}

void validate_images(const GeneratorImages& g)
{
    const std::size_t n = g.dim();
    if (n == 0)
        throw AlgebraError(ErrorCode::DimensionMismatch, "no generator images");
    require_dim(n, g.i.size());
    require_dim(n, g.h.size());
    for (std::size_t k = 0; k < n; ++k) {
        require_dim(n, g.d[k].dim());
        require_dim(n, g.i[k].dim());
        require_dim(n, g.h[k].dim());
    }
}

TorusVector reciprocal(const TorusVector& lambda)
{
    TorusVector r;
    r.reserve(lambda.size());
    for (const auto& l : lambda)
        r.push_back(1 / l);
    return r;
}

AlgebraElement slot_generator(GeneratorKind kind, std::size_t k, std::size_t n)
{
    return generator(kind, k + 1, n);
}

}  // namespace

InnerUnit::InnerUnit(AlgebraElement phi, AlgebraElement inverse) : phi_(std::move(phi)), inverse_(std::move(inverse))
{
    const std::size_t n = phi_.dim();
    require_dim(n, inverse_.dim());
    const AlgebraElement one = AlgebraElement::one(n);
    if (!in_maximal_ideal(phi_ - one))
        throw AlgebraError(ErrorCode::InvalidAutomorphism, "inner unit is not 1 modulo the maximal ideal");
    if (multiply(phi_, inverse_) != one || multiply(inverse_, phi_) != one)
        throw AlgebraError(ErrorCode::InvalidAutomorphism, "inner unit and inverse do not multiply to 1");
}

InnerUnit InnerUnit::identity(std::size_t n)
{
    return InnerUnit(AlgebraElement::one(n), AlgebraElement::one(n));
}

InnerUnit InnerUnit::from_finite_unit(const AlgebraElement& phi)
{
    return InnerUnit(phi, try_invert_finite_unit(phi));
}

bool InnerUnit::is_identity() const
{
    return phi_ == AlgebraElement::one(phi_.dim());
}

CanonicalAutomorphism::CanonicalAutomorphism(Permutation s_, TorusVector lambda_, InnerUnit phi_)
    : s(std::move(s_)), lambda(std::move(lambda_)), phi(std::move(phi_))
{
    require_dim(lambda.size(), s.size());
    require_dim(lambda.size(), phi.dim());
    if (lambda.empty())
        throw AlgebraError(ErrorCode::DimensionMismatch, "automorphism of dimension 0");
    for (const auto& l : lambda)
        if (l == 0)
            throw AlgebraError(ErrorCode::InvalidAutomorphism, "torus entries must be nonzero");
}

CanonicalAutomorphism CanonicalAutomorphism::identity(std::size_t n)
{
    return {Permutation(n), TorusVector(n, Scalar(1)), InnerUnit::identity(n)};
}

CanonicalAutomorphism CanonicalAutomorphism::torus(TorusVector lambda)
{
    const std::size_t n = lambda.size();
    return {Permutation(n), std::move(lambda), InnerUnit::identity(n)};
}

CanonicalAutomorphism CanonicalAutomorphism::permutation(Permutation s)
{
    const std::size_t n = s.size();
    return {std::move(s), TorusVector(n, Scalar(1)), InnerUnit::identity(n)};
}

CanonicalAutomorphism CanonicalAutomorphism::inner(InnerUnit phi)
{
    const std::size_t n = phi.dim();
    return {Permutation(n), TorusVector(n, Scalar(1)), std::move(phi)};
}

AlgebraElement perm_action(const Permutation& s, const AlgebraElement& a)
{
    require_dim(s.size(), a.dim());
    if (s.is_identity())
        return a;
    AlgebraElement r(a.dim());
    BasisMonomial moved(a.dim());
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k)
            moved[s(k)] = m[k];
        r.add_term(moved, c);
    }
    return r;
}

AlgebraElement torus_action(const TorusVector& lambda, const AlgebraElement& a)
{
    require_dim(lambda.size(), a.dim());
    if (std::all_of(lambda.begin(), lambda.end(), [](const Scalar& l) { return l == 1; }))
        return a;
    AlgebraElement r(a.dim());
    for (const auto& [m, c] : a.terms()) {
        Scalar coef = c;
        for (std::size_t k = 0; k < m.size(); ++k)
            coef *= pow(lambda[k], m[k].degree());
        r.add_term(m, coef);
    }
    return r;
}

AlgebraElement inner_action(const InnerUnit& phi, const AlgebraElement& a)
{
    require_dim(phi.dim(), a.dim());
    if (phi.is_identity())
        return a;
    return multiply(multiply(phi.phi(), a), phi.inverse());
}

AlgebraElement apply_aut(const CanonicalAutomorphism& sigma, const AlgebraElement& a)
{
    return perm_action(sigma.s, torus_action(sigma.lambda, inner_action(sigma.phi, a)));
}

GeneratorImages identity_images(std::size_t n)
{
    GeneratorImages g;
    for (std::size_t k = 0; k < n; ++k) {
        g.d.push_back(slot_generator(GeneratorKind::deriv, k, n));
        g.i.push_back(slot_generator(GeneratorKind::integ, k, n));
        g.h.push_back(slot_generator(GeneratorKind::euler, k, n));
    }
    return g;
}

GeneratorImages images_of(const CanonicalAutomorphism& sigma)
{
    GeneratorImages g = identity_images(sigma.dim());
    for (auto* family : {&g.d, &g.i, &g.h})
        for (auto& x : *family)
            x = apply_aut(sigma, x);
    return g;
}

ImageHomomorphism::ImageHomomorphism(GeneratorImages images) : images_(std::move(images))
{
    validate_images(images_);
    d_pow_.resize(dim());
    i_pow_.resize(dim());
    h_pow_.resize(dim());
}

const AlgebraElement& ImageHomomorphism::cached_power(std::vector<std::vector<AlgebraElement>>& cache,
                                                      const std::vector<AlgebraElement>& base, std::size_t slot,
                                                      std::int64_t k)
{
    auto& powers = cache[slot];
    if (powers.empty())
        powers.push_back(AlgebraElement::one(dim()));
    while (static_cast<std::int64_t>(powers.size()) <= k)
        powers.push_back(multiply(powers.back(), base[slot]));
    return powers[static_cast<std::size_t>(k)];
}

AlgebraElement ImageHomomorphism::slot_image(std::size_t slot, const FactorMonomial& f)
{
    if (f.is_matrix()) {
        // e_rc = I^r D^c - I^{r+1} D^{c+1}
        const std::int64_t r = f.row(), c = f.col();
        AlgebraElement lead = multiply(cached_power(i_pow_, images_.i, slot, r),
                                       cached_power(d_pow_, images_.d, slot, c));
        AlgebraElement tail = multiply(cached_power(i_pow_, images_.i, slot, r + 1),
                                       cached_power(d_pow_, images_.d, slot, c + 1));
        return lead - tail;
    }
    const AlgebraElement& shift = f.shift() >= 0 ? cached_power(i_pow_, images_.i, slot, f.shift())
                                                 : cached_power(d_pow_, images_.d, slot, -f.shift());
    if (f.h_pow() == 0)
        return shift;
    return multiply(cached_power(h_pow_, images_.h, slot, f.h_pow()), shift);
}

AlgebraElement ImageHomomorphism::operator()(const AlgebraElement& a)
{
    require_dim(dim(), a.dim());
    AlgebraElement result(dim());
    for (const auto& [m, c] : a.terms()) {
        AlgebraElement term = AlgebraElement::constant(dim(), c);
        for (std::size_t k = 0; k < m.size(); ++k)
            if (!m[k].is_one())
                term = multiply(term, slot_image(k, m[k]));
        result += term;
    }
    return result;
}

namespace {

// Product over the slots in `slots` of p(k, d) (when `p_part`) or q(k, d).
AlgebraElement slot_projection(std::uint32_t slots, std::int64_t d, std::size_t n, bool p_part)
{
    AlgebraElement r = AlgebraElement::one(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!(slots & (1U << k)))
            continue;
        AlgebraElement p(n);
        for (std::int64_t j = 0; j < d; ++j)
            p += matrix_unit(k + 1, j, j, n);
        r = multiply(r, p_part ? p : AlgebraElement::one(n) - p);
    }
    return r;
}

std::uint32_t all_slots(std::size_t n)
{
    return n >= 32 ? ~0U : (1U << n) - 1U;
}

void require_kernel_xi(const GeneratorImages& g)
{
    validate_images(g);
    const GeneratorImages id = identity_images(g.dim());
    for (std::size_t k = 0; k < g.dim(); ++k)
        if (!in_maximal_ideal(g.d[k] - id.d[k]) || !in_maximal_ideal(g.i[k] - id.i[k]) ||
            !in_maximal_ideal(g.h[k] - id.h[k]))
            throw AlgebraError(ErrorCode::NotInKernelXi,
                               "images differ from the generators modulo the maximal ideal in slot " +
                                   std::to_string(k + 1));
}

// Calls f(D, E) for every nonempty I and alpha in [0, d)^I, where
// D = prod_{j in I} D_j^{d - alpha_j} and E = e_{(d..d), alpha}(I) q(CI, d).
template <typename F>
void for_each_block(std::size_t n, std::int64_t d, F&& f)
{
    const std::uint32_t full = all_slots(n);
    for (std::uint32_t subset = 1; subset <= full; ++subset) {
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < n; ++k)
            if (subset & (1U << k))
                members.push_back(k);
        const AlgebraElement q_rest = slot_projection(full & ~subset, d, n, false);
        std::vector<std::int64_t> alpha(members.size(), 0);
        for (;;) {
            BasisMonomial dm = identity_monomial(n), em = identity_monomial(n);
            for (std::size_t t = 0; t < members.size(); ++t) {
                dm[members[t]] = FactorMonomial::band(0, -(d - alpha[t]));
                em[members[t]] = FactorMonomial::matrix(d, alpha[t]);
            }
            f(AlgebraElement::monomial(dm), multiply(AlgebraElement::monomial(em), q_rest));
            std::size_t t = 0;
            while (t < alpha.size() && ++alpha[t] == d)
                alpha[t++] = 0;
            if (t == alpha.size())
                break;
        }
    }
}

}  // namespace

AlgebraElement idempotent_pq(std::uint32_t subset, std::int64_t d, std::size_t n)
{
    if (d < 1)
        throw AlgebraError(ErrorCode::BadParameter, "d must be at least 1");
    const std::uint32_t full = all_slots(n);
    if (subset & ~full)
        throw AlgebraError(ErrorCode::SlotOutOfRange, "subset exceeds the slot range");
    return multiply(slot_projection(subset, d, n, true), slot_projection(full & ~subset, d, n, false));
}

std::int64_t conjugator_bandwidth(const GeneratorImages& images)
{
    validate_images(images);
    const GeneratorImages id = identity_images(images.dim());
    std::int64_t largest = -1;
    for (std::size_t k = 0; k < images.dim(); ++k) {
        largest = std::max(largest, max_matrix_index(images.d[k] - id.d[k]));
        largest = std::max(largest, max_matrix_index(images.i[k] - id.i[k]));
        largest = std::max(largest, max_matrix_index(images.h[k] - id.h[k]));
    }
    return std::max<std::int64_t>(1, largest + 1);
}

AlgebraElement conjugator_from_inner(const GeneratorImages& images)
{
    require_kernel_xi(images);
    const std::size_t n = images.dim();
    const std::int64_t d = conjugator_bandwidth(images);
    ImageHomomorphism sigma(images);
    AlgebraElement phi = slot_projection(all_slots(n), d, n, false);
    for_each_block(n, d, [&](const AlgebraElement& dpow, const AlgebraElement& block) {
        phi += multiply(sigma(dpow), block);
    });
    return phi;
}

AlgebraElement conjugator_inverse_from_inner(const GeneratorImages& images)
{
    require_kernel_xi(images);
    const std::size_t n = images.dim();
    const std::int64_t d = conjugator_bandwidth(images);
    ImageHomomorphism sigma(images);
    AlgebraElement inv = sigma(slot_projection(all_slots(n), d, n, false));
    for_each_block(n, d, [&](const AlgebraElement& dpow, const AlgebraElement& block) {
        inv += multiply(dpow, sigma(block));
    });
    return inv;
}

void check_relations(const GeneratorImages& g)
{
    validate_images(g);
    const std::size_t n = g.dim();
    const AlgebraElement one = AlgebraElement::one(n);
    auto violated = [](const std::string& which, std::size_t k) {
        throw AlgebraError(ErrorCode::RelationViolation, which + " fails in slot " + std::to_string(k + 1));
    };
    for (std::size_t k = 0; k < n; ++k) {
        const auto &d = g.d[k], &i = g.i[k], &h = g.h[k];
        if (multiply(d, i) != one)
            violated("D I = 1", k);
        if (commutator(h, i) != i)
            violated("[H, I] = I", k);
        if (commutator(h, d) != -d)
            violated("[H, D] = -D", k);
        const AlgebraElement p = one - multiply(i, d);
        if (multiply(h, p) != p || multiply(p, h) != p)
            violated("H (1 - I D) = (1 - I D) H = 1 - I D", k);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            for (const auto* x : {&g.d[k], &g.i[k], &g.h[k]})
                for (const auto* y : {&g.d[l], &g.i[l], &g.h[l]})
                    if (!commutator(*x, *y).is_zero())
                        throw AlgebraError(ErrorCode::RelationViolation,
                                           "images in slots " + std::to_string(k + 1) + " and " +
                                               std::to_string(l + 1) + " do not commute");
}

bool is_inner(const GeneratorImages& images)
{
    check_relations(images);
    const GeneratorImages id = identity_images(images.dim());
    for (std::size_t k = 0; k < images.dim(); ++k)
        if (!in_maximal_ideal(images.d[k] - id.d[k]))
            return false;
    return true;
}

CanonicalAutomorphism recognize(const GeneratorImages& images)
{
    validate_images(images);
    const std::size_t n = images.dim();

    // Residues: the image of D_i modulo the maximal ideal is lambda_i^{-1} z_{s(i)}^{-1}.
    std::vector<std::size_t> targets(n);
    TorusVector lambda(n);
    std::vector<bool> hit(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const BElement residue = quotient_image(images.d[k]);
        if (residue.terms().size() != 1)
            throw AlgebraError(ErrorCode::BadResidue, "image of D" + std::to_string(k + 1) + " is not a monomial residue");
        const auto& [z, coef] = *residue.terms().begin();
        std::size_t nonzero = 0, target = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (z[j] != 0) {
                ++nonzero;
                target = j;
            }
        if (nonzero != 1 || z[target] != -1 || !coef.is_constant() || hit[target])
            throw AlgebraError(ErrorCode::BadResidue, "image of D" + std::to_string(k + 1) + " has residue " + to_string(residue));
        hit[target] = true;
        targets[k] = target;
        lambda[k] = 1 / coef.constant_term();
    }
    const Permutation s(targets);
    for (std::size_t k = 0; k < n; ++k) {
        const BElement z = BElement::z_power(s(k), 1, n) * lambda[k];
        if (quotient_image(images.i[k]) != z || quotient_image(images.h[k]) != BElement::euler(s(k), n))
            throw AlgebraError(ErrorCode::BadResidue, "residues in slot " + std::to_string(k + 1) + " are inconsistent");
    }

    check_relations(images);

    // omega_phi = t_lambda^{-1} s^{-1} sigma
    const Permutation s_inv = s.inverse();
    const TorusVector lambda_inv = reciprocal(lambda);
    GeneratorImages reduced = images;
    for (auto* family : {&reduced.d, &reduced.i, &reduced.h})
        for (auto& x : *family)
            x = torus_action(lambda_inv, perm_action(s_inv, x));

    AlgebraElement phi = conjugator_from_inner(reduced);
    AlgebraElement phi_inv = conjugator_inverse_from_inner(reduced);
    try {
        CanonicalAutomorphism sigma(s, lambda, InnerUnit(std::move(phi), std::move(phi_inv)));
        if (images_of(sigma) != images)
            throw AlgebraError(ErrorCode::ConjugatorMismatch, "reconstructed automorphism does not reproduce the images");
        return sigma;
    } catch (const AlgebraError& e) {
        if (e.code() == ErrorCode::InvalidAutomorphism)
            throw AlgebraError(ErrorCode::ConjugatorMismatch, e.what());
        throw;
    }
}

CanonicalAutomorphism compose(const CanonicalAutomorphism& sigma1, const CanonicalAutomorphism& sigma2)
{
    require_dim(sigma1.dim(), sigma2.dim());
    const std::size_t n = sigma1.dim();
    const Permutation& s2 = sigma2.s;
    const Permutation s2_inv = s2.inverse();
    const TorusVector lambda2_inv = reciprocal(sigma2.lambda);

    TorusVector lambda(n);
    for (std::size_t k = 0; k < n; ++k)
        lambda[k] = sigma1.lambda[s2(k)] * sigma2.lambda[k];

    auto transport = [&](const AlgebraElement& a) { return torus_action(lambda2_inv, perm_action(s2_inv, a)); };
    AlgebraElement phi = multiply(transport(sigma1.phi.phi()), sigma2.phi.phi());
    AlgebraElement phi_inv = multiply(sigma2.phi.inverse(), transport(sigma1.phi.inverse()));
    CanonicalAutomorphism result(sigma1.s.after(s2), std::move(lambda), InnerUnit(std::move(phi), std::move(phi_inv)));

#ifndef NDEBUG
    GeneratorImages expected = images_of(sigma2);
    for (auto* family : {&expected.d, &expected.i, &expected.h})
        for (auto& x : *family)
            x = apply_aut(sigma1, x);
    if (images_of(result) != expected)
        throw std::logic_error("closed-form composition disagrees with the generator action");
#endif
    return result;
}

CanonicalAutomorphism invert(const CanonicalAutomorphism& sigma)
{
    const std::size_t n = sigma.dim();
    const Permutation s_inv = sigma.s.inverse();
    TorusVector lambda(n);
    for (std::size_t k = 0; k < n; ++k)
        lambda[k] = 1 / sigma.lambda[s_inv(k)];
    auto transport = [&](const AlgebraElement& a) { return perm_action(sigma.s, torus_action(sigma.lambda, a)); };
    return {s_inv, std::move(lambda), InnerUnit(transport(sigma.phi.inverse()), transport(sigma.phi.phi()))};
}

CanonicalAutomorphism hat_star(const CanonicalAutomorphism& sigma)
{
    const GeneratorImages id = identity_images(sigma.dim());
    GeneratorImages g;
    for (std::size_t k = 0; k < sigma.dim(); ++k) {
        g.d.push_back(involution(apply_aut(sigma, id.i[k])));
        g.i.push_back(involution(apply_aut(sigma, id.d[k])));
        g.h.push_back(involution(apply_aut(sigma, id.h[k])));
    }
    return recognize(g);
}

CanonicalAutomorphism g1_generator(G1Kind kind, const G1Params& params)
{
    const AlgebraElement one = AlgebraElement::one(1);
    switch (kind) {
    case G1Kind::torus:
        if (params.lambda == 0)
            throw AlgebraError(ErrorCode::BadParameter, "torus parameter must be nonzero");
        return CanonicalAutomorphism::torus({params.lambda});
    case G1Kind::transvection: {
        if (params.lambda == 0)
            throw AlgebraError(ErrorCode::BadParameter, "transvection parameter must be nonzero");
        if (params.i == params.j || params.i < 0 || params.j < 0)
            throw AlgebraError(ErrorCode::BadParameter, "transvection needs distinct nonnegative indices");
        const AlgebraElement e = matrix_unit(1, params.i, params.j, 1);
        return CanonicalAutomorphism::inner(InnerUnit(one + e * params.lambda, one - e * params.lambda));
    }
    case G1Kind::dilation: {
        if (params.mu == -1)
            throw AlgebraError(ErrorCode::BadParameter, "dilation parameter must differ from -1");
        const AlgebraElement e = matrix_unit(1, 1, 1, 1);
        return CanonicalAutomorphism::inner(
            InnerUnit(one + e * params.mu, one - e * Scalar(params.mu / (1 + params.mu))));
    }
    }
    throw AlgebraError(ErrorCode::BadParameter, "unknown generator kind");
}

BAutomorphism xi_image(const CanonicalAutomorphism& sigma)
{
    const std::size_t n = sigma.dim();
    IntMatrix a(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        a[k][sigma.s(k)] = 1;
    return BAutomorphism(std::move(a), sigma.lambda, LnVector(n, LaurentPolynomial(n)));
}

std::string to_json(const CanonicalAutomorphism& sigma)
{
    nlohmann::ordered_json doc;
    doc["n"] = sigma.dim();
    doc["perm"] = sigma.s.one_line();
    auto& lambda = doc["lambda"] = nlohmann::ordered_json::array();
    for (const auto& l : sigma.lambda)
        lambda.push_back(to_string(l));
    doc["phi"] = to_string(sigma.phi.phi());
    doc["phiInv"] = to_string(sigma.phi.inverse());
    return doc.dump(2);
}

CanonicalAutomorphism automorphism_from_json(const std::string& text)
{
    try {
        auto doc = nlohmann::json::parse(text);
        const auto n = doc.at("n").get<std::size_t>();
        if (n == 0)
            throw AlgebraError(ErrorCode::BadDocument, "n must be positive");
        Permutation s = doc.contains("perm") ? Permutation::from_one_line(doc.at("perm").get<std::vector<std::size_t>>())
                                             : Permutation(n);
        TorusVector lambda;
        if (doc.contains("lambda"))
            for (const auto& l : doc.at("lambda"))
                lambda.push_back(parse_scalar(l.get<std::string>()));
        else
            lambda.assign(n, Scalar(1));
        AlgebraElement phi = doc.contains("phi") ? parse_element(doc.at("phi").get<std::string>(), n)
                                                 : AlgebraElement::one(n);
        InnerUnit unit = doc.contains("phiInv")
                             ? InnerUnit(phi, parse_element(doc.at("phiInv").get<std::string>(), n))
                             : InnerUnit::from_finite_unit(phi);
        return {std::move(s), std::move(lambda), std::move(unit)};
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(ErrorCode::BadDocument, e.what());
    }
}

std::string to_json(const GeneratorImages& images)
{
    nlohmann::ordered_json doc;
    doc["n"] = images.dim();
    for (const auto& [key, family] : {std::pair{"d", &images.d}, {"i", &images.i}, {"h", &images.h}}) {
        auto& arr = doc[key] = nlohmann::ordered_json::array();
        for (const auto& x : *family)
            arr.push_back(to_string(x));
    }
    return doc.dump(2);
}

GeneratorImages images_from_json(const std::string& text)
{
    try {
        auto doc = nlohmann::json::parse(text);
        const auto n = doc.at("n").get<std::size_t>();
        if (n == 0)
            throw AlgebraError(ErrorCode::BadDocument, "n must be positive");
        GeneratorImages g;
        for (const auto& [key, family] : {std::pair{"d", &g.d}, {"i", &g.i}, {"h", &g.h}}) {
            for (const auto& x : doc.at(key))
                family->push_back(parse_element(x.get<std::string>(), n));
            if (family->size() != n)
                throw AlgebraError(ErrorCode::BadDocument,
                                   std::string("\"") + key + "\" must list " + std::to_string(n) + " elements");
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(ErrorCode::BadDocument, e.what());
    }
}

}  // namespace intdiff
