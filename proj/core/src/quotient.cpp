#include "intdiff/quotient.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "intdiff/error.hpp"
#include "intdiff/linalg.hpp"

namespace intdiff {

namespace {

void require_same_dim(std::size_t a, std::size_t b)
{
    if (a != b)
        throw AlgebraError(ErrorCode::DimensionMismatch,
                           "dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

BElement::BElement(std::size_t n) : n_(n)
{
}

BElement::BElement(std::size_t n, TermMap terms) : n_(n)
{
    for (auto& [e, c] : terms)
        add_term(e, c);
}

BElement BElement::constant(std::size_t n, const Scalar& c)
{
    return term(LaurentPolynomial::constant(n, c), Exponent(n, 0));
}

BElement BElement::euler(std::size_t i, std::size_t n)
{
    return term(LaurentPolynomial::variable(i, n), Exponent(n, 0));
}

BElement BElement::z_power(std::size_t i, std::int64_t e, std::size_t n)
{
    Exponent z(n, 0);
    z.at(i) = e;
    return term(LaurentPolynomial::constant(n, Scalar(1)), std::move(z));
}

BElement BElement::term(LaurentPolynomial h_coef, Exponent z_exp)
{
    BElement u(z_exp.size());
    u.add_term(z_exp, h_coef);
    return u;
}

void BElement::add_term(const Exponent& z_exp, const LaurentPolynomial& h_coef)
{
    require_same_dim(z_exp.size(), n_);
    require_same_dim(h_coef.dim(), n_);
    if (h_coef.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(z_exp, h_coef);
    if (!inserted) {
        it->second += h_coef;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BElement& BElement::operator+=(const BElement& o)
{
    require_same_dim(n_, o.n_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

BElement& BElement::operator-=(const BElement& o)
{
    require_same_dim(n_, o.n_);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

BElement& BElement::operator*=(const Scalar& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

BElement b_multiply(const BElement& u, const BElement& v)
{
    require_same_dim(u.dim(), v.dim());
    const std::size_t n = u.dim();
    BElement r(n);
    Exponent sum(n);
    // (f z^β)(g z^γ) = f · g(H - β) · z^{β+γ}
    for (const auto& [beta, f] : u.terms())
        for (const auto& [gamma, g] : v.terms()) {
            for (std::size_t i = 0; i < n; ++i)
                sum[i] = beta[i] + gamma[i];
            r.add_term(sum, f * shifted(g, beta));
        }
    return r;
}

BElement b_power(const BElement& u, std::int64_t k)
{
    if (k < 0)
        throw AlgebraError(ErrorCode::BadParameter, "negative power in B_n");
    BElement r = BElement::constant(u.dim(), Scalar(1));
    for (std::int64_t i = 0; i < k; ++i)
        r = b_multiply(r, u);
    return r;
}

BElement quotient_image(const AlgebraElement& a)
{
    const std::size_t n = a.dim();
    BElement r(n);
    Exponent h(n), z(n);
    for (const auto& [m, c] : a.terms()) {
        if (matrix_slots(m) != 0)
            continue;
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = m[i].h_pow();
            z[i] = m[i].shift();
        }
        r.add_term(z, LaurentPolynomial::monomial(h, c));
    }
    return r;
}

std::int64_t top_degree(const BElement& u)
{
    if (u.dim() != 1)
        throw AlgebraError(ErrorCode::NotSupported, "top degree is defined for n = 1");
    if (u.is_zero())
        throw AlgebraError(ErrorCode::ZeroElement, "top degree of zero");
    return u.terms().rbegin()->first.front();
}

std::int64_t fredholm_index(const AlgebraElement& a)
{
    if (a.dim() != 1)
        throw AlgebraError(ErrorCode::NotSupported, "the index is exposed for n = 1 only");
    BElement image = quotient_image(a);
    if (image.is_zero())
        throw AlgebraError(ErrorCode::NotFredholm, "element lies in F: " + to_string(a));
    return -top_degree(image);
}

std::string to_string(const BElement& u)
{
    if (u.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [z, c] : u.terms()) {
        if (!first)
            s += " + ";
        first = false;
        s += "(" + to_string(c, "H") + ") *";
        for (std::size_t i = 0; i < z.size(); ++i)
            s += " z" + std::to_string(i + 1) + "^" + std::to_string(z[i]);
    }
    return s;
}

bool ln_prime_check(const LnVector& p)
{
    const std::size_t n = p.size();
    for (const auto& q : p)
        require_same_dim(q.dim(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (euler_derivative(p[j], i) != euler_derivative(p[i], j))
                return false;
    return true;
}

LnVector ln_prime_basis_vector(const Exponent& alpha)
{
    const std::size_t n = alpha.size();
    auto first = std::find_if(alpha.begin(), alpha.end(), [](auto v) { return v != 0; });
    if (first == alpha.end())
        throw AlgebraError(ErrorCode::ZeroAlpha, "b_alpha needs alpha != 0");
    const Scalar lead(static_cast<long>(*first));
    LnVector out;
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] == 0)
            out.emplace_back(n);
        else
            out.push_back(LaurentPolynomial::monomial(alpha, Scalar(static_cast<long>(alpha[i])) / lead));
    }
    return out;
}

namespace {

IntMatrix integer_inverse(const IntMatrix& a)
{
    const std::size_t n = a.size();
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw AlgebraError(ErrorCode::InvalidAutomorphism, "matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Scalar(static_cast<long>(a[i][j]));
    }
    auto inv = inverse(m);
    if (!inv)
        throw AlgebraError(ErrorCode::InvalidAutomorphism, "matrix is singular");
    IntMatrix b(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& v = (*inv)(i, j);
            if (v.get_den() != 1 || !v.get_num().fits_slong_p())
                throw AlgebraError(ErrorCode::InvalidAutomorphism, "matrix is not in GL_n(Z)");
            b[i][j] = v.get_num().get_si();
        }
    return b;
}

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix a(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 1;
    return a;
}

}  // namespace

BAutomorphism::BAutomorphism(IntMatrix a, std::vector<Scalar> lambda, LnVector p)
    : a_(std::move(a)), lambda_(std::move(lambda)), p_(std::move(p))
{
    const std::size_t n = a_.size();
    if (n == 0)
        throw AlgebraError(ErrorCode::InvalidAutomorphism, "empty matrix");
    b_ = integer_inverse(a_);
    if (lambda_.size() != n || p_.size() != n)
        throw AlgebraError(ErrorCode::DimensionMismatch, "lambda and p must have n entries");
    for (const auto& l : lambda_)
        if (l == 0)
            throw AlgebraError(ErrorCode::InvalidAutomorphism, "torus entries must be nonzero");
    if (!ln_prime_check(p_))
        throw AlgebraError(ErrorCode::InvalidAutomorphism, "shift vector violates the compatibility condition");
}

BAutomorphism BAutomorphism::identity(std::size_t n)
{
    return BAutomorphism(identity_matrix(n), std::vector<Scalar>(n, Scalar(1)), LnVector(n, LaurentPolynomial(n)));
}

BAutomorphism BAutomorphism::torus(std::vector<Scalar> lambda)
{
    const std::size_t n = lambda.size();
    return BAutomorphism(identity_matrix(n), std::move(lambda), LnVector(n, LaurentPolynomial(n)));
}

BAutomorphism BAutomorphism::shift(LnVector p)
{
    const std::size_t n = p.size();
    return BAutomorphism(identity_matrix(n), std::vector<Scalar>(n, Scalar(1)), std::move(p));
}

BAutomorphism BAutomorphism::linear(IntMatrix a)
{
    const std::size_t n = a.size();
    return BAutomorphism(std::move(a), std::vector<Scalar>(n, Scalar(1)), LnVector(n, LaurentPolynomial(n)));
}

LaurentPolynomial BAutomorphism::monomial_map(const LaurentPolynomial& q) const
{
    // z^β ↦ ∏ λ_k^{β_k} z^{βa}
    const std::size_t n = dim();
    LaurentPolynomial r(n);
    Exponent e(n);
    for (const auto& [beta, c] : q.terms()) {
        Scalar coef = c;
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            coef *= pow(lambda_[k], beta[k]);
            for (std::size_t j = 0; j < n; ++j)
                e[j] += beta[k] * a_[k][j];
        }
        r.add_term(e, coef);
    }
    return r;
}

LaurentPolynomial BAutomorphism::monomial_map_inverse(const LaurentPolynomial& q) const
{
    // z^γ ↦ ∏ λ_k^{-β_k} z^β with β = γ b
    const std::size_t n = dim();
    LaurentPolynomial r(n);
    Exponent beta(n);
    for (const auto& [gamma, c] : q.terms()) {
        std::fill(beta.begin(), beta.end(), 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                beta[k] += gamma[j] * b_[j][k];
        Scalar coef = c;
        for (std::size_t k = 0; k < n; ++k)
            coef *= pow(lambda_[k], -beta[k]);
        r.add_term(beta, coef);
    }
    return r;
}

BElement BAutomorphism::image_of_z(std::size_t i, std::int64_t e) const
{
    const std::size_t n = dim();
    Exponent z(n);
    for (std::size_t j = 0; j < n; ++j)
        z[j] = e * a_.at(i)[j];
    return BElement::term(LaurentPolynomial::constant(n, pow(lambda_.at(i), e)), std::move(z));
}

BElement BAutomorphism::image_of_h(std::size_t i) const
{
    const std::size_t n = dim();
    BElement r(n);
    for (std::size_t j = 0; j < n; ++j)
        if (b_[j][i] != 0)
            r += BElement::euler(j, n) * Scalar(static_cast<long>(b_[j][i]));
    const LaurentPolynomial shift = monomial_map(p_.at(i));
    for (const auto& [z, c] : shift.terms())
        r.add_term(z, LaurentPolynomial::constant(n, c));
    return r;
}

bool BAutomorphism::operator==(const BAutomorphism& o) const
{
    return a_ == o.a_ && lambda_ == o.lambda_ && p_ == o.p_;
}

BElement b_aut_apply(const BAutomorphism& g, const BElement& u)
{
    require_same_dim(g.dim(), u.dim());
    const std::size_t n = g.dim();
    std::vector<BElement> h_images;
    for (std::size_t i = 0; i < n; ++i)
        h_images.push_back(g.image_of_h(i));
    BElement result(n);
    for (const auto& [z, coef] : u.terms()) {
        BElement c_image(n);
        for (const auto& [hexp, c] : coef.terms()) {
            BElement t = BElement::constant(n, c);
            for (std::size_t i = 0; i < n; ++i)
                for (std::int64_t k = 0; k < hexp[i]; ++k)
                    t = b_multiply(t, h_images[i]);
            c_image += t;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (z[i] != 0)
                c_image = b_multiply(c_image, g.image_of_z(i, z[i]));
        result += c_image;
    }
    return result;
}

BAutomorphism b_aut_from_images(const std::vector<BElement>& z_images, const std::vector<BElement>& h_images)
{
    const std::size_t n = z_images.size();
    require_same_dim(h_images.size(), n);
    IntMatrix a(n, std::vector<std::int64_t>(n));
    std::vector<Scalar> lambda(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& img = z_images[i];
        if (img.terms().size() != 1 || !img.terms().begin()->second.is_constant())
            throw AlgebraError(ErrorCode::InvalidAutomorphism, "image of z is not a scaled monomial");
        a[i] = img.terms().begin()->first;
        lambda[i] = img.terms().begin()->second.constant_term();
    }
    IntMatrix b_read(n, std::vector<std::int64_t>(n, 0));
    LnVector q(n, LaurentPolynomial(n));
    const Exponent zero(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [z, coef] : h_images[i].terms()) {
            if (z != zero) {
                if (!coef.is_constant())
                    throw AlgebraError(ErrorCode::InvalidAutomorphism, "image of H has mixed H z terms");
                q[i].add_term(z, coef.constant_term());
                continue;
            }
            for (const auto& [hexp, c] : coef.terms()) {
                auto deg = std::accumulate(hexp.begin(), hexp.end(), std::int64_t{0});
                if (deg == 0) {
                    q[i].add_term(zero, c);
                } else if (deg == 1) {
                    std::size_t j = static_cast<std::size_t>(std::find(hexp.begin(), hexp.end(), 1) - hexp.begin());
                    if (j == n || c.get_den() != 1 || !c.get_num().fits_slong_p())
                        throw AlgebraError(ErrorCode::InvalidAutomorphism, "nonintegral H coefficient");
                    b_read[j][i] = c.get_num().get_si();
                } else {
                    throw AlgebraError(ErrorCode::InvalidAutomorphism, "image of H is not affine in H");
                }
            }
        }
    }
    BAutomorphism linear_part(a, lambda, LnVector(n, LaurentPolynomial(n)));
    if (linear_part.inverse_matrix() != b_read)
        throw AlgebraError(ErrorCode::InvalidAutomorphism, "H images are inconsistent with z images");
    LnVector p;
    for (const auto& qi : q)
        p.push_back(linear_part.monomial_map_inverse(qi));
    return BAutomorphism(std::move(a), std::move(lambda), std::move(p));
}

BAutomorphism b_aut_compose(const BAutomorphism& g, const BAutomorphism& h)
{
    require_same_dim(g.dim(), h.dim());
    const std::size_t n = g.dim();
    std::vector<BElement> z_images, h_images;
    for (std::size_t i = 0; i < n; ++i) {
        z_images.push_back(b_aut_apply(g, h.image_of_z(i)));
        h_images.push_back(b_aut_apply(g, h.image_of_h(i)));
    }
    return b_aut_from_images(z_images, h_images);
}

BAutomorphism b_aut_inverse(const BAutomorphism& g)
{
    const std::size_t n = g.dim();
    std::vector<BElement> z_images, h_images;
    for (std::size_t i = 0; i < n; ++i) {
        BElement img(n);
        const LaurentPolynomial zi = g.monomial_map_inverse(LaurentPolynomial::variable(i, n));
        for (const auto& [z, c] : zi.terms())
            img.add_term(z, LaurentPolynomial::constant(n, c));
        z_images.push_back(std::move(img));

        // H_i ↦ Σ_j a_ji (H_j - p_j)
        BElement hi(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::int64_t coef = g.matrix()[j][i];
            if (coef == 0)
                continue;
            BElement t = BElement::euler(j, n);
            for (const auto& [z, c] : g.shifts()[j].terms())
                t.add_term(z, LaurentPolynomial::constant(n, -c));
            hi += t * Scalar(static_cast<long>(coef));
        }
        h_images.push_back(hi);
    }
    return b_aut_from_images(z_images, h_images);
}

std::string to_json(const BAutomorphism& g)
{
    nlohmann::ordered_json doc;
    doc["matrix"] = g.matrix();
    auto& lambda = doc["lambda"] = nlohmann::ordered_json::array();
    for (const auto& l : g.lambda())
        lambda.push_back(to_string(l));
    auto& p = doc["p"] = nlohmann::ordered_json::array();
    for (const auto& q : g.shifts())
        p.push_back(to_string(q, "z"));
    return doc.dump();
}

BAutomorphism b_aut_from_json(const std::string& text)
{
    try {
        auto doc = nlohmann::json::parse(text);
        IntMatrix a = doc.at("matrix").get<IntMatrix>();
        const std::size_t n = a.size();
        std::vector<Scalar> lambda;
        for (const auto& l : doc.at("lambda"))
            lambda.push_back(parse_scalar(l.get<std::string>()));
        LnVector p;
        for (const auto& q : doc.at("p"))
            p.push_back(parse_laurent(q.get<std::string>(), n, "z"));
        return BAutomorphism(std::move(a), std::move(lambda), std::move(p));
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(ErrorCode::BadDocument, e.what());
    }
}

}  // namespace intdiff
