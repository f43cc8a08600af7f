#include "intdiff/element.hpp"

#include <algorithm>

#include "intdiff/error.hpp"

namespace intdiff {

namespace {

void require_same_dim(std::size_t a, std::size_t b)
{
    if (a != b)
        throw AlgebraError(ErrorCode::DimensionMismatch,
                           "elements of dimensions " + std::to_string(a) + " and " + std::to_string(b));
}

Integer ipow(const Integer& base, std::int64_t e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

AlgebraElement::AlgebraElement(std::size_t n) : n_(n)
{
}

AlgebraElement::AlgebraElement(std::size_t n, TermMap terms) : n_(n)
{
    for (auto& [m, c] : terms) {
        if (m.size() != n)
            throw AlgebraError(ErrorCode::DimensionMismatch, "monomial length differs from n");
        for (const auto& f : m)
            if ((f.is_band() && f.h_pow() < 0) || (f.is_matrix() && (f.row() < 0 || f.col() < 0)))
                throw AlgebraError(ErrorCode::BadParameter, "negative exponent or matrix index");
        if (c != 0)
            terms_.emplace(m, c);
    }
}

AlgebraElement AlgebraElement::one(std::size_t n)
{
    return constant(n, Scalar(1));
}

AlgebraElement AlgebraElement::constant(std::size_t n, const Scalar& c)
{
    AlgebraElement e(n);
    e.add_term(identity_monomial(n), c);
    return e;
}

AlgebraElement AlgebraElement::monomial(BasisMonomial m, const Scalar& c)
{
    std::size_t n = m.size();
    TermMap t;
    t.emplace(std::move(m), c);
    return AlgebraElement(n, std::move(t));
}

Scalar AlgebraElement::coefficient(const BasisMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void AlgebraElement::add_term(const BasisMonomial& m, const Scalar& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
    require_same_dim(n_, other.n_);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
    require_same_dim(n_, other.n_);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_)
        coef *= c;
    return *this;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

namespace detail {

void multiply_factors(const FactorMonomial& x, const FactorMonomial& y, SlotTerms& out)
{
    if (x.is_matrix() && y.is_matrix()) {
        if (x.col() == y.row())
            out.emplace_back(Integer(1), FactorMonomial::matrix(x.row(), y.col()));
        return;
    }
    if (x.is_band() && y.is_matrix()) {
        // H^b v_a e_ij = (i+a+1)^b e_{i+a,j}, zero once the row drops below 0
        std::int64_t row = y.row() + x.shift();
        if (row >= 0)
            out.emplace_back(ipow(Integer(row + 1), x.h_pow()), FactorMonomial::matrix(row, y.col()));
        return;
    }
    if (x.is_matrix() && y.is_band()) {
        // e_ij H^b v_a = (j+1)^b e_{i,j-a}
        std::int64_t col = x.col() - y.shift();
        if (col >= 0)
            out.emplace_back(ipow(Integer(x.col() + 1), y.h_pow()), FactorMonomial::matrix(x.row(), col));
        return;
    }

    // H^b v_a H^d v_c = H^b (H-a)^d v_a v_c, and v_a v_c = v_{a+c} except for
    // integration-then-derivation, where I^a D^m = v_{a-m} - sum_{t=1}^{min(a,m)} e_{a-t,m-t}.
    const std::int64_t b = x.h_pow();
    const std::int64_t a = x.shift();
    const std::int64_t d = y.h_pow();
    const std::int64_t c = y.shift();
    const Integer neg_a(-a);
    for (std::int64_t k = 0; k <= d; ++k) {
        Integer coef = binomial(d, k) * ipow(neg_a, d - k);
        if (coef != 0)
            out.emplace_back(std::move(coef), FactorMonomial::band(b + k, a + c));
    }
    if (a > 0 && c < 0) {
        const std::int64_t m = -c;
        for (std::int64_t t = 1; t <= std::min(a, m); ++t) {
            const std::int64_t row = a - t;
            // P(H) e_{row,*} = P(row+1) e_{row,*} with P(H) = H^b (H-a)^d
            Integer value = ipow(Integer(row + 1), b) * ipow(Integer(row + 1 - a), d);
            if (value != 0)
                out.emplace_back(-value, FactorMonomial::matrix(row, m - t));
        }
    }
}

void involute_factor(const FactorMonomial& x, SlotTerms& out)
{
    if (x.is_matrix()) {
        out.emplace_back(Integer(1), FactorMonomial::matrix(x.col(), x.row()));
        return;
    }
    // (H^b v_a)^* = v_{-a} H^b = (H+a)^b v_{-a}
    const std::int64_t b = x.h_pow();
    const std::int64_t a = x.shift();
    for (std::int64_t k = 0; k <= b; ++k) {
        Integer coef = binomial(b, k) * ipow(Integer(a), b - k);
        if (coef != 0)
            out.emplace_back(std::move(coef), FactorMonomial::band(k, -a));
    }
}

void accumulate_tensor(const std::vector<SlotTerms>& slots, const Scalar& c, AlgebraElement& acc)
{
    const std::size_t n = slots.size();
    for (const auto& s : slots)
        if (s.empty())
            return;
    std::vector<std::size_t> idx(n, 0);
    BasisMonomial m(n);
    while (true) {
        Integer coef(1);
        for (std::size_t i = 0; i < n; ++i) {
            coef *= slots[i][idx[i]].first;
            m[i] = slots[i][idx[i]].second;
        }
        acc.add_term(m, c * Scalar(coef));
        std::size_t i = 0;
        while (i < n && ++idx[i] == slots[i].size())
            idx[i++] = 0;
        if (i == n)
            break;
    }
}

}  // namespace detail

AlgebraElement generator(GeneratorKind kind, std::size_t slot, std::size_t n)
{
    if (slot < 1 || slot > n)
        throw AlgebraError(ErrorCode::SlotOutOfRange,
                           "slot " + std::to_string(slot) + " not in 1.." + std::to_string(n));
    BasisMonomial m = identity_monomial(n);
    auto& f = m[slot - 1];
    switch (kind) {
    case GeneratorKind::deriv:
        f = FactorMonomial::band(0, -1);
        break;
    case GeneratorKind::integ:
        f = FactorMonomial::band(0, 1);
        break;
    case GeneratorKind::euler:
        f = FactorMonomial::band(1, 0);
        break;
    case GeneratorKind::coord: {
        // x = I H = (H - 1) I
        AlgebraElement e(n);
        f = FactorMonomial::band(1, 1);
        e.add_term(m, Scalar(1));
        f = FactorMonomial::band(0, 1);
        e.add_term(m, Scalar(-1));
        return e;
    }
    }
    return AlgebraElement::monomial(std::move(m));
}

AlgebraElement matrix_unit(std::size_t slot, std::int64_t row, std::int64_t col, std::size_t n)
{
    if (slot < 1 || slot > n)
        throw AlgebraError(ErrorCode::SlotOutOfRange,
                           "slot " + std::to_string(slot) + " not in 1.." + std::to_string(n));
    if (row < 0 || col < 0)
        throw AlgebraError(ErrorCode::BadParameter, "negative matrix index");
    BasisMonomial m = identity_monomial(n);
    m[slot - 1] = FactorMonomial::matrix(row, col);
    return AlgebraElement::monomial(std::move(m));
}

AlgebraElement matrix_unit(std::span<const std::int64_t> alpha, std::span<const std::int64_t> beta)
{
    require_same_dim(alpha.size(), beta.size());
    BasisMonomial m(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0 || beta[i] < 0)
            throw AlgebraError(ErrorCode::BadParameter, "negative matrix index");
        m[i] = FactorMonomial::matrix(alpha[i], beta[i]);
    }
    return AlgebraElement::monomial(std::move(m));
}

AlgebraElement linear_combine(std::span<const Scalar> coeffs, std::span<const AlgebraElement> elems)
{
    if (coeffs.size() != elems.size())
        throw AlgebraError(ErrorCode::DimensionMismatch, "coefficient and element counts differ");
    if (elems.empty())
        throw AlgebraError(ErrorCode::DimensionMismatch, "empty combination has no dimension");
    AlgebraElement acc(elems.front().dim());
    for (std::size_t k = 0; k < elems.size(); ++k) {
        require_same_dim(acc.dim(), elems[k].dim());
        for (const auto& [m, c] : elems[k].terms())
            acc.add_term(m, coeffs[k] * c);
    }
    return acc;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b)
{
    require_same_dim(a.dim(), b.dim());
    const std::size_t n = a.dim();
    AlgebraElement acc(n);
    std::vector<detail::SlotTerms> slots(n);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            bool vanished = false;
            for (std::size_t i = 0; i < n; ++i) {
                slots[i].clear();
                detail::multiply_factors(ma[i], mb[i], slots[i]);
                if (slots[i].empty()) {
                    vanished = true;
                    break;
                }
            }
            if (!vanished)
                detail::accumulate_tensor(slots, ca * cb, acc);
        }
    }
    return acc;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    return multiply(a, b);
}

AlgebraElement power(const AlgebraElement& a, std::uint32_t k)
{
    AlgebraElement result = AlgebraElement::one(a.dim());
    AlgebraElement base = a;
    while (k != 0) {
        if (k & 1U)
            result = multiply(result, base);
        k >>= 1U;
        if (k != 0)
            base = multiply(base, base);
    }
    return result;
}

AlgebraElement involution(const AlgebraElement& a)
{
    const std::size_t n = a.dim();
    AlgebraElement acc(n);
    std::vector<detail::SlotTerms> slots(n);
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            slots[i].clear();
            detail::involute_factor(m[i], slots[i]);
        }
        detail::accumulate_tensor(slots, c, acc);
    }
    return acc;
}

std::map<GradedDegree, AlgebraElement> graded_components(const AlgebraElement& a)
{
    std::map<GradedDegree, AlgebraElement> parts;
    for (const auto& [m, c] : a.terms()) {
        GradedDegree deg(m.size());
        std::transform(m.begin(), m.end(), deg.begin(), [](const FactorMonomial& f) { return f.degree(); });
        auto [it, inserted] = parts.try_emplace(deg, a.dim());
        it->second.add_term(m, c);
    }
    return parts;
}

std::string to_string(const AlgebraElement& a)
{
    if (a.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : a.terms()) {
        if (!first)
            s += " + ";
        first = false;
        s += to_string(c) + " * " + to_string(m);
    }
    return s;
}

std::int64_t max_matrix_index(const AlgebraElement& a)
{
    std::int64_t best = -1;
    for (const auto& [m, c] : a.terms())
        for (const auto& f : m)
            if (f.is_matrix())
                best = std::max({best, f.row(), f.col()});
    return best;
}

}  // namespace intdiff
