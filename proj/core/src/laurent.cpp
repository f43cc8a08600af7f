#include "intdiff/laurent.hpp"

#include <algorithm>
#include <cctype>

#include "intdiff/error.hpp"

namespace intdiff {

LaurentPolynomial::LaurentPolynomial(std::size_t n) : n_(n)
{
}

LaurentPolynomial::LaurentPolynomial(std::size_t n, TermMap terms) : n_(n)
{
    for (auto& [e, c] : terms)
        add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t n, const Scalar& c)
{
    LaurentPolynomial p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent e, const Scalar& c)
{
    LaurentPolynomial p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t i, std::size_t n)
{
    Exponent e(n, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
}

bool LaurentPolynomial::is_constant() const noexcept
{
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](auto v) { return v == 0; }));
}

Scalar LaurentPolynomial::constant_term() const
{
    return coefficient(Exponent(n_, 0));
}

Scalar LaurentPolynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Scalar& c)
{
    if (e.size() != n_)
        throw AlgebraError(ErrorCode::DimensionMismatch, "exponent length differs from n");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o)
{
    if (o.n_ != n_)
        throw AlgebraError(ErrorCode::DimensionMismatch, "polynomials of different dimensions");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o)
{
    if (o.n_ != n_)
        throw AlgebraError(ErrorCode::DimensionMismatch, "polynomials of different dimensions");
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Scalar& c)
{
    if (c == 0)
        terms_.clear();
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial r = *this;
    return r *= Scalar(-1);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    if (a.dim() != b.dim())
        throw AlgebraError(ErrorCode::DimensionMismatch, "polynomials of different dimensions");
    LaurentPolynomial r(a.dim());
    Exponent e(a.dim());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPolynomial shifted(const LaurentPolynomial& p, const Exponent& shift)
{
    const std::size_t n = p.dim();
    if (shift.size() != n)
        throw AlgebraError(ErrorCode::DimensionMismatch, "shift length differs from n");
    if (std::all_of(shift.begin(), shift.end(), [](auto v) { return v == 0; }))
        return p;
    // (X_i - s_i)^k expanded per variable, then multiplied out
    LaurentPolynomial result(n);
    for (const auto& [e, c] : p.terms()) {
        LaurentPolynomial term = LaurentPolynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] < 0)
                throw AlgebraError(ErrorCode::BadParameter, "shift of a polynomial with negative exponents");
            if (e[i] == 0)
                continue;
            LaurentPolynomial factor(n);
            Exponent fe(n, 0);
            for (std::int64_t k = 0; k <= e[i]; ++k) {
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e[i]), static_cast<unsigned long>(k));
                fe[i] = k;
                factor.add_term(fe, Scalar(binom) * pow(Scalar(-shift[i]), e[i] - k));
            }
            term = term * factor;
        }
        result += term;
    }
    return result;
}

LaurentPolynomial euler_derivative(const LaurentPolynomial& p, std::size_t i)
{
    LaurentPolynomial r(p.dim());
    for (const auto& [e, c] : p.terms())
        r.add_term(e, c * Scalar(static_cast<long>(e.at(i))));
    return r;
}

std::string to_string(const LaurentPolynomial& p, std::string_view var)
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    // print from the highest exponent down, which reads more naturally
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first)
            s += " + ";
        first = false;
        s += to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            s += "*" + std::string(var) + std::to_string(i + 1);
            if (e[i] != 1)
                s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

namespace {

class LaurentReader {
public:
    LaurentReader(std::string_view text, std::size_t n, std::string_view var) : text_(text), n_(n), var_(var) {}

    LaurentPolynomial parse()
    {
        LaurentPolynomial result(n_);
        skip_ws();
        if (pos_ == text_.size())
            throw SyntaxError(pos_, "empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == text_.size())
                break;
            Scalar sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
                if (peek() == '-') {
                    sign = -sign;
                    ++pos_;
                }
            } else if (!first) {
                throw SyntaxError(pos_, "expected '+' or '-'");
            }
            first = false;
            term(result, sign);
        }
        return result;
    }

private:
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::int64_t integer(bool allow_sign)
    {
        skip_ws();
        bool neg = false;
        if (allow_sign && peek() == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_ || pos_ - start > 9)
            throw SyntaxError(start, "expected a small integer");
        std::int64_t v = std::stoll(std::string(text_.substr(start, pos_ - start)));
        return neg ? -v : v;
    }

    void term(LaurentPolynomial& out, const Scalar& sign)
    {
        Scalar coef(1);
        Exponent e(n_, 0);
        bool need_factor = true;
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')
                ++pos_;
            coef = parse_scalar(text_.substr(start, pos_ - start));
            need_factor = false;
        }
        while (true) {
            skip_ws();
            if (!need_factor) {
                if (peek() != '*')
                    break;
                ++pos_;
                skip_ws();
            }
            need_factor = false;
            if (text_.substr(pos_, var_.size()) != var_)
                throw SyntaxError(pos_, "expected variable " + std::string(var_));
            std::size_t at = pos_;
            pos_ += var_.size();
            std::int64_t i = integer(false);
            if (i < 1 || static_cast<std::size_t>(i) > n_)
                throw AlgebraError(ErrorCode::IndexOutOfRange, "variable index at byte " + std::to_string(at));
            std::int64_t k = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                k = integer(true);
            }
            e[static_cast<std::size_t>(i - 1)] += k;
        }
        out.add_term(e, sign * coef);
    }

    std::string_view text_;
    std::size_t n_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text, std::size_t n, std::string_view var)
{
    return LaurentReader(text, n, var).parse();
}

}  // namespace intdiff
