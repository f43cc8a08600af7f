#include "intdiff/poly_module.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "intdiff/error.hpp"

namespace intdiff {

DividedPolynomial::DividedPolynomial(std::size_t n) : n_(n)
{
}

DividedPolynomial::DividedPolynomial(std::size_t n, TermMap terms) : n_(n)
{
    for (auto& [alpha, c] : terms)
        add_term(alpha, c);
}

DividedPolynomial DividedPolynomial::basis(MultiIndex alpha, const Scalar& c)
{
    DividedPolynomial p(alpha.size());
    p.add_term(alpha, c);
    return p;
}

void DividedPolynomial::add_term(const MultiIndex& alpha, const Scalar& c)
{
    if (alpha.size() != n_)
        throw AlgebraError(ErrorCode::DimensionMismatch, "multi-index length differs from n");
    if (std::any_of(alpha.begin(), alpha.end(), [](std::int64_t v) { return v < 0; }))
        throw AlgebraError(ErrorCode::BadParameter, "negative divided-power exponent");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

DividedPolynomial& DividedPolynomial::operator+=(const DividedPolynomial& other)
{
    if (other.n_ != n_)
        throw AlgebraError(ErrorCode::DimensionMismatch, "polynomials of different dimensions");
    for (const auto& [alpha, c] : other.terms_)
        add_term(alpha, c);
    return *this;
}

namespace {

// Acts with one slot factor on x^[k]; returns false when the result is zero.
bool act(const FactorMonomial& f, std::int64_t k, std::int64_t& out, Integer& coef)
{
    if (f.is_matrix()) {
        if (f.col() != k)
            return false;
        out = f.row();
        return true;
    }
    std::int64_t target = k + f.shift();
    if (target < 0)
        return false;
    out = target;
    Integer factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(target + 1), static_cast<unsigned long>(f.h_pow()));
    coef *= factor;
    return true;
}

}  // namespace

DividedPolynomial apply(const AlgebraElement& a, const DividedPolynomial& p)
{
    if (a.dim() != p.dim())
        throw AlgebraError(ErrorCode::DimensionMismatch, "element and polynomial dimensions differ");
    const std::size_t n = a.dim();
    DividedPolynomial result(n);
    MultiIndex image(n);
    for (const auto& [m, c] : a.terms()) {
        for (const auto& [alpha, pc] : p.terms()) {
            Integer coef(1);
            bool alive = true;
            for (std::size_t i = 0; i < n && alive; ++i)
                alive = act(m[i], alpha[i], image[i], coef);
            if (alive)
                result.add_term(image, c * pc * Scalar(coef));
        }
    }
    return result;
}

std::size_t TruncatedMatrix::position(const MultiIndex& alpha) const
{
    std::size_t pos = 0;
    for (std::int64_t v : alpha)
        pos = pos * bound + static_cast<std::size_t>(v);
    return pos;
}

MultiIndex TruncatedMatrix::index_at(std::size_t pos) const
{
    MultiIndex alpha(n);
    for (std::size_t i = n; i-- > 0;) {
        alpha[i] = static_cast<std::int64_t>(pos % bound);
        pos /= bound;
    }
    return alpha;
}

TruncatedMatrix truncated_matrix(const AlgebraElement& a, std::size_t bound)
{
    if (bound == 0)
        throw AlgebraError(ErrorCode::BadParameter, "window bound must be at least 1");
    TruncatedMatrix t;
    t.bound = bound;
    t.n = a.dim();
    std::size_t size = 1;
    for (std::size_t i = 0; i < t.n; ++i)
        size *= bound;
    t.matrix = RationalMatrix(size);
    t.escapes.assign(size, false);
    for (std::size_t col = 0; col < size; ++col) {
        DividedPolynomial image = apply(a, DividedPolynomial::basis(t.index_at(col)));
        for (const auto& [alpha, c] : image.terms()) {
            bool inside = std::all_of(alpha.begin(), alpha.end(),
                                      [bound](std::int64_t v) { return static_cast<std::size_t>(v) < bound; });
            if (inside)
                t.matrix(t.position(alpha), col) = c;
            else
                t.escapes[col] = true;
        }
    }
    return t;
}

bool agree_on_window(const AlgebraElement& a, const AlgebraElement& b, std::size_t bound)
{
    if (a.dim() != b.dim())
        throw AlgebraError(ErrorCode::DimensionMismatch, "elements of different dimensions");
    AlgebraElement diff = a - b;
    if (diff.is_zero())
        return true;
    TruncatedMatrix probe;
    probe.bound = bound;
    probe.n = a.dim();
    std::size_t size = 1;
    for (std::size_t i = 0; i < probe.n; ++i)
        size *= bound;
    for (std::size_t pos = 0; pos < size; ++pos)
        if (!apply(diff, DividedPolynomial::basis(probe.index_at(pos))).is_zero())
            return false;
    return true;
}

std::size_t faithful_window(const AlgebraElement& a)
{
    std::int64_t d = 0, s = 0, h = 0;
    for (const auto& [m, c] : a.terms())
        for (const auto& f : m) {
            if (f.is_matrix())
                d = std::max({d, f.row() + 1, f.col() + 1});
            else {
                s = std::max(s, std::abs(f.shift()));
                h = std::max(h, f.h_pow());
            }
        }
    return static_cast<std::size_t>(d + s + h + 1);
}

std::string to_string(const DividedPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [alpha, c] : p.terms()) {
        if (!first)
            s += " + ";
        first = false;
        s += to_string(c) + " *";
        for (std::size_t i = 0; i < alpha.size(); ++i)
            s += " x" + std::to_string(i + 1) + "^[" + std::to_string(alpha[i]) + "]";
    }
    return s;
}

namespace {

class PolyReader {
public:
    PolyReader(std::string_view text, std::size_t n) : text_(text), n_(n) {}

    DividedPolynomial parse()
    {
        DividedPolynomial result(n_);
        bool first = true;
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) {
                if (first)
                    throw SyntaxError(pos_, "empty polynomial");
                break;
            }
            Scalar sign(1);
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw SyntaxError(pos_, "expected '+' or '-'");
            }
            first = false;
            parse_term(result, sign);
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

    std::int64_t integer()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            throw SyntaxError(pos_, "expected a number");
        if (pos_ - start > 9)
            throw SyntaxError(start, "number too large");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    void parse_term(DividedPolynomial& out, Scalar sign)
    {
        skip_ws();
        // printed form joins terms with " + " and puts the sign on the coefficient
        if (peek() == '-') {
            sign = -sign;
            ++pos_;
            skip_ws();
        }
        Scalar coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/'))
                ++pos_;
            try {
                coef = parse_scalar(text_.substr(start, pos_ - start));
            } catch (const SyntaxError&) {
                throw SyntaxError(start, "malformed coefficient");
            }
            have_coef = true;
            skip_ws();
            if (peek() == '*')
                ++pos_;
            else {
                out.add_term(MultiIndex(n_, 0), sign * coef);
                return;
            }
        }
        MultiIndex alpha(n_, 0);
        std::vector<bool> seen(n_, false);
        bool any = false;
        while (true) {
            skip_ws();
            if (peek() != 'x')
                break;
            std::size_t at = pos_;
            ++pos_;
            std::int64_t slot = integer();
            if (slot < 1 || static_cast<std::size_t>(slot) > n_)
                throw AlgebraError(ErrorCode::IndexOutOfRange, "variable x" + std::to_string(slot) + " at byte " +
                                                                   std::to_string(at));
            if (seen[static_cast<std::size_t>(slot - 1)])
                throw SyntaxError(at, "variable repeated within a term");
            seen[static_cast<std::size_t>(slot - 1)] = true;
            std::int64_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                if (peek() != '[')
                    throw SyntaxError(pos_, "expected '[' (divided powers are written x1^[k])");
                ++pos_;
                e = integer();
                skip_ws();
                if (peek() != ']')
                    throw SyntaxError(pos_, "expected ']'");
                ++pos_;
            }
            alpha[static_cast<std::size_t>(slot - 1)] = e;
            any = true;
        }
        if (!any && have_coef)
            throw SyntaxError(pos_, "expected a monomial after '*'");
        if (!any)
            throw SyntaxError(pos_, "expected a term");
        out.add_term(alpha, sign * coef);
    }

    std::string_view text_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

DividedPolynomial parse_polynomial(std::string_view text, std::size_t n)
{
    return PolyReader(text, n).parse();
}

}  // namespace intdiff
