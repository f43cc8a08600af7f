#include "intdiff/scalar.hpp"

#include <cctype>

#include "intdiff/error.hpp"

namespace intdiff {

Scalar make_scalar(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw AlgebraError(ErrorCode::BadParameter, "zero denominator");
    Scalar s(Integer(std::to_string(num)), Integer(std::to_string(den)));
    s.canonicalize();
    return s;
}

std::string to_string(const Scalar& s)
{
    return s.get_str();
}

namespace {

bool all_digits(std::string_view t)
{
    if (t.empty())
        return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    std::size_t sign_len = 0;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        sign_len = 1;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw SyntaxError(0, "malformed rational literal '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0)
        throw SyntaxError(slash + sign_len, "zero denominator in '" + std::string(text) + "'");
    Scalar s{Integer{std::string(num)}, d};
    s.canonicalize();
    return negative ? Scalar(-s) : s;
}

Scalar pow(const Scalar& base, std::int64_t exp)
{
    if (exp < 0) {
        if (base == 0)
            throw AlgebraError(ErrorCode::BadParameter, "negative power of zero");
        return pow(Scalar(1 / base), -exp);
    }
    Scalar result(1);
    Scalar b = base;
    auto e = static_cast<std::uint64_t>(exp);
    while (e != 0) {
        if (e & 1U)
            result *= b;
        e >>= 1U;
        if (e != 0)
            b *= b;
    }
    return result;
}

}  // namespace intdiff
