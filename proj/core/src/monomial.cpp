#include "intdiff/monomial.hpp"

namespace intdiff {

BasisMonomial identity_monomial(std::size_t n)
{
    return BasisMonomial(n, FactorMonomial::one());
}

bool is_identity(const BasisMonomial& m) noexcept
{
    for (const auto& f : m)
        if (!f.is_one())
            return false;
    return true;
}

std::uint32_t matrix_slots(const BasisMonomial& m) noexcept
{
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i].is_matrix())
            mask |= 1U << i;
    return mask;
}

namespace {

std::string power(const char* symbol, std::int64_t e)
{
    std::string s(symbol);
    if (e != 1)
        s += "^" + std::to_string(e);
    return s;
}

}  // namespace

std::string to_string(const FactorMonomial& f)
{
    if (f.is_matrix())
        return "e[" + std::to_string(f.row()) + "," + std::to_string(f.col()) + "]";
    if (f.is_one())
        return "1";
    std::string s;
    if (f.h_pow() > 0)
        s = power("H", f.h_pow());
    if (f.shift() != 0) {
        if (!s.empty())
            s += ' ';
        s += f.shift() > 0 ? power("I", f.shift()) : power("D", -f.shift());
    }
    return s;
}

std::string to_string(const BasisMonomial& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i != 0)
            s += "⊗";
        s += to_string(m[i]);
    }
    return s;
}

}  // namespace intdiff
