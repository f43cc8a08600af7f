#ifndef INTDIFF_SCALAR_HPP
#define INTDIFF_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace intdiff {

/// Exact rational ground field element. gmpxx keeps the fraction reduced with a
/// positive denominator as long as every constructor goes through canonicalize().
using Scalar = mpq_class;
using Integer = mpz_class;

Scalar make_scalar(std::int64_t num, std::int64_t den = 1);

/// "p" or "p/q", always reduced.
std::string to_string(const Scalar& s);

/// Accepts "p", "-p", "p/q"; throws AlgebraError(SyntaxError) otherwise or on q == 0.
Scalar parse_scalar(std::string_view text);

/// Integer power with a possibly negative exponent; base must be nonzero when exp < 0.
Scalar pow(const Scalar& base, std::int64_t exp);

}  // namespace intdiff

#endif
