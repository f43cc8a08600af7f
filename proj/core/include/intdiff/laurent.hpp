#ifndef INTDIFF_LAURENT_HPP
#define INTDIFF_LAURENT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "intdiff/scalar.hpp"

namespace intdiff {

using Exponent = std::vector<std::int64_t>;

/// Sparse commutative Laurent polynomial in n variables over the rationals.
/// Serves both for polynomials in the Euler operators (nonnegative exponents)
/// and for Laurent polynomials in the z variables.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, Scalar>;

    explicit LaurentPolynomial(std::size_t n = 1);
    LaurentPolynomial(std::size_t n, TermMap terms);

    static LaurentPolynomial constant(std::size_t n, const Scalar& c);
    static LaurentPolynomial monomial(Exponent e, const Scalar& c = Scalar(1));
    /// The variable with index `i` (0-based).
    static LaurentPolynomial variable(std::size_t i, std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Scalar constant_term() const;
    Scalar coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Scalar& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const Scalar& c);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Scalar& c) { return a *= c; }
    LaurentPolynomial operator-() const;

    bool operator==(const LaurentPolynomial&) const = default;

private:
    std::size_t n_;
    TermMap terms_;
};

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// p(X - shift) for a polynomial p with nonnegative exponents.
LaurentPolynomial shifted(const LaurentPolynomial& p, const Exponent& shift);

/// z_i d/dz_i applied to p.
LaurentPolynomial euler_derivative(const LaurentPolynomial& p, std::size_t i);

/// Terms "c*X1^e1*X2^e2" joined by " + ", using `var` as the variable stem.
std::string to_string(const LaurentPolynomial& p, std::string_view var);

/// Parses the output of to_string (and the same grammar written by hand).
LaurentPolynomial parse_laurent(std::string_view text, std::size_t n, std::string_view var);

}  // namespace intdiff

#endif
