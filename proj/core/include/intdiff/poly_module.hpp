#ifndef INTDIFF_POLY_MODULE_HPP
#define INTDIFF_POLY_MODULE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "intdiff/element.hpp"
#include "intdiff/linalg.hpp"

namespace intdiff {

using MultiIndex = std::vector<std::int64_t>;

/// Polynomial in the divided-power basis x^[alpha] = x^alpha / alpha!.
class DividedPolynomial {
public:
    using TermMap = std::map<MultiIndex, Scalar>;

    explicit DividedPolynomial(std::size_t n = 1);
    DividedPolynomial(std::size_t n, TermMap terms);

    static DividedPolynomial basis(MultiIndex alpha, const Scalar& c = Scalar(1));

    std::size_t dim() const noexcept { return n_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const MultiIndex& alpha, const Scalar& c);
    DividedPolynomial& operator+=(const DividedPolynomial& other);
    friend DividedPolynomial operator+(DividedPolynomial a, const DividedPolynomial& b) { return a += b; }

    bool operator==(const DividedPolynomial&) const = default;

private:
    std::size_t n_;
    TermMap terms_;
};

/// The action on the faithful module: D x^[k] = x^[k-1], I x^[k] = x^[k+1],
/// H x^[k] = (k+1) x^[k], e_ij x^[s] = delta_js x^[i], slot by slot.
DividedPolynomial apply(const AlgebraElement& a, const DividedPolynomial& p);

/// Matrix of `a` on the window spanned by x^[alpha] with all alpha_i < N.
/// Rows and columns follow the lexicographic order of alpha; `escapes[col]` is set
/// when the image of that basis vector leaves the window.
struct TruncatedMatrix {
    std::size_t bound = 0;
    std::size_t n = 0;
    RationalMatrix matrix;
    std::vector<bool> escapes;

    std::size_t position(const MultiIndex& alpha) const;
    MultiIndex index_at(std::size_t pos) const;
};

TruncatedMatrix truncated_matrix(const AlgebraElement& a, std::size_t bound);

/// True iff a and b act identically on every x^[alpha] with all alpha_i < N.
bool agree_on_window(const AlgebraElement& a, const AlgebraElement& b, std::size_t bound);

/// Window bound large enough for an element to reveal itself: 1 + (largest Matrix
/// index) + (largest |shift|) + (largest H-power).
std::size_t faithful_window(const AlgebraElement& a);

/// "c * x1^[a1] x2^[a2]" terms joined by " + "; "0" for zero.
std::string to_string(const DividedPolynomial& p);
DividedPolynomial parse_polynomial(std::string_view text, std::size_t n);

}  // namespace intdiff

#endif
