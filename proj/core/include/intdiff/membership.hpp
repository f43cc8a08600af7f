#ifndef INTDIFF_MEMBERSHIP_HPP
#define INTDIFF_MEMBERSHIP_HPP

#include "intdiff/element.hpp"
#include "intdiff/ideal.hpp"

namespace intdiff {

/// Every ideal is spanned by canonical basis monomials, so membership is decided
/// monomial by monomial from the pattern of Matrix slots.
bool is_in_ideal(const AlgebraElement& a, const IdealDescriptor& ideal);

/// The two-sided ideal generated by a: the sum over monomials m of the
/// intersection of p_i over the Matrix slots i of m.
IdealDescriptor generated_ideal(const AlgebraElement& a);

}  // namespace intdiff

#endif
