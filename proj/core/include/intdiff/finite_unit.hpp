#ifndef INTDIFF_FINITE_UNIT_HPP
#define INTDIFF_FINITE_UNIT_HPP

#include "intdiff/element.hpp"

namespace intdiff {

/// Inverts a = c(1 + f) with c a nonzero scalar and every monomial of f carrying a
/// Matrix factor in every slot. The finite block 1 + M of a on the multi-indices
/// touched by f is inverted exactly; the identity is kept elsewhere.
///
/// Throws NotFiniteUnitShape when a has another shape and SingularBlock when the
/// block is not invertible.
AlgebraElement try_invert_finite_unit(const AlgebraElement& a);

/// True when a has the shape accepted by try_invert_finite_unit.
bool is_finite_unit_shape(const AlgebraElement& a);

}  // namespace intdiff

#endif
