#ifndef INTDIFF_INTDIFF_HPP
#define INTDIFF_INTDIFF_HPP

#include "intdiff/automorphism.hpp"
#include "intdiff/element.hpp"
#include "intdiff/error.hpp"
#include "intdiff/finite_unit.hpp"
#include "intdiff/ideal.hpp"
#include "intdiff/laurent.hpp"
#include "intdiff/linalg.hpp"
#include "intdiff/membership.hpp"
#include "intdiff/monomial.hpp"
#include "intdiff/parse.hpp"
#include "intdiff/permutation.hpp"
#include "intdiff/poly_module.hpp"
#include "intdiff/quotient.hpp"
#include "intdiff/scalar.hpp"

#endif
