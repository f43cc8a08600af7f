#include "intdiff/membership.hpp"

#include "intdiff/error.hpp"

namespace intdiff {

bool is_in_ideal(const AlgebraElement& a, const IdealDescriptor& ideal)
{
    if (a.dim() != ideal.dim())
        throw AlgebraError(ErrorCode::DimensionMismatch, "element and ideal dimensions differ");
    for (const auto& [m, c] : a.terms())
        if (!contains_monomial_pattern(ideal, matrix_slots(m)))
            return false;
    return true;
}

IdealDescriptor generated_ideal(const AlgebraElement& a)
{
    const std::size_t n = a.dim();
    IdealDescriptor acc = IdealDescriptor::zero(n);
    for (const auto& [m, c] : a.terms()) {
        Subset slots = matrix_slots(m);
        if (slots == 0)
            return IdealDescriptor::whole(n);
        std::vector<Subset> singles;
        for (std::size_t i = 0; i < n; ++i)
            if (slots & (Subset{1} << i))
                singles.push_back(Subset{1} << i);
        acc = ideal_sum(acc, IdealDescriptor::from_min_primes(n, std::move(singles)));
    }
    return acc;
}

}  // namespace intdiff
