#pragma once

#include "dialg/deformation.hpp"
#include "dialg/polyquot.hpp"

#include <vector>

namespace dialg {

struct MiniversalStep {
    int order = 0;
    int harvested = 0; // ideal generators added at this order
    int hy3_dim = 0;
};

// Truncated miniversal deformation: base K[[t_1..t_n]]/(I, m^(order+1)) with
// n = dim HY²(D,D), plus the law's correction table on the retained monomials.
struct MiniversalState {
    int order;
    PolyQuotient base;
    LocalAlgebra base_algebra; // base.to_local_algebra()
    DeformationLaw law;        // over base_algebra
    std::vector<MiniversalStep> steps;

    MiniversalState(int order_, PolyQuotient base_, LocalAlgebra algebra_, DeformationLaw law_,
                    std::vector<MiniversalStep> steps_)
        : order(order_), base(std::move(base_)), base_algebra(std::move(algebra_)),
          law(std::move(law_)), steps(std::move(steps_))
    {
    }

    const Cochain& correction_of(const Monomial& m) const;
};

inline constexpr long long default_monomial_budget = 100000;

MiniversalState miniversal_init(const CochainComplex& complex);

// Order k → k+1: lift freely, split the degree-(k+1) defects into a solvable
// coboundary part and a harvested HY³ part, quotient, and re-solve.
MiniversalState miniversal_step(const MiniversalState& state, const CochainComplex& complex,
                                long long budget = default_monomial_budget);

MiniversalState miniversal(const CochainComplex& complex, int order,
                           long long budget = default_monomial_budget);

} // namespace dialg
