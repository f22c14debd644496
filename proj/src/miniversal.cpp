#include "dialg/miniversal.hpp"

namespace dialg {

const Cochain& MiniversalState::correction_of(const Monomial& m) const
{
    std::vector<Monomial> mons = base.all_basis_monomials();
    for (size_t i = 0; i < mons.size(); ++i)
        if (mons[i] == m)
            return law.correction(static_cast<int>(i));
    throw input_error("monomial is not part of the retained basis");
}

MiniversalState miniversal_init(const CochainComplex& complex)
{
    const CohomologySpace& h2 = complex.cohomology(2);
    std::vector<std::string> vars;
    for (int i = 1; i <= h2.dim; ++i)
        vars.push_back("t" + std::to_string(i));
    PolyQuotient base(vars, 1);
    LocalAlgebra algebra = base.to_local_algebra();
    DeformationLaw law(algebra, complex.algebra());
    for (int i = 0; i < h2.dim; ++i)
        law.set_correction(i, h2.representatives[i]);
    return MiniversalState(1, std::move(base), std::move(algebra), std::move(law), {});
}

namespace {

// Law over quotient.to_local_algebra() with the given per-monomial corrections
// (monomials absent from the table get zero).
DeformationLaw build_law(const PolyQuotient& quotient, const LocalAlgebra& algebra,
                         const Dialgebra& d,
                         const std::map<Monomial, Cochain, MonGreater>& table)
{
    DeformationLaw law(algebra, d);
    std::vector<Monomial> mons = quotient.all_basis_monomials();
    for (size_t i = 0; i < mons.size(); ++i) {
        auto it = table.find(mons[i]);
        if (it != table.end())
            law.set_correction(static_cast<int>(i), it->second);
    }
    return law;
}

std::map<Monomial, Cochain, MonGreater> correction_table(const MiniversalState& state)
{
    std::map<Monomial, Cochain, MonGreater> table;
    std::vector<Monomial> mons = state.base.all_basis_monomials();
    for (size_t i = 0; i < mons.size(); ++i)
        table.emplace(mons[i], state.law.correction(static_cast<int>(i)));
    return table;
}

} // namespace

MiniversalState miniversal_step(const MiniversalState& state, const CochainComplex& complex,
                                long long budget)
{
    const int k = state.order;
    const Dialgebra& d = complex.algebra();
    std::vector<MiniversalStep> steps = state.steps;

    if (state.base.nvars() == 0) {
        steps.push_back({k + 1, 0, 0});
        return MiniversalState(k + 1, state.base, state.base_algebra, state.law,
                               std::move(steps));
    }

    std::map<Monomial, Cochain, MonGreater> table = correction_table(state);

    // (a) free lift to order k+1 with zero corrections on the new monomials
    PolyQuotient lifted(state.base.vars(), k + 1, state.base.generators());
    {
        long long slots = static_cast<long long>(lifted.all_basis_monomials().size()) *
                          Cochain::basis_size(2, d.dim());
        if (slots > budget)
            throw cap_error("miniversal monomial budget exceeded");
    }
    LocalAlgebra lifted_alg = lifted.to_local_algebra();
    DeformationLaw lifted_law = build_law(lifted, lifted_alg, d, table);

    // (b) the only nonzero axiom defects live in degree k+1
    std::vector<Monomial> lifted_mons = lifted.all_basis_monomials();
    std::vector<Cochain> defects = lifted_law.defect_cochains();
    for (size_t i = 0; i < lifted_mons.size(); ++i)
        if (mon_degree(lifted_mons[i]) <= k && !defects[i].is_zero())
            throw math_error("miniversal step: defect below the current order");

    // (c) split each defect class; harvest one generator per HY³ coordinate
    const int h3 = complex.cohomology(3).dim;
    std::vector<Poly> harvested(h3);
    for (size_t i = 0; i < lifted_mons.size(); ++i) {
        if (mon_degree(lifted_mons[i]) != k + 1)
            continue;
        if (!complex.is_cocycle(defects[i]))
            throw math_error("miniversal step: defect failed the cocycle check");
        std::vector<Rat> cls = complex.class_of(defects[i]);
        for (int h = 0; h < h3; ++h)
            if (cls[h] != 0)
                harvested[h][lifted_mons[i]] = cls[h];
    }
    // inter-reduce the harvested generators over the degree-(k+1) slice
    std::vector<Poly> new_gens;
    {
        const auto& slice = lifted.slice_monomials(k + 1);
        auto index_of = [&](const Monomial& m) {
            auto it = std::lower_bound(slice.begin(), slice.end(), m,
                                       [](const Monomial& a, const Monomial& b) { return a > b; });
            return static_cast<int>(it - slice.begin());
        };
        std::vector<SparseRow> rows;
        for (const Poly& g : harvested) {
            if (g.empty())
                continue;
            std::map<int, Rat> acc;
            for (const auto& [m, c] : g)
                acc[index_of(m)] += c;
            SparseRow row;
            for (auto& [idx, c] : acc)
                if (c != 0)
                    row.push_back({idx, c});
            if (!row.empty())
                rows.push_back(std::move(row));
        }
        Rref red = rref_of_rows(static_cast<int>(slice.size()), rows);
        for (const SparseRow& row : red.rows) {
            Poly g;
            for (const auto& [idx, c] : row)
                g[slice[idx]] = c;
            new_gens.push_back(std::move(g));
        }
    }

    // (d) quotient by the harvested generators and solve for the corrections
    std::vector<Poly> gens = state.base.generators();
    gens.insert(gens.end(), new_gens.begin(), new_gens.end());
    PolyQuotient base(state.base.vars(), k + 1, gens);
    LocalAlgebra algebra = base.to_local_algebra();
    DeformationLaw law = build_law(base, algebra, d, table);
    std::vector<Monomial> mons = base.all_basis_monomials();
    std::vector<Cochain> reduced_defects = law.defect_cochains();
    for (size_t i = 0; i < mons.size(); ++i) {
        if (mon_degree(mons[i]) != k + 1)
            continue;
        std::vector<Rat> cls = complex.class_of(reduced_defects[i]);
        if (!is_zero_vec(cls))
            throw math_error("miniversal step: defect class survived the quotient");
        Cochain neg = reduced_defects[i];
        neg *= Rat(-1);
        auto psi = solve(complex.coboundary_matrix(2), neg.to_dense());
        if (!psi)
            throw math_error("miniversal step: correction system is inconsistent");
        law.set_correction(static_cast<int>(i), Cochain::from_dense(2, d.dim(), *psi));
    }
    if (!law.check().empty())
        throw math_error("miniversal step: extended law failed the axiom check");
    steps.push_back({k + 1, static_cast<int>(new_gens.size()), h3});
    return MiniversalState(k + 1, std::move(base), std::move(algebra), std::move(law),
                           std::move(steps));
}

MiniversalState miniversal(const CochainComplex& complex, int order, long long budget)
{
    if (order < 1)
        throw input_error("miniversal order must be at least 1");
    MiniversalState state = miniversal_init(complex);
    while (state.order < order)
        state = miniversal_step(state, complex, budget);
    return state;
}

} // namespace dialg
