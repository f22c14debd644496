#include "dialg/obstruction.hpp"

namespace dialg {

LiftedOps lift_ops(const DeformationLaw& law, const AlgExtension& ext, const Cochain* chi)
{
    if (!(law.base() == ext.base))
        throw input_error("lift_ops: the law's base must be the extension's base algebra");
    DeformationLaw lifted(ext.total, law.algebra());
    for (int i = 0; i < law.mdim(); ++i)
        lifted.set_correction(i, law.correction(i));
    if (chi) {
        if (chi->degree() != 2 || chi->dim() != law.algebra().dim())
            throw input_error("lift_ops: χ must be a 2-cochain of the dialgebra");
        lifted.set_correction(ext.kernel_index, *chi);
    }
    return {ext, std::move(lifted)};
}

Cochain splitting_shift(const DeformationLaw& law, const std::vector<Rat>& g)
{
    if (static_cast<int>(g.size()) != law.mdim())
        throw input_error("splitting perturbation length mismatch");
    Cochain chi(2, law.algebra().dim());
    for (int i = 0; i < law.mdim(); ++i)
        if (g[i] != 0)
            chi += g[i] * law.correction(i);
    return chi;
}

Cochain obstruction_defect(const DeformationLaw& law, const AlgExtension& ext,
                           const CochainComplex& complex, const Cochain* chi)
{
    LiftedOps lifted = lift_ops(law, ext, chi);
    std::vector<Cochain> defects = lifted.ops.defect_cochains();
    for (int i = 0; i < ext.total.mdim(); ++i)
        if (i != ext.kernel_index && !defects[i].is_zero())
            throw math_error("lifted defect escapes ker P: the law or extension is broken");
    Cochain phibar = defects[ext.kernel_index];
    if (!complex.is_cocycle(phibar))
        throw math_error("reduced defect failed the cocycle check");
    return phibar;
}

ObstructionResult obstruction_class(const DeformationLaw& law, const AlgExtension& ext,
                                    const CochainComplex& complex, const Cochain* chi)
{
    ObstructionResult out{obstruction_defect(law, ext, complex, chi), {}, false, {}, {}};
    out.cls = complex.class_of(out.defect);
    out.extendible = is_zero_vec(out.cls);
    if (!out.extendible)
        return out;
    // δψ = -φ̄ makes the kernel-coordinate correction kill the defect
    Cochain neg = out.defect;
    neg *= Rat(-1);
    auto x = solve(complex.coboundary_matrix(2), neg.to_dense());
    if (!x)
        throw math_error("vanishing obstruction class but no correcting cochain found");
    Cochain psi = Cochain::from_dense(2, law.algebra().dim(), *x);
    DeformationLaw extended = lift_ops(law, ext, chi).ops;
    Cochain kernel_corr = extended.correction(ext.kernel_index) + psi;
    extended.set_correction(ext.kernel_index, kernel_corr);
    if (!extended.check().empty())
        throw math_error("extended law failed the axiom check");
    out.psi = std::move(psi);
    out.extended = std::move(extended);
    return out;
}

ObstructionMap obstruction_map(const DeformationLaw& law, const CochainComplex& complex)
{
    ObstructionMap out;
    out.h2 = harrison_h2(law.base());
    int h3 = complex.cohomology(3).dim;
    out.matrix.assign(h3, std::vector<Rat>(out.h2.dim, Rat(0)));
    for (int c = 0; c < out.h2.dim; ++c) {
        AlgExtension ext = extension_from_cocycle(law.base(), out.h2.representatives[c]);
        Cochain phibar = obstruction_defect(law, ext, complex);
        std::vector<Rat> cls = complex.class_of(phibar);
        for (int row = 0; row < h3; ++row)
            out.matrix[row][c] = cls[row];
    }
    return out;
}

} // namespace dialg
