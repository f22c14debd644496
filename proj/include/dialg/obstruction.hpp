#pragma once

#include "dialg/deformation.hpp"

#include <optional>
#include <vector>

namespace dialg {

// The lifted operations { , }_⊣, { , }_⊢ on B ⊗ D: λ's corrections carried
// through the splitting q, an optional 2-cochain χ in the kernel coordinate.
// They satisfy P{l1,l2}_* = P(l1) *_λ P(l2) and {I(l), l1}_* = I[l * E(l1)].
struct LiftedOps {
    AlgExtension ext;
    DeformationLaw ops; // deformation-law presentation over ext.total

    TensorElem apply(Op op, const TensorElem& l1, const TensorElem& l2) const
    {
        return ops.product(op, l1, l2);
    }
};

LiftedOps lift_ops(const DeformationLaw& law, const AlgExtension& ext,
                   const Cochain* chi = nullptr);

// The χ induced by replacing the splitting q with q' = q + i∘g.
Cochain splitting_shift(const DeformationLaw& law, const std::vector<Rat>& g);

// Reduced defect cochain φ̄ ∈ CY³(D,D) of the lifted operations; checks that
// all five defects land in ker P and that δφ̄ = 0.
Cochain obstruction_defect(const DeformationLaw& law, const AlgExtension& ext,
                           const CochainComplex& complex, const Cochain* chi = nullptr);

struct ObstructionResult {
    Cochain defect;                        // φ̄
    std::vector<Rat> cls;                  // class in HY³(D,D)
    bool extendible = false;               // class = 0
    std::optional<Cochain> psi;            // correcting 2-cochain when extendible
    std::optional<DeformationLaw> extended; // law over B with p_* = λ
};

ObstructionResult obstruction_class(const DeformationLaw& law, const AlgExtension& ext,
                                    const CochainComplex& complex,
                                    const Cochain* chi = nullptr);

// 𝕆_λ: H²_Harr(A;K) → HY³(D,D), one column per Harrison representative.
struct ObstructionMap {
    HarrisonH2 h2;
    RatMatrix matrix; // hy3.dim rows × h2.dim columns
};

ObstructionMap obstruction_map(const DeformationLaw& law, const CochainComplex& complex);

} // namespace dialg
