#pragma once

#include "dialg/cochain.hpp"
#include "dialg/dialgebra.hpp"
#include "dialg/localalg.hpp"

#include <array>
#include <optional>
#include <vector>

namespace dialg {

using RatMatrix = std::vector<std::vector<Rat>>; // row-major

// Element of A ⊗ D: one D-coordinate vector per basis element of A
// (index 0 is the unit, 1..r the maximal-ideal basis).
struct TensorElem {
    std::vector<Vec> a;

    static TensorElem zero(int r, int d);
    static TensorElem generator(int r, int d, int j); // 1 ⊗ e_j
    bool is_zero() const;
    TensorElem& operator+=(const TensorElem& rhs);
    TensorElem& operator-=(const TensorElem& rhs);
    bool operator==(const TensorElem& rhs) const { return a == rhs.a; }
};

// Unital augmentation-compatible algebra map A → A' given by the images of
// the maximal-ideal basis.
struct BaseMap {
    LocalAlgebra target;
    std::vector<AVec> images; // images[i] = φ(m_i), unit coefficient 0

    static BaseMap identity(const LocalAlgebra& a);
    bool is_multiplicative(const LocalAlgebra& source) const;
    AVec apply(const LocalAlgebra& source, const AVec& x) const;
};

struct LawViolation {
    int axiom;
    std::array<int, 3> triple;
    int base_index; // -1 for the unit coordinate, otherwise m-basis index
    Vec defect;
};

// Dialgebra structure on A ⊗ D stored through corrections on generators:
// (1⊗x) ∘_λ (1⊗y) = 1⊗(x∘y) + Σ_i m_i ⊗ c_i(y_∘; x, y) with y_⊣ = [21],
// y_⊢ = [12]; everything else follows by A-bilinearity.
class DeformationLaw {
public:
    DeformationLaw(LocalAlgebra base, Dialgebra algebra); // trivial corrections

    const LocalAlgebra& base() const { return base_; }
    const Dialgebra& algebra() const { return D_; }
    int mdim() const { return base_.mdim(); }

    const Cochain& correction(int i) const { return corr_.at(i); }
    void set_correction(int i, Cochain c);

    TensorElem product(Op op, const TensorElem& x, const TensorElem& y) const;
    TensorElem generator(int j) const
    {
        return TensorElem::generator(base_.mdim(), D_.dim(), j);
    }

    // Expands the five axioms on generator triples, coefficients per base
    // monomial; empty iff the law is a dialgebra structure on A ⊗ D.
    std::vector<LawViolation> check() const;

    // The oriented axiom defect organised as one 3-cochain per m-basis
    // element. Throws if the unit coefficient of any defect is nonzero.
    std::vector<Cochain> defect_cochains() const;

    bool operator==(const DeformationLaw& rhs) const
    {
        return base_ == rhs.base_ && D_ == rhs.D_ && corr_ == rhs.corr_;
    }

    static int y2_index(Op op);

private:
    LocalAlgebra base_;
    Dialgebra D_;
    std::vector<Cochain> corr_;
    std::vector<AVec> basis_mul_; // cached products of base basis pairs
    const AVec& basis_product(int alpha, int beta) const;
};

// ξ-component of the deformed products; a 2-cocycle when 𝔪² = 0.
Cochain alpha_cocycle(const DeformationLaw& law, const std::vector<Rat>& xi);

// η_D over K ⊕ HY²(D,D)′ with the echelon representatives as corrections.
DeformationLaw universal_infinitesimal(const CochainComplex& complex);

DeformationLaw push_out(const DeformationLaw& law, const BaseMap& phi);

// Matrix of a_λ: 𝔪′ → HY²(D,D); column i is the class of α_{λ,ξ_i}.
RatMatrix infinitesimal_class(const DeformationLaw& law, const CochainComplex& complex);

// Equivalence over a common infinitesimal base; the witness gives
// ρ(1⊗x) = 1⊗x + Σ m_i ⊗ φ_i(x) carrying law1 onto law2.
std::optional<std::vector<Cochain>> equivalent_infinitesimal(const DeformationLaw& law1,
                                                             const DeformationLaw& law2,
                                                             const CochainComplex& complex);

// Applies ρ(1⊗x) = 1⊗x + Σ m_i ⊗ φ_i(x), extended A-linearly.
TensorElem apply_rho(const LocalAlgebra& base, const std::vector<Cochain>& phis,
                     const TensorElem& x);

// dλ: TA → HY²(D,D) via the push-out to A/𝔪²; columns follow the
// tangent-space coordinate basis of the base.
RatMatrix differential(const DeformationLaw& law, const CochainComplex& complex);

// Lifting actions over an extension of the base by K.
DeformationLaw act_by_cocycle(const DeformationLaw& law, const AlgExtension& ext,
                              const Cochain& c, const CochainComplex& complex);

struct DifferenceClass {
    Cochain cocycle;        // kernel-coordinate difference of the corrections
    std::vector<Rat> cls;   // its class in HY²(D,D)
};

DifferenceClass difference_class(const DeformationLaw& law1, const DeformationLaw& law2,
                                 const AlgExtension& ext, const CochainComplex& complex);

// Push-out along the coordinate projection p of the extension.
DeformationLaw push_to_base(const DeformationLaw& law, const AlgExtension& ext);

// Push-out along an extension automorphism r(b) = b + i(h(p(b))).
DeformationLaw push_by_automorphism(const DeformationLaw& law, const AlgExtension& ext,
                                    const ExtensionAutomorphism& aut);

} // namespace dialg
