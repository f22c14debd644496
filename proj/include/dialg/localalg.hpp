#pragma once

#include "dialg/linalg.hpp"
#include "dialg/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dialg {

// Element of an augmented local algebra in coordinates (unit, m_1..m_r).
using AVec = std::vector<Rat>;

// Finite-dimensional commutative unital augmented local algebra with basis
// {1, m_1..m_r}; the m_i span the maximal ideal and ε kills them.
class LocalAlgebra {
public:
    LocalAlgebra() = default; // A = K
    explicit LocalAlgebra(std::vector<std::string> mideal_names);

    static LocalAlgebra field() { return LocalAlgebra(); }
    // K[t]/(t^(n+1)) with m-basis t, t^2, ..., t^n.
    static LocalAlgebra truncated_polynomial(int n, const std::string& var = "t");

    int mdim() const { return r_; }
    int dim() const { return r_ + 1; }
    const std::vector<std::string>& mideal_names() const { return names_; }
    int name_index(const std::string& name) const;

    void set_product(int i, int j, int k, const Rat& v); // sets both (i,j) and (j,i)
    Rat product_constant(int i, int j, int k) const;
    const std::vector<std::pair<int, Rat>>& m_product(int i, int j) const;
    const std::map<std::array<int, 3>, Rat>& products() const { return prod_; }

    AVec unit() const;
    AVec m_basis_vec(int i) const;
    AVec mul(const AVec& a, const AVec& b) const;
    Rat aug(const AVec& a) const { return a.at(0); }

    // Structural problems: asymmetry, associativity failures, non-nilpotence.
    std::vector<std::string> validate() const;

    Subspace msquare() const;       // span of m_i m_j inside K^r
    bool is_infinitesimal() const;  // 𝔪² = 0
    bool is_nilpotent() const;

    bool operator==(const LocalAlgebra& rhs) const
    {
        return r_ == rhs.r_ && prod_ == rhs.prod_;
    }

private:
    int r_ = 0;
    std::vector<std::string> names_;
    std::map<std::array<int, 3>, Rat> prod_;
    mutable std::vector<std::vector<std::pair<int, Rat>>> table_;
    mutable bool table_valid_ = false;
    void build_table() const;
};

// TA = (𝔪/𝔪²)′ with an explicit dual basis on the m-coordinates.
struct TangentSpace {
    int dim = 0;
    // Each functional as its value vector on (m_1..m_r).
    std::vector<std::vector<Rat>> dual_basis;
    QuotientMap coords; // m-coordinates ↦ 𝔪/𝔪² coordinates
};

TangentSpace tangent_space(const LocalAlgebra& a);

// Derivations A → K (ε-action): functionals on 𝔪 vanishing on 𝔪².
Subspace harrison_h1(const LocalAlgebra& a);
// Derivations A → A: pairs of matrices are returned as stacked row vectors
// h(m_j) ∈ A, flattened; ambient dimension r·(r+1).
Subspace harrison_h1_adjoint(const LocalAlgebra& a);

// Symmetric bilinear form on 𝔪 packed as the upper triangle i ≤ j.
struct SymBilinear {
    int r = 0;
    std::vector<Rat> packed;

    SymBilinear() = default;
    explicit SymBilinear(int r_) : r(r_), packed(static_cast<size_t>(r_) * (r_ + 1) / 2, Rat(0))
    {
    }
    static int pos(int r, int i, int j);
    Rat operator()(int i, int j) const { return packed[pos(r, i, j)]; }
    void set(int i, int j, const Rat& v) { packed[pos(r, i, j)] = v; }
    // f(x, y) for x, y ∈ 𝔪 given in m-coordinates.
    Rat eval(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
};

bool is_harrison_cocycle(const LocalAlgebra& a, const SymBilinear& f);

struct HarrisonH2 {
    int dim = 0;
    Subspace cocycles;     // packed coordinates
    Subspace coboundaries; // packed coordinates
    QuotientMap classes;
    std::vector<SymBilinear> representatives;

    std::vector<Rat> class_of(const SymBilinear& f) const;
};

HarrisonH2 harrison_h2(const LocalAlgebra& a);

// δh for linear h: 𝔪 → K, i.e. (i,j) ↦ -h(m_i m_j).
SymBilinear harrison_coboundary(const LocalAlgebra& a, const std::vector<Rat>& h);

// 0 → K → B → A → 0 realized on B = A ⊕ K with the splitting q as the
// coordinate section; the kernel generator is the last m-basis vector of B.
struct AlgExtension {
    LocalAlgebra base;  // A
    LocalAlgebra total; // B
    int kernel_index = 0;
    SymBilinear cocycle;

    AVec p(const AVec& b) const; // projection B → A
    AVec q(const AVec& a) const; // section A → B
    AVec inj(const Rat& x) const; // i: K → B
};

AlgExtension extension_from_cocycle(const LocalAlgebra& a, const SymBilinear& f);

// One generator per basis derivation h: r(b) = b + i(h(p(b))).
struct ExtensionAutomorphism {
    std::vector<Rat> h; // functional on the base's maximal ideal
    AVec apply(const AlgExtension& ext, const AVec& b) const;
};

std::vector<ExtensionAutomorphism> extension_automorphisms(const AlgExtension& ext);

// Equivalence of two extensions of the same base (the commuting-diagram
// condition); returns the map on the section coordinates when it exists.
std::optional<std::vector<Rat>> extension_equivalence(const AlgExtension& e1,
                                                      const AlgExtension& e2);

// A/𝔪² together with the projection of the m-coordinates.
struct InfinitesimalQuotient {
    LocalAlgebra algebra;
    std::vector<std::vector<Rat>> projection; // rows: new coords of each m_j
};

InfinitesimalQuotient infinitesimal_quotient(const LocalAlgebra& a);

} // namespace dialg
