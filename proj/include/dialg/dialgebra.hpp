#pragma once

#include "dialg/rational.hpp"
#include "dialg/trees.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace dialg {

using Vec = std::vector<Rat>;

struct AxiomViolation {
    int axiom;                // 1..5 as in the defining identities
    std::array<int, 3> triple; // basis indices (i, j, k), 0-based
    Vec defect;               // lhs - rhs on that triple
};

// Finite-dimensional dialgebra given by structure constants for ⊣ and ⊢.
class Dialgebra {
public:
    Dialgebra(int dim, std::vector<std::string> basis_names = {});

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    void set_constant(Op op, int i, int j, int k, const Rat& value);
    Rat constant(Op op, int i, int j, int k) const;
    const std::map<std::array<int, 3>, Rat>& constants(Op op) const
    {
        return op == Op::Left ? left_ : right_;
    }

    // e_i op e_j as a sparse vector of (k, coefficient).
    const std::vector<std::pair<int, Rat>>& basis_product(Op op, int i, int j) const;

    Vec product(Op op, const Vec& x, const Vec& y) const;

    // Empty iff all five axioms hold on all basis triples.
    std::vector<AxiomViolation> validate() const;

    // Oriented defect of the axiom attached to 3-tree y: a ∘₀(y) (b ∘ c) minus
    // (a ∘ b) ∘ₙ(y) c, inner operations read off the faces d₀y and d₃y.
    Vec axiom_defect(const Tree& y, int i, int j, int k) const;

    bool operator==(const Dialgebra& rhs) const
    {
        return dim_ == rhs.dim_ && left_ == rhs.left_ && right_ == rhs.right_;
    }

    // Axiom number 1..5 carried by a 3-tree, in the order of the identities.
    static int axiom_number(const Tree& y);
    static Tree tree_of_axiom(int axiom);
    static Op op_of_2tree(const Tree& y); // [21] ↦ ⊣, [12] ↦ ⊢

private:
    int dim_;
    std::vector<std::string> names_;
    std::map<std::array<int, 3>, Rat> left_, right_;
    // (i,j) ↦ sparse product vector, rebuilt lazily after mutation
    mutable std::vector<std::vector<std::pair<int, Rat>>> table_[2];
    mutable bool table_valid_ = false;
    void build_table() const;
};

} // namespace dialg
