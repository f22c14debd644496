#pragma once

#include "dialg/dialgebra.hpp"
#include "dialg/linalg.hpp"
#include "dialg/trees.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace dialg {

// Element of CY^n(D,D) = Hom(K[Y_n] ⊗ D^⊗n, D), stored sparsely on the
// canonical monomial basis: trees in label order (outer), argument
// multi-indices lexicographic (middle), output coordinate (inner).
class Cochain {
public:
    Cochain(int degree, int dim);

    int degree() const { return degree_; }
    int dim() const { return dim_; }

    static long long basis_size(int degree, int dim);
    static long long flat_index(int degree, int dim, int tree, const std::vector<int>& multi,
                                int k);

    Rat coef(int tree, const std::vector<int>& multi, int k) const;
    void set(int tree, const std::vector<int>& multi, int k, const Rat& v);
    void add(int tree, const std::vector<int>& multi, int k, const Rat& v);

    // f(y; e_{multi[0]}, ..., e_{multi[n-1]}) as a coordinate vector.
    Vec eval_basis(int tree, const std::vector<int>& multi) const;
    // Multilinear evaluation on arbitrary arguments.
    Vec eval(const Tree& y, const std::vector<Vec>& args) const;

    const std::map<long long, Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    std::vector<Rat> to_dense() const;
    static Cochain from_dense(int degree, int dim, const std::vector<Rat>& v);

    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator-=(const Cochain& rhs);
    Cochain& operator*=(const Rat& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rat& s, Cochain a) { return a *= s; }
    bool operator==(const Cochain& rhs) const
    {
        return degree_ == rhs.degree_ && dim_ == rhs.dim_ && c_ == rhs.c_;
    }

private:
    int degree_, dim_;
    std::map<long long, Rat> c_;
};

struct CohomologySpace {
    int degree = 0;
    int dim = 0;
    Subspace cocycles;
    Subspace coboundaries;
    QuotientMap classes; // cocycle ↦ coordinates on the representative basis
    std::vector<Cochain> representatives;
};

// The complex CY^*(D,D) with its coboundary matrices and cohomology,
// constructed through degree 4 (HY^n available for n ≤ 3).
class CochainComplex {
public:
    static constexpr int degree_cap = 4;

    explicit CochainComplex(Dialgebra d);

    const Dialgebra& algebra() const { return D_; }
    int dim() const { return D_.dim(); }
    long long dim_cy(int n) const;

    // Matrix of δ: CY^n → CY^{n+1}; requires n+1 ≤ 4.
    const SparseMatrix& coboundary_matrix(int n) const;
    Cochain coboundary(const Cochain& f) const;

    const CohomologySpace& cohomology(int n) const;
    bool is_cocycle(const Cochain& f) const;
    std::vector<Rat> class_of(const Cochain& f) const; // throws on non-cocycles

    Cochain representative_combination(int n, const std::vector<Rat>& coords) const;

private:
    Dialgebra D_;
    mutable std::map<int, SparseMatrix> delta_;
    mutable std::map<int, CohomologySpace> coh_;
    mutable std::mutex mutex_;
    SparseMatrix assemble(int n) const;
};

// Worker threads used for coboundary assembly; 1 by default.
void set_thread_count(int n);
int thread_count();

} // namespace dialg
