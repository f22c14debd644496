#pragma once

#include "dialg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace dialg {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rat>>;

class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rat& v);
    void add(int r, int c, const Rat& v);
    Rat at(int r, int c) const;
    const SparseRow& row(int r) const { return data_[r]; }

    long long nnz() const;
    bool is_zero() const { return nnz() == 0; }

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    std::vector<Rat> apply(const std::vector<Rat>& x) const;

private:
    int rows_, cols_;
    std::vector<SparseRow> data_;
    void check(int r, int c) const;
};

// Reduced row echelon form. Rows have strictly increasing pivot columns,
// pivot entries are 1 and are the only nonzero entries in their column.
struct Rref {
    int cols = 0;
    std::vector<SparseRow> rows;
    std::vector<int> pivots;

    int rank() const { return static_cast<int>(rows.size()); }
    // Eliminates the pivot coordinates of v; result is v modulo the row span.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
};

// Fraction-free (Bareiss-style) forward elimination over the integers with
// content removal, normalized to rational RREF at the end. Deterministic:
// pivot = first row whose leading entry sits in the lowest unresolved column.
Rref rref_of_rows(int cols, const std::vector<SparseRow>& rows);
Rref rref(const SparseMatrix& m);

class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(int ambient) : ambient_(ambient) {}

    static Subspace from_rows(int ambient, const std::vector<SparseRow>& vectors);
    static Subspace from_vectors(int ambient, const std::vector<std::vector<Rat>>& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return echelon_.rank(); }
    const Rref& echelon() const { return echelon_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;
    std::vector<Rat> basis_vector(int i) const;

    bool operator==(const Subspace& rhs) const;

private:
    int ambient_;
    Rref echelon_;
};

int rank(const SparseMatrix& m);
Subspace kernel(const SparseMatrix& m);
Subspace image(const SparseMatrix& m);

// Some x with Mx = b, free coordinates set to zero; nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const SparseMatrix& m, const std::vector<Rat>& b);

// Coordinates on a chosen complement of W inside V; vanishes exactly on W.
class QuotientMap {
public:
    QuotientMap() = default;
    QuotientMap(const Subspace& v, const Subspace& w); // throws math_error if W ⊄ V

    int dim() const { return static_cast<int>(comp_pivots_.size()); }
    int ambient() const { return space_.ambient(); }
    const Subspace& space() const { return space_; }
    const Subspace& subspace() const { return sub_; }

    std::vector<Rat> coords(const std::vector<Rat>& v) const; // throws if v ∉ V
    std::vector<Rat> complement_vector(int i) const;

private:
    Subspace space_, sub_;
    std::vector<SparseRow> comp_;
    std::vector<int> comp_pivots_;
};

inline bool is_zero_vec(const std::vector<Rat>& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace dialg
