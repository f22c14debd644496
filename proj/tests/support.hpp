#pragma once

#include "dialg/cochain.hpp"
#include "dialg/dialgebra.hpp"
#include "dialg/fixtures.hpp"
#include "dialg/linalg.hpp"

#include <random>
#include <vector>

namespace dialg::test {

// Independent dense Gaussian elimination over the rationals; used as the
// second route for rank assertions, never shares code with dialg::rref.
inline int dense_rank(std::vector<std::vector<Rat>> m)
{
    if (m.empty())
        return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        Rat inv = Rat(1) / m[rank][col];
        for (size_t c = col; c < cols; ++c)
            m[rank][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0)
                continue;
            Rat f = m[r][col];
            for (size_t c = col; c < cols; ++c)
                m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

inline std::vector<std::vector<Rat>> to_dense(const SparseMatrix& m)
{
    std::vector<std::vector<Rat>> out(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r))
            out[r][c] = v;
    return out;
}

inline Rat small_rat(std::mt19937& rng, int num_range = 4, bool allow_zero = true)
{
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    if (!allow_zero)
        while (n == 0)
            n = num(rng);
    Rat q(n, den(rng));
    q.canonicalize();
    return q;
}

// Invertible rational matrix with small entries.
inline std::vector<std::vector<Rat>> random_gl(std::mt19937& rng, int d)
{
    while (true) {
        std::vector<std::vector<Rat>> g(d, std::vector<Rat>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                g[i][j] = small_rat(rng, 2);
        if (dense_rank(g) == d)
            return g;
    }
}

inline std::vector<std::vector<Rat>> invert(const std::vector<std::vector<Rat>>& g)
{
    const int d = static_cast<int>(g.size());
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(2 * d, Rat(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            m[i][j] = g[i][j];
        m[i][d + i] = 1;
    }
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        while (m[pivot][col] == 0)
            ++pivot;
        std::swap(m[col], m[pivot]);
        Rat inv = Rat(1) / m[col][col];
        for (int c = 0; c < 2 * d; ++c)
            m[col][c] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rat f = m[r][col];
            for (int c = 0; c < 2 * d; ++c)
                m[r][c] -= f * m[col][c];
        }
    }
    std::vector<std::vector<Rat>> out(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out[i][j] = m[i][d + j];
    return out;
}

// Transport a dialgebra along an invertible change of basis; the axioms are
// preserved, so this generates arbitrarily many valid examples from seeds.
inline Dialgebra transport(const Dialgebra& d, const std::vector<std::vector<Rat>>& g)
{
    const int n = d.dim();
    std::vector<std::vector<Rat>> ginv = invert(g);
    Dialgebra out(n);
    for (Op op : {Op::Left, Op::Right})
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Vec gi(n, Rat(0)), gj(n, Rat(0));
                for (int t = 0; t < n; ++t) {
                    gi[t] = g[t][i];
                    gj[t] = g[t][j];
                }
                Vec prod = d.product(op, gi, gj);
                for (int k = 0; k < n; ++k) {
                    Rat c(0);
                    for (int t = 0; t < n; ++t)
                        c += ginv[k][t] * prod[t];
                    if (c != 0)
                        out.set_constant(op, i, j, k, c);
                }
            }
    return out;
}

// The functional family a ⊣ b = φ(b)·a, a ⊢ b = φ(a)·b is a dialgebra for
// every linear functional φ (bar-unit example with φ = ⟨·, e1⟩).
inline Dialgebra functional_dialgebra(int d, const Vec& phi)
{
    Dialgebra out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (phi[j] != 0)
                out.set_constant(Op::Left, i, j, i, phi[j]);
            if (phi[i] != 0)
                out.set_constant(Op::Right, i, j, j, phi[i]);
        }
    return out;
}

// Deterministic pool of valid dialgebras of dimension ≤ 2.
inline Dialgebra random_dialgebra(std::mt19937& rng, int dim)
{
    std::uniform_int_distribution<int> pick(0, 3);
    Dialgebra seed = [&]() -> Dialgebra {
        switch (pick(rng)) {
        case 0:
            return Dialgebra(dim); // zero products
        case 1: {
            // diagonal associative: e_i e_i = e_i
            Dialgebra d(dim);
            for (Op op : {Op::Left, Op::Right})
                for (int i = 0; i < dim; ++i)
                    d.set_constant(op, i, i, i, Rat(1));
            return d;
        }
        case 2:
            return dim == 2 ? fixture("kx2") : Dialgebra(dim);
        default: {
            Vec phi(dim, Rat(0));
            for (int i = 0; i < dim; ++i)
                phi[i] = small_rat(rng, 2);
            return functional_dialgebra(dim, phi);
        }
        }
    }();
    return transport(seed, random_gl(rng, dim));
}

// Random cocycle: a rational combination of the kernel basis of δ_n.
inline Cochain random_cocycle(std::mt19937& rng, const CochainComplex& complex, int degree)
{
    Subspace z = kernel(complex.coboundary_matrix(degree));
    Cochain out(degree, complex.dim());
    for (int i = 0; i < z.dim(); ++i) {
        Rat c = small_rat(rng, 3);
        if (c == 0)
            continue;
        out += c * Cochain::from_dense(degree, complex.dim(), z.basis_vector(i));
    }
    return out;
}

} // namespace dialg::test
