#include "dialg/cochain.hpp"

#include <atomic>
#include <thread>

namespace dialg {

namespace {

std::atomic<int> g_threads{1};

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

void set_thread_count(int n)
{
    g_threads.store(n < 1 ? 1 : n);
}

int thread_count()
{
    return g_threads.load();
}

Cochain::Cochain(int degree, int dim) : degree_(degree), dim_(dim)
{
    if (degree < 0 || dim < 1)
        throw input_error("invalid cochain degree or dimension");
}

long long Cochain::basis_size(int degree, int dim)
{
    return catalan(degree) * ipow(dim, degree + 1);
}

long long Cochain::flat_index(int degree, int dim, int tree, const std::vector<int>& multi, int k)
{
    if (static_cast<int>(multi.size()) != degree)
        throw input_error("cochain multi-index length mismatch");
    if (tree < 0 || tree >= catalan(degree) || k < 0 || k >= dim)
        throw input_error("cochain index out of range");
    long long rank = 0;
    for (int a : multi) {
        if (a < 0 || a >= dim)
            throw input_error("cochain multi-index out of range");
        rank = rank * dim + a;
    }
    return (tree * ipow(dim, degree) + rank) * dim + k;
}

Rat Cochain::coef(int tree, const std::vector<int>& multi, int k) const
{
    auto it = c_.find(flat_index(degree_, dim_, tree, multi, k));
    return it == c_.end() ? Rat(0) : it->second;
}

void Cochain::set(int tree, const std::vector<int>& multi, int k, const Rat& v)
{
    long long idx = flat_index(degree_, dim_, tree, multi, k);
    if (v == 0)
        c_.erase(idx);
    else
        c_[idx] = v;
}

void Cochain::add(int tree, const std::vector<int>& multi, int k, const Rat& v)
{
    if (v == 0)
        return;
    long long idx = flat_index(degree_, dim_, tree, multi, k);
    auto [it, inserted] = c_.emplace(idx, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            c_.erase(it);
    }
}

Vec Cochain::eval_basis(int tree, const std::vector<int>& multi) const
{
    Vec out(dim_, Rat(0));
    long long base = flat_index(degree_, dim_, tree, multi, 0);
    for (int k = 0; k < dim_; ++k) {
        auto it = c_.find(base + k);
        if (it != c_.end())
            out[k] = it->second;
    }
    return out;
}

Vec Cochain::eval(const Tree& y, const std::vector<Vec>& args) const
{
    if (y.vertices() != degree_ || static_cast<int>(args.size()) != degree_)
        throw input_error("cochain evaluated at wrong degree");
    int tree = tree_index(y);
    Vec out(dim_, Rat(0));
    std::vector<int> multi(degree_, 0);
    // iterate over all basis multi-indices, weighting by the argument coords
    while (true) {
        Rat w(1);
        for (int t = 0; t < degree_; ++t) {
            w *= args[t][multi[t]];
            if (w == 0)
                break;
        }
        if (w != 0) {
            long long base = flat_index(degree_, dim_, tree, multi, 0);
            for (int k = 0; k < dim_; ++k) {
                auto it = c_.find(base + k);
                if (it != c_.end())
                    out[k] += w * it->second;
            }
        }
        int t = degree_ - 1;
        for (; t >= 0; --t) {
            if (++multi[t] < dim_)
                break;
            multi[t] = 0;
        }
        if (t < 0)
            break;
    }
    return out;
}

std::vector<Rat> Cochain::to_dense() const
{
    std::vector<Rat> v(basis_size(degree_, dim_), Rat(0));
    for (const auto& [idx, val] : c_)
        v[idx] = val;
    return v;
}

Cochain Cochain::from_dense(int degree, int dim, const std::vector<Rat>& v)
{
    if (static_cast<long long>(v.size()) != basis_size(degree, dim))
        throw input_error("dense cochain vector has the wrong length");
    Cochain f(degree, dim);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            f.c_[static_cast<long long>(i)] = v[i];
    return f;
}

Cochain& Cochain::operator+=(const Cochain& rhs)
{
    if (rhs.degree_ != degree_ || rhs.dim_ != dim_)
        throw input_error("cochain shape mismatch");
    for (const auto& [idx, val] : rhs.c_) {
        auto [it, inserted] = c_.emplace(idx, val);
        if (!inserted) {
            it->second += val;
            if (it->second == 0)
                c_.erase(it);
        }
    }
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs)
{
    if (rhs.degree_ != degree_ || rhs.dim_ != dim_)
        throw input_error("cochain shape mismatch");
    for (const auto& [idx, val] : rhs.c_) {
        auto [it, inserted] = c_.emplace(idx, -val);
        if (!inserted) {
            it->second -= val;
            if (it->second == 0)
                c_.erase(it);
        }
    }
    return *this;
}

Cochain& Cochain::operator*=(const Rat& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& [idx, val] : c_)
        val *= s;
    return *this;
}

CochainComplex::CochainComplex(Dialgebra d) : D_(std::move(d)) {}

long long CochainComplex::dim_cy(int n) const
{
    if (n < 0)
        throw input_error("cochain degree must be non-negative");
    if (n > degree_cap)
        throw cap_error("cochain complex is constructed through degree 4 only");
    return Cochain::basis_size(n, D_.dim());
}

SparseMatrix CochainComplex::assemble(int n) const
{
    const int d = D_.dim();
    const auto& rows_trees = enumerate_trees(n + 1);
    SparseMatrix m(static_cast<int>(dim_cy(n + 1)), static_cast<int>(dim_cy(n)));

    std::vector<int> col_of_tree(rows_trees.size() * (n + 2));
    std::vector<Op> op_of_index(rows_trees.size() * (n + 2));
    for (size_t t = 0; t < rows_trees.size(); ++t)
        for (int i = 0; i <= n + 1; ++i) {
            col_of_tree[t * (n + 2) + i] = tree_index(rows_trees[t].face(i));
            op_of_index[t * (n + 2) + i] = rows_trees[t].circ(i);
        }

    auto emit_tree = [&](size_t t, std::vector<std::tuple<int, int, Rat>>& out) {
        std::vector<int> a(n + 1, 0);
        while (true) {
            for (int i = 0; i <= n + 1; ++i) {
                Op op = op_of_index[t * (n + 2) + i];
                int face = col_of_tree[t * (n + 2) + i];
                Rat sign((i % 2 == 0) ? 1 : -1);
                if (i == 0) {
                    std::vector<int> cm(a.begin() + 1, a.end());
                    for (int kp = 0; kp < d; ++kp) {
                        long long col = Cochain::flat_index(n, d, face, cm, kp);
                        for (const auto& [k, v] : D_.basis_product(op, a[0], kp)) {
                            long long row =
                                Cochain::flat_index(n + 1, d, static_cast<int>(t), a, k);
                            out.emplace_back(static_cast<int>(row), static_cast<int>(col),
                                             sign * v);
                        }
                    }
                } else if (i <= n) {
                    std::vector<int> cm;
                    cm.reserve(n);
                    for (int s = 0; s < i - 1; ++s)
                        cm.push_back(a[s]);
                    cm.push_back(0); // placeholder for the product index
                    for (int s = i + 1; s <= n; ++s)
                        cm.push_back(a[s]);
                    for (const auto& [mid, v] : D_.basis_product(op, a[i - 1], a[i])) {
                        cm[i - 1] = mid;
                        for (int k = 0; k < d; ++k) {
                            long long row =
                                Cochain::flat_index(n + 1, d, static_cast<int>(t), a, k);
                            long long col = Cochain::flat_index(n, d, face, cm, k);
                            out.emplace_back(static_cast<int>(row), static_cast<int>(col),
                                             sign * v);
                        }
                    }
                } else {
                    std::vector<int> cm(a.begin(), a.end() - 1);
                    for (int kp = 0; kp < d; ++kp) {
                        long long col = Cochain::flat_index(n, d, face, cm, kp);
                        for (const auto& [k, v] : D_.basis_product(op, kp, a[n])) {
                            long long row =
                                Cochain::flat_index(n + 1, d, static_cast<int>(t), a, k);
                            out.emplace_back(static_cast<int>(row), static_cast<int>(col),
                                             sign * v);
                        }
                    }
                }
            }
            int t2 = n;
            for (; t2 >= 0; --t2) {
                if (++a[t2] < d)
                    break;
                a[t2] = 0;
            }
            if (t2 < 0)
                break;
        }
    };

    const int nthreads = std::min<int>(thread_count(), static_cast<int>(rows_trees.size()));
    std::vector<std::vector<std::tuple<int, int, Rat>>> parts(rows_trees.size());
    if (nthreads <= 1) {
        for (size_t t = 0; t < rows_trees.size(); ++t)
            emit_tree(t, parts[t]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back([&] {
                for (size_t t = next.fetch_add(1); t < rows_trees.size(); t = next.fetch_add(1))
                    emit_tree(t, parts[t]);
            });
        for (auto& th : pool)
            th.join();
    }
    for (const auto& part : parts)
        for (const auto& [r, c, v] : part)
            m.add(r, c, v);
    return m;
}

const SparseMatrix& CochainComplex::coboundary_matrix(int n) const
{
    if (n < 0)
        throw input_error("cochain degree must be non-negative");
    if (n + 1 > degree_cap)
        throw cap_error("cochain complex is constructed through degree 4 only");
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = delta_.find(n);
    if (it == delta_.end())
        it = delta_.emplace(n, assemble(n)).first;
    return it->second;
}

Cochain CochainComplex::coboundary(const Cochain& f) const
{
    if (f.dim() != D_.dim())
        throw input_error("cochain dimension does not match the dialgebra");
    const SparseMatrix& m = coboundary_matrix(f.degree());
    return Cochain::from_dense(f.degree() + 1, D_.dim(), m.apply(f.to_dense()));
}

const CohomologySpace& CochainComplex::cohomology(int n) const
{
    if (n < 0)
        throw input_error("cochain degree must be non-negative");
    if (n + 1 > degree_cap)
        throw cap_error("cohomology is available for degrees 0..3 only");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = coh_.find(n);
        if (it != coh_.end())
            return it->second;
    }
    Subspace z = kernel(coboundary_matrix(n));
    Subspace b = n == 0 ? Subspace(static_cast<int>(dim_cy(0))) : image(coboundary_matrix(n - 1));
    CohomologySpace space;
    space.degree = n;
    space.cocycles = std::move(z);
    space.coboundaries = std::move(b);
    space.classes = QuotientMap(space.cocycles, space.coboundaries);
    space.dim = space.classes.dim();
    for (int i = 0; i < space.dim; ++i)
        space.representatives.push_back(
            Cochain::from_dense(n, D_.dim(), space.classes.complement_vector(i)));
    std::lock_guard<std::mutex> lock(mutex_);
    return coh_.emplace(n, std::move(space)).first->second;
}

bool CochainComplex::is_cocycle(const Cochain& f) const
{
    if (f.dim() != D_.dim())
        throw input_error("cochain dimension does not match the dialgebra");
    return coboundary(f).is_zero();
}

std::vector<Rat> CochainComplex::class_of(const Cochain& f) const
{
    if (!is_cocycle(f))
        throw math_error("class_of requires a cocycle");
    return cohomology(f.degree()).classes.coords(f.to_dense());
}

Cochain CochainComplex::representative_combination(int n, const std::vector<Rat>& coords) const
{
    const CohomologySpace& h = cohomology(n);
    if (static_cast<int>(coords.size()) != h.dim)
        throw input_error("class coordinate length mismatch");
    Cochain out(n, D_.dim());
    for (int i = 0; i < h.dim; ++i)
        if (coords[i] != 0)
            out += coords[i] * h.representatives[i];
    return out;
}

} // namespace dialg
