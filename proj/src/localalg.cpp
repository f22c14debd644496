#include "dialg/localalg.hpp"

#include <algorithm>

namespace dialg {

LocalAlgebra::LocalAlgebra(std::vector<std::string> mideal_names)
    : r_(static_cast<int>(mideal_names.size())), names_(std::move(mideal_names))
{
}

LocalAlgebra LocalAlgebra::truncated_polynomial(int n, const std::string& var)
{
    if (n < 0)
        throw input_error("truncation order must be non-negative");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back(i == 1 ? var : var + "^" + std::to_string(i));
    LocalAlgebra a(names);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n)
                a.set_product(i - 1, j - 1, i + j - 1, Rat(1));
    return a;
}

int LocalAlgebra::name_index(const std::string& name) const
{
    for (int i = 0; i < r_; ++i)
        if (names_[i] == name)
            return i;
    throw input_error("unknown maximal-ideal basis name: '" + name + "'");
}

void LocalAlgebra::set_product(int i, int j, int k, const Rat& v)
{
    if (i < 0 || i >= r_ || j < 0 || j >= r_ || k < 0 || k >= r_)
        throw input_error("local algebra product index out of range");
    if (v == 0) {
        prod_.erase({i, j, k});
        prod_.erase({j, i, k});
    } else {
        prod_[{i, j, k}] = v;
        prod_[{j, i, k}] = v;
    }
    table_valid_ = false;
}

Rat LocalAlgebra::product_constant(int i, int j, int k) const
{
    auto it = prod_.find({i, j, k});
    return it == prod_.end() ? Rat(0) : it->second;
}

void LocalAlgebra::build_table() const
{
    table_.assign(static_cast<size_t>(r_) * r_, {});
    for (const auto& [idx, v] : prod_)
        table_[static_cast<size_t>(idx[0]) * r_ + idx[1]].push_back({idx[2], v});
    table_valid_ = true;
}

const std::vector<std::pair<int, Rat>>& LocalAlgebra::m_product(int i, int j) const
{
    if (!table_valid_)
        build_table();
    return table_[static_cast<size_t>(i) * r_ + j];
}

AVec LocalAlgebra::unit() const
{
    AVec v(r_ + 1, Rat(0));
    v[0] = 1;
    return v;
}

AVec LocalAlgebra::m_basis_vec(int i) const
{
    AVec v(r_ + 1, Rat(0));
    v.at(i + 1) = 1;
    return v;
}

AVec LocalAlgebra::mul(const AVec& a, const AVec& b) const
{
    if (static_cast<int>(a.size()) != r_ + 1 || static_cast<int>(b.size()) != r_ + 1)
        throw input_error("algebra element length mismatch");
    AVec out(r_ + 1, Rat(0));
    out[0] = a[0] * b[0];
    for (int i = 1; i <= r_; ++i)
        out[i] = a[0] * b[i] + a[i] * b[0];
    for (int i = 1; i <= r_; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 1; j <= r_; ++j) {
            if (b[j] == 0)
                continue;
            Rat c = a[i] * b[j];
            for (const auto& [k, v] : m_product(i - 1, j - 1))
                out[k + 1] += c * v;
        }
    }
    return out;
}

std::vector<std::string> LocalAlgebra::validate() const
{
    std::vector<std::string> issues;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < r_; ++k)
                if (product_constant(i, j, k) != product_constant(j, i, k))
                    issues.push_back("product is not commutative at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
    for (int i = 0; i < r_ && issues.empty(); ++i)
        for (int j = 0; j < r_; ++j)
            for (int k = 0; k < r_; ++k) {
                AVec lhs = mul(mul(m_basis_vec(i), m_basis_vec(j)), m_basis_vec(k));
                AVec rhs = mul(m_basis_vec(i), mul(m_basis_vec(j), m_basis_vec(k)));
                for (int t = 0; t <= r_; ++t)
                    if (lhs[t] != rhs[t]) {
                        issues.push_back("product is not associative at (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
                        t = r_;
                    }
            }
    if (!is_nilpotent())
        issues.push_back("maximal ideal is not nilpotent");
    return issues;
}

Subspace LocalAlgebra::msquare() const
{
    std::vector<SparseRow> rows;
    for (int i = 0; i < r_; ++i)
        for (int j = i; j < r_; ++j) {
            const auto& p = m_product(i, j);
            if (!p.empty())
                rows.push_back(SparseRow(p.begin(), p.end()));
        }
    return Subspace::from_rows(r_, rows);
}

bool LocalAlgebra::is_infinitesimal() const
{
    return msquare().dim() == 0;
}

bool LocalAlgebra::is_nilpotent() const
{
    // power spans of 𝔪: stop when zero (nilpotent) or stationary (not)
    Subspace power = Subspace::from_rows(r_, [&] {
        std::vector<SparseRow> rows;
        for (int i = 0; i < r_; ++i)
            rows.push_back({{i, Rat(1)}});
        return rows;
    }());
    while (power.dim() > 0) {
        std::vector<SparseRow> rows;
        for (int b = 0; b < power.dim(); ++b) {
            std::vector<Rat> x = power.basis_vector(b);
            for (int j = 0; j < r_; ++j) {
                AVec xa(r_ + 1, Rat(0));
                for (int t = 0; t < r_; ++t)
                    xa[t + 1] = x[t];
                AVec prod = mul(xa, m_basis_vec(j));
                SparseRow row;
                for (int t = 0; t < r_; ++t)
                    if (prod[t + 1] != 0)
                        row.push_back({t, prod[t + 1]});
                if (!row.empty())
                    rows.push_back(std::move(row));
            }
        }
        Subspace next = Subspace::from_rows(r_, rows);
        if (next.dim() >= power.dim())
            return false;
        power = std::move(next);
    }
    return true;
}

TangentSpace tangent_space(const LocalAlgebra& a)
{
    int r = a.mdim();
    std::vector<SparseRow> full;
    for (int i = 0; i < r; ++i)
        full.push_back({{i, Rat(1)}});
    QuotientMap q(Subspace::from_rows(r, full), a.msquare());
    TangentSpace t;
    t.dim = q.dim();
    for (int i = 0; i < t.dim; ++i)
        t.dual_basis.emplace_back(r, Rat(0));
    for (int j = 0; j < r; ++j) {
        std::vector<Rat> ej(r, Rat(0));
        ej[j] = 1;
        std::vector<Rat> c = q.coords(ej);
        for (int i = 0; i < t.dim; ++i)
            t.dual_basis[i][j] = c[i];
    }
    t.coords = std::move(q);
    return t;
}

Subspace harrison_h1(const LocalAlgebra& a)
{
    int r = a.mdim();
    // h(m_i m_j) = 0 for all pairs
    SparseMatrix m(r * r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (const auto& [k, v] : a.m_product(i, j))
                m.add(i * r + j, k, v);
    return kernel(m);
}

Subspace harrison_h1_adjoint(const LocalAlgebra& a)
{
    // h: 𝔪 → A linear with h(xy) = x·h(y) + h(x)·y; unknowns h(m_j) ∈ A.
    int r = a.mdim();
    int cols = r * (r + 1);
    auto var = [&](int j, int t) { return j * (r + 1) + t; };
    std::vector<SparseRow> rows;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            for (int t = 0; t <= r; ++t) {
                std::map<int, Rat> row;
                // h(m_i m_j) coordinate t
                for (const auto& [k, v] : a.m_product(i, j))
                    row[var(k, t)] += v;
                // -(m_i · h(m_j))_t - (h(m_i) · m_j)_t
                for (int s = 0; s <= r; ++s) {
                    AVec e(r + 1, Rat(0));
                    e[s] = 1;
                    AVec left = a.mul(a.m_basis_vec(i), e);
                    if (left[t] != 0)
                        row[var(j, s)] -= left[t];
                    AVec right = a.mul(e, a.m_basis_vec(j));
                    if (right[t] != 0)
                        row[var(i, s)] -= right[t];
                }
                SparseRow srow;
                for (auto& [c, v] : row)
                    if (v != 0)
                        srow.push_back({c, v});
                if (!srow.empty())
                    rows.push_back(std::move(srow));
            }
        }
    SparseMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i])
            m.add(static_cast<int>(i), c, v);
    return kernel(m);
}

int SymBilinear::pos(int r, int i, int j)
{
    if (i > j)
        std::swap(i, j);
    if (i < 0 || j >= r)
        throw input_error("symmetric form index out of range");
    return i * r - i * (i - 1) / 2 + (j - i);
}

Rat SymBilinear::eval(const std::vector<Rat>& x, const std::vector<Rat>& y) const
{
    Rat out(0);
    for (int i = 0; i < r; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < r; ++j)
            if (y[j] != 0)
                out += x[i] * y[j] * (*this)(i, j);
    }
    return out;
}

bool is_harrison_cocycle(const LocalAlgebra& a, const SymBilinear& f)
{
    int r = a.mdim();
    if (f.r != r)
        return false;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                Rat lhs(0), rhs(0);
                for (const auto& [l, v] : a.m_product(i, j))
                    lhs += v * f(l, k);
                for (const auto& [l, v] : a.m_product(j, k))
                    rhs += v * f(i, l);
                if (lhs != rhs)
                    return false;
            }
    return true;
}

SymBilinear harrison_coboundary(const LocalAlgebra& a, const std::vector<Rat>& h)
{
    int r = a.mdim();
    if (static_cast<int>(h.size()) != r)
        throw input_error("cochain length mismatch");
    SymBilinear out(r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Rat v(0);
            for (const auto& [k, c] : a.m_product(i, j))
                v -= c * h[k];
            out.set(i, j, v);
        }
    return out;
}

HarrisonH2 harrison_h2(const LocalAlgebra& a)
{
    int r = a.mdim();
    int packed = r * (r + 1) / 2;
    // cocycle identity f(m_i m_j, m_k) = f(m_i, m_j m_k) on packed unknowns
    std::vector<SparseRow> rows;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                std::map<int, Rat> row;
                for (const auto& [l, v] : a.m_product(i, j))
                    row[SymBilinear::pos(r, l, k)] += v;
                for (const auto& [l, v] : a.m_product(j, k))
                    row[SymBilinear::pos(r, i, l)] -= v;
                SparseRow srow;
                for (auto& [c, v] : row)
                    if (v != 0)
                        srow.push_back({c, v});
                if (!srow.empty())
                    rows.push_back(std::move(srow));
            }
    SparseMatrix m(static_cast<int>(rows.size()), packed);
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i])
            m.add(static_cast<int>(i), c, v);

    HarrisonH2 h2;
    h2.cocycles = kernel(m);
    std::vector<SparseRow> cob;
    for (int l = 0; l < r; ++l) {
        std::vector<Rat> h(r, Rat(0));
        h[l] = 1;
        SymBilinear b = harrison_coboundary(a, h);
        SparseRow row;
        for (int t = 0; t < packed; ++t)
            if (b.packed[t] != 0)
                row.push_back({t, b.packed[t]});
        if (!row.empty())
            cob.push_back(std::move(row));
    }
    h2.coboundaries = Subspace::from_rows(packed, cob);
    h2.classes = QuotientMap(h2.cocycles, h2.coboundaries);
    h2.dim = h2.classes.dim();
    for (int i = 0; i < h2.dim; ++i) {
        SymBilinear f(r);
        f.packed = h2.classes.complement_vector(i);
        h2.representatives.push_back(std::move(f));
    }
    return h2;
}

std::vector<Rat> HarrisonH2::class_of(const SymBilinear& f) const
{
    return classes.coords(f.packed);
}

AVec AlgExtension::p(const AVec& b) const
{
    AVec out(base.mdim() + 1, Rat(0));
    out[0] = b.at(0);
    for (int i = 0; i < base.mdim(); ++i)
        out[i + 1] = b.at(i + 1);
    return out;
}

AVec AlgExtension::q(const AVec& a) const
{
    AVec out(total.mdim() + 1, Rat(0));
    out[0] = a.at(0);
    for (int i = 0; i < base.mdim(); ++i)
        out[i + 1] = a.at(i + 1);
    return out;
}

AVec AlgExtension::inj(const Rat& x) const
{
    AVec out(total.mdim() + 1, Rat(0));
    out[kernel_index + 1] = x;
    return out;
}

AlgExtension extension_from_cocycle(const LocalAlgebra& a, const SymBilinear& f)
{
    if (!is_harrison_cocycle(a, f))
        throw math_error("extension_from_cocycle: the form is not a Harrison 2-cocycle");
    int r = a.mdim();
    std::vector<std::string> names = a.mideal_names();
    std::string kname = "z";
    while (std::find(names.begin(), names.end(), kname) != names.end())
        kname += "'";
    names.push_back(kname);
    LocalAlgebra b(names);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            for (const auto& [k, v] : a.m_product(i, j))
                b.set_product(i, j, k, v);
            if (f(i, j) != 0)
                b.set_product(i, j, r, f(i, j));
        }
    AlgExtension ext;
    ext.base = a;
    ext.total = std::move(b);
    ext.kernel_index = r;
    ext.cocycle = f;
    return ext;
}

AVec ExtensionAutomorphism::apply(const AlgExtension& ext, const AVec& b) const
{
    AVec out = b;
    Rat add(0);
    for (int i = 0; i < ext.base.mdim(); ++i)
        add += h[i] * b.at(i + 1);
    out[ext.kernel_index + 1] += add;
    return out;
}

std::vector<ExtensionAutomorphism> extension_automorphisms(const AlgExtension& ext)
{
    Subspace h1 = harrison_h1(ext.base);
    std::vector<ExtensionAutomorphism> out;
    for (int i = 0; i < h1.dim(); ++i)
        out.push_back({h1.basis_vector(i)});
    return out;
}

std::optional<std::vector<Rat>> extension_equivalence(const AlgExtension& e1,
                                                      const AlgExtension& e2)
{
    if (!(e1.base == e2.base))
        throw input_error("extension equivalence requires a common base");
    int r = e1.base.mdim();
    // u(m_i m_j) = f2(i,j) - f1(i,j) for a linear u on the maximal ideal
    SparseMatrix m(r * r, r);
    std::vector<Rat> rhs(static_cast<size_t>(r) * r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            for (const auto& [k, v] : e1.base.m_product(i, j))
                m.add(i * r + j, k, v);
            rhs[i * r + j] = e2.cocycle(i, j) - e1.cocycle(i, j);
        }
    return solve(m, rhs);
}

InfinitesimalQuotient infinitesimal_quotient(const LocalAlgebra& a)
{
    int r = a.mdim();
    std::vector<SparseRow> full;
    for (int i = 0; i < r; ++i)
        full.push_back({{i, Rat(1)}});
    QuotientMap q(Subspace::from_rows(r, full), a.msquare());
    int rbar = q.dim();
    std::vector<std::string> names;
    for (int i = 0; i < rbar; ++i)
        names.push_back("c" + std::to_string(i + 1));
    InfinitesimalQuotient out{LocalAlgebra(names), {}};
    for (int j = 0; j < r; ++j) {
        std::vector<Rat> ej(r, Rat(0));
        ej[j] = 1;
        out.projection.push_back(q.coords(ej));
    }
    return out;
}

} // namespace dialg
