#include "dialg/linalg.hpp"

#include <algorithm>
#include <map>

namespace dialg {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows)
{
    if (rows < 0 || cols < 0)
        throw input_error("negative matrix dimension");
}

void SparseMatrix::check(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw input_error("matrix index out of range");
}

void SparseMatrix::set(int r, int c, const Rat& v)
{
    check(r, c);
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        row.insert(it, {c, v});
    }
}

void SparseMatrix::add(int r, int c, const Rat& v)
{
    if (v == 0)
        return;
    check(r, c);
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second == 0)
            row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

Rat SparseMatrix::at(int r, int c) const
{
    check(r, c);
    const auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return it->second;
    return Rat(0);
}

long long SparseMatrix::nnz() const
{
    long long n = 0;
    for (const auto& row : data_)
        n += static_cast<long long>(row.size());
    return n;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            t.data_[c].push_back({r, v});
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw input_error("matrix shape mismatch in product");
    SparseMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::map<int, Rat> acc;
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : rhs.data_[k])
                acc[c] += v * w;
        for (auto& [c, v] : acc)
            if (v != 0)
                out.data_[r].push_back({c, std::move(v)});
    }
    return out;
}

std::vector<Rat> SparseMatrix::apply(const std::vector<Rat>& x) const
{
    if (static_cast<int>(x.size()) != cols_)
        throw input_error("vector length mismatch in matrix apply");
    std::vector<Rat> y(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            y[r] += v * x[c];
    return y;
}

std::vector<Rat> Rref::reduce(std::vector<Rat> v) const
{
    for (size_t i = 0; i < rows.size(); ++i) {
        const Rat& c = v[pivots[i]];
        if (c == 0)
            continue;
        Rat factor = c; // pivot entry is 1
        for (const auto& [col, val] : rows[i])
            v[col] -= factor * val;
    }
    return v;
}

namespace {

// Integer row with positive content removed; sign fixed so the leading entry
// is positive. Empty rows are dropped by the caller.
using IntRow = std::vector<std::pair<int, Int>>;

IntRow integerize(const SparseRow& row)
{
    IntRow out;
    if (row.empty())
        return out;
    Int denlcm(1);
    for (const auto& [c, v] : row)
        denlcm = lcm(denlcm, Int(v.get_den()));
    Int content(0);
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        Int iv = Int(v.get_num()) * (denlcm / Int(v.get_den()));
        content = gcd(content, iv);
        out.push_back({c, std::move(iv)});
    }
    if (sgn(out.front().second) < 0)
        content = -content;
    for (auto& [c, iv] : out)
        iv /= content;
    return out;
}

// r := (lead(p) * r - lead(r) * p), content-reduced. Both rows share lead col.
IntRow eliminate_lead(const IntRow& r, const IntRow& p)
{
    const Int& a = p.front().second;
    const Int& b = r.front().second;
    IntRow out;
    out.reserve(r.size() + p.size());
    size_t i = 1, j = 1;
    Int content(0);
    auto push = [&](int col, Int v) {
        if (v == 0)
            return;
        content = gcd(content, v);
        out.push_back({col, std::move(v)});
    };
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            push(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            push(p[j].first, -b * p[j].second);
            ++j;
        } else {
            push(r[i].first, a * r[i].second - b * p[j].second);
            ++i, ++j;
        }
    }
    if (!out.empty()) {
        if (sgn(out.front().second) < 0)
            content = -content;
        for (auto& [c, v] : out)
            v /= content;
    }
    return out;
}

} // namespace

Rref rref_of_rows(int cols, const std::vector<SparseRow>& rows)
{
    std::vector<IntRow> work;
    work.reserve(rows.size());
    for (const auto& r : rows) {
        IntRow ir = integerize(r);
        if (!ir.empty())
            work.push_back(std::move(ir));
    }

    std::vector<IntRow> echelon;
    // Bucket active rows by leading column; process columns left to right,
    // taking the earliest-inserted row as pivot.
    std::map<int, std::vector<IntRow>> buckets;
    for (auto& r : work)
        buckets[r.front().first].push_back(std::move(r));

    while (!buckets.empty()) {
        auto first = buckets.begin();
        std::vector<IntRow> bucket = std::move(first->second);
        buckets.erase(first);
        IntRow pivot = std::move(bucket.front());
        for (size_t i = 1; i < bucket.size(); ++i) {
            IntRow reduced = eliminate_lead(bucket[i], pivot);
            if (!reduced.empty())
                buckets[reduced.front().first].push_back(std::move(reduced));
        }
        echelon.push_back(std::move(pivot));
    }

    // Late normalization: divide by pivots and clear entries above them.
    Rref out;
    out.cols = cols;
    out.rows.resize(echelon.size());
    out.pivots.resize(echelon.size());
    for (size_t i = 0; i < echelon.size(); ++i) {
        out.pivots[i] = echelon[i].front().first;
        Rat inv = Rat(1) / Rat(echelon[i].front().second);
        SparseRow row;
        row.reserve(echelon[i].size());
        for (const auto& [c, v] : echelon[i])
            row.push_back({c, Rat(v) * inv});
        out.rows[i] = std::move(row);
    }
    for (int i = static_cast<int>(out.rows.size()) - 1; i >= 0; --i) {
        for (int j = 0; j < i; ++j) {
            auto& upper = out.rows[j];
            auto it = std::lower_bound(upper.begin(), upper.end(), out.pivots[i],
                                       [](const auto& e, int col) { return e.first < col; });
            if (it == upper.end() || it->first != out.pivots[i])
                continue;
            Rat factor = it->second;
            std::map<int, Rat> acc(upper.begin(), upper.end());
            for (const auto& [c, v] : out.rows[i])
                acc[c] -= factor * v;
            upper.clear();
            for (auto& [c, v] : acc)
                if (v != 0)
                    upper.push_back({c, std::move(v)});
        }
    }
    return out;
}

Rref rref(const SparseMatrix& m)
{
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r));
    return rref_of_rows(m.cols(), rows);
}

Subspace Subspace::from_rows(int ambient, const std::vector<SparseRow>& vectors)
{
    Subspace s(ambient);
    s.echelon_ = rref_of_rows(ambient, vectors);
    return s;
}

Subspace Subspace::from_vectors(int ambient, const std::vector<std::vector<Rat>>& vectors)
{
    std::vector<SparseRow> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient)
            throw input_error("vector length does not match ambient dimension");
        SparseRow row;
        for (int c = 0; c < ambient; ++c)
            if (v[c] != 0)
                row.push_back({c, v[c]});
        rows.push_back(std::move(row));
    }
    return from_rows(ambient, rows);
}

bool Subspace::contains(const std::vector<Rat>& v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw input_error("vector length does not match ambient dimension");
    return is_zero_vec(echelon_.reduce(v));
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        return false;
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i)))
            return false;
    return true;
}

std::vector<Rat> Subspace::basis_vector(int i) const
{
    std::vector<Rat> v(ambient_, Rat(0));
    for (const auto& [c, val] : echelon_.rows[i])
        v[c] = val;
    return v;
}

bool Subspace::operator==(const Subspace& rhs) const
{
    return ambient_ == rhs.ambient_ && echelon_.pivots == rhs.echelon_.pivots &&
           echelon_.rows == rhs.echelon_.rows;
}

int rank(const SparseMatrix& m)
{
    return rref(m).rank();
}

Subspace kernel(const SparseMatrix& m)
{
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivots)
        is_pivot[p] = true;
    std::vector<SparseRow> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        std::map<int, Rat> entries;
        entries[c] = Rat(1);
        for (size_t i = 0; i < r.rows.size(); ++i) {
            auto it = std::lower_bound(r.rows[i].begin(), r.rows[i].end(), c,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != r.rows[i].end() && it->first == c)
                entries[r.pivots[i]] = -it->second;
        }
        SparseRow row(entries.begin(), entries.end());
        basis.push_back(std::move(row));
    }
    return Subspace::from_rows(m.cols(), basis);
}

Subspace image(const SparseMatrix& m)
{
    SparseMatrix t = m.transpose();
    std::vector<SparseRow> rows;
    rows.reserve(t.rows());
    for (int r = 0; r < t.rows(); ++r)
        rows.push_back(t.row(r));
    return Subspace::from_rows(m.rows(), rows);
}

std::optional<std::vector<Rat>> solve(const SparseMatrix& m, const std::vector<Rat>& b)
{
    if (static_cast<int>(b.size()) != m.rows())
        throw input_error("right-hand side length mismatch");
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        SparseRow row = m.row(r);
        if (b[r] != 0)
            row.push_back({m.cols(), b[r]});
        rows.push_back(std::move(row));
    }
    Rref r = rref_of_rows(m.cols() + 1, rows);
    std::vector<Rat> x(m.cols(), Rat(0));
    for (size_t i = 0; i < r.rows.size(); ++i) {
        if (r.pivots[i] == m.cols())
            return std::nullopt;
        auto it = r.rows[i].end();
        if (!r.rows[i].empty() && std::prev(it)->first == m.cols())
            x[r.pivots[i]] = std::prev(it)->second;
    }
    return x;
}

QuotientMap::QuotientMap(const Subspace& v, const Subspace& w) : space_(v), sub_(w)
{
    if (v.ambient() != w.ambient() || !v.contains(w))
        throw math_error("quotient: subspace is not contained in the ambient space");
    std::vector<SparseRow> reduced;
    for (int i = 0; i < v.dim(); ++i) {
        std::vector<Rat> red = w.echelon().reduce(v.basis_vector(i));
        SparseRow row;
        for (int c = 0; c < v.ambient(); ++c)
            if (red[c] != 0)
                row.push_back({c, red[c]});
        if (!row.empty())
            reduced.push_back(std::move(row));
    }
    Rref comp = rref_of_rows(v.ambient(), reduced);
    comp_ = std::move(comp.rows);
    comp_pivots_ = std::move(comp.pivots);
}

std::vector<Rat> QuotientMap::coords(const std::vector<Rat>& v) const
{
    std::vector<Rat> red = sub_.echelon().reduce(v);
    std::vector<Rat> out(comp_.size(), Rat(0));
    for (size_t i = 0; i < comp_.size(); ++i) {
        Rat c = red[comp_pivots_[i]];
        if (c == 0)
            continue;
        out[i] = c;
        for (const auto& [col, val] : comp_[i])
            red[col] -= c * val;
    }
    if (!is_zero_vec(red))
        throw math_error("quotient coordinates of a vector outside the space");
    return out;
}

std::vector<Rat> QuotientMap::complement_vector(int i) const
{
    std::vector<Rat> v(space_.ambient(), Rat(0));
    for (const auto& [c, val] : comp_[i])
        v[c] = val;
    return v;
}

} // namespace dialg
