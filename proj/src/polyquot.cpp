#include "dialg/polyquot.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dialg {

int mon_degree(const Monomial& m)
{
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

bool MonGreater::operator()(const Monomial& a, const Monomial& b) const
{
    int da = mon_degree(a), db = mon_degree(b);
    if (da != db)
        return da < db; // lower total degree prints first
    return a > b;       // within a degree: t1-lex descending
}

namespace {

void gen_monomials(int nvars, int deg, int var, Monomial& cur, std::vector<Monomial>& out)
{
    if (var == nvars - 1) {
        cur[var] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur[var] = e;
        gen_monomials(nvars, deg - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

Monomial mon_mul(const Monomial& a, const Monomial& b)
{
    Monomial out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

} // namespace

PolyQuotient::PolyQuotient(std::vector<std::string> vars, int order, std::vector<Poly> gens)
    : nvars_(static_cast<int>(vars.size())), order_(order), vars_(std::move(vars)),
      gens_(std::move(gens))
{
    if (order_ < 0)
        throw input_error("truncation order must be non-negative");
    for (const Poly& g : gens_) {
        if (g.empty())
            throw input_error("zero ideal generator");
        int deg = mon_degree(g.begin()->first);
        if (deg < 2)
            throw input_error("ideal generators must lie in m^2");
        for (const auto& [m, c] : g)
            if (mon_degree(m) != deg)
                throw input_error("ideal generators must be homogeneous");
    }
    build();
}

void PolyQuotient::build()
{
    slices_.assign(order_ + 1, {});
    basis_.assign(order_ + 1, {});
    reduce_.assign(order_ + 1, {});
    for (int deg = 0; deg <= order_; ++deg) {
        if (nvars_ == 0) {
            if (deg == 0)
                slices_[deg].push_back(Monomial{});
        } else {
            Monomial cur(nvars_, 0);
            gen_monomials(nvars_, deg, 0, cur, slices_[deg]);
            std::sort(slices_[deg].begin(), slices_[deg].end(),
                      [](const Monomial& a, const Monomial& b) { return a > b; });
        }
        if (deg == 0) {
            basis_[deg] = slices_[deg];
            continue;
        }
        // slice of the ideal: u·g for generators g with deg(g) ≤ deg
        std::vector<SparseRow> rows;
        for (const Poly& g : gens_) {
            int dg = mon_degree(g.begin()->first);
            if (dg > deg)
                continue;
            for (const Monomial& u : slice_monomials(deg - dg)) {
                std::map<int, Rat> acc;
                for (const auto& [m, c] : g)
                    acc[slice_index(deg, mon_mul(u, m))] += c;
                SparseRow row;
                for (auto& [idx, c] : acc)
                    if (c != 0)
                        row.push_back({idx, c});
                if (!row.empty())
                    rows.push_back(std::move(row));
            }
        }
        Rref red = rref_of_rows(static_cast<int>(slices_[deg].size()), rows);
        std::vector<bool> is_pivot(slices_[deg].size(), false);
        for (size_t i = 0; i < red.rows.size(); ++i) {
            is_pivot[red.pivots[i]] = true;
            reduce_[deg][red.pivots[i]] = red.rows[i];
        }
        for (size_t i = 0; i < slices_[deg].size(); ++i)
            if (!is_pivot[i])
                basis_[deg].push_back(slices_[deg][i]);
    }
}

const std::vector<Monomial>& PolyQuotient::slice_monomials(int deg) const
{
    if (deg < 0 || deg > order_)
        throw input_error("slice degree out of range");
    return slices_[deg];
}

const std::vector<Monomial>& PolyQuotient::basis_monomials(int deg) const
{
    if (deg < 0 || deg > order_)
        throw input_error("slice degree out of range");
    return basis_[deg];
}

std::vector<Monomial> PolyQuotient::all_basis_monomials() const
{
    std::vector<Monomial> out;
    for (int deg = 1; deg <= order_; ++deg)
        for (const Monomial& m : basis_[deg])
            out.push_back(m);
    return out;
}

Subspace PolyQuotient::ideal_slice(int deg) const
{
    std::vector<SparseRow> rows;
    for (const auto& [pivot, row] : reduce_[deg])
        rows.push_back(row);
    return Subspace::from_rows(static_cast<int>(slices_[deg].size()), rows);
}

int PolyQuotient::slice_index(int deg, const Monomial& m) const
{
    const auto& slice = slices_[deg];
    auto it = std::lower_bound(slice.begin(), slice.end(), m,
                               [](const Monomial& a, const Monomial& b) { return a > b; });
    if (it == slice.end() || *it != m)
        throw input_error("monomial missing from its degree slice");
    return static_cast<int>(it - slice.begin());
}

Poly PolyQuotient::normal_form(const Poly& p) const
{
    Poly out;
    for (const auto& [m, c] : p) {
        int deg = mon_degree(m);
        if (deg > order_)
            continue;
        auto it = reduce_[deg].find(deg == 0 ? 0 : slice_index(deg, m));
        if (deg == 0 || it == reduce_[deg].end()) {
            out[m] += c;
            continue;
        }
        // pivot monomial: rewrite through the RREF row (pivot coefficient 1)
        for (const auto& [idx, v] : it->second) {
            if (idx == it->first)
                continue;
            out[slices_[deg][idx]] -= c * v;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

Poly PolyQuotient::mul_nf(const Monomial& u, const Monomial& v) const
{
    Monomial w = mon_mul(u, v);
    if (mon_degree(w) > order_)
        return {};
    Poly p;
    p[w] = 1;
    return normal_form(p);
}

std::string PolyQuotient::monomial_string(const Monomial& m) const
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < nvars_; ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << "*";
        os << vars_[i];
        if (m[i] > 1)
            os << "^" << m[i];
        first = false;
    }
    if (first)
        os << "1";
    return os.str();
}

std::string PolyQuotient::poly_string(const Poly& p) const
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p) {
        Rat a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || mon_degree(m) == 0) {
            os << rat_str(a);
            if (mon_degree(m) > 0)
                os << "*";
        }
        if (mon_degree(m) > 0)
            os << monomial_string(m);
    }
    return os.str();
}

Poly PolyQuotient::parse_poly(const std::string& s) const
{
    Poly out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && s[i] == ' ')
            ++i;
    };
    skip_ws();
    if (i == s.size())
        throw input_error("empty polynomial string");
    if (s == "0")
        return out;
    bool negative = false;
    if (s[i] == '-' || s[i] == '+') {
        negative = s[i] == '-';
        ++i;
    }
    while (i < s.size()) {
        skip_ws();
        // term: optional coefficient, then variables joined by '*'
        Rat coef(1);
        Monomial mon(nvars_, 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (i < s.size() && expect_factor) {
            skip_ws();
            if (i < s.size() && (std::isdigit(s[i]) || s[i] == '/')) {
                size_t j = i;
                while (j < s.size() && (std::isdigit(s[j]) || s[j] == '/'))
                    ++j;
                coef *= parse_rat(s.substr(i, j - i));
                i = j;
                saw_factor = true;
            } else {
                int var = -1;
                for (int v = 0; v < nvars_; ++v) {
                    const std::string& name = vars_[v];
                    if (s.compare(i, name.size(), name) == 0) {
                        if (var == -1 || vars_[var].size() < name.size())
                            var = v;
                    }
                }
                if (var == -1)
                    throw input_error("cannot parse polynomial term in '" + s + "'");
                i += vars_[var].size();
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t j = i;
                    while (j < s.size() && std::isdigit(s[j]))
                        ++j;
                    if (j == i)
                        throw input_error("missing exponent in '" + s + "'");
                    e = std::stoi(s.substr(i, j - i));
                    i = j;
                }
                mon[var] += e;
                saw_factor = true;
            }
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (!saw_factor)
            throw input_error("cannot parse polynomial '" + s + "'");
        out[mon] += negative ? -coef : coef;
        skip_ws();
        if (i == s.size())
            break;
        if (s[i] == '+')
            negative = false;
        else if (s[i] == '-')
            negative = true;
        else
            throw input_error("cannot parse polynomial '" + s + "'");
        ++i;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::vector<std::string> PolyQuotient::ideal_strings() const
{
    std::vector<std::string> out;
    for (const Poly& g : gens_)
        out.push_back(poly_string(g));
    return out;
}

LocalAlgebra PolyQuotient::to_local_algebra() const
{
    std::vector<Monomial> mons = all_basis_monomials();
    std::vector<std::string> names;
    names.reserve(mons.size());
    for (const Monomial& m : mons)
        names.push_back(monomial_string(m));
    LocalAlgebra a(names);
    std::map<Monomial, int, MonGreater> index;
    for (size_t i = 0; i < mons.size(); ++i)
        index[mons[i]] = static_cast<int>(i);
    for (size_t i = 0; i < mons.size(); ++i)
        for (size_t j = i; j < mons.size(); ++j) {
            Poly p = mul_nf(mons[i], mons[j]);
            for (const auto& [m, c] : p)
                a.set_product(static_cast<int>(i), static_cast<int>(j), index.at(m), c);
        }
    return a;
}

} // namespace dialg
