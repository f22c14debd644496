#pragma once

#include "dialg/linalg.hpp"
#include "dialg/localalg.hpp"
#include "dialg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace dialg {

using Monomial = std::vector<int>; // exponents per variable

int mon_degree(const Monomial& m);

// Degree first, then lexicographic with t1 ≻ t2 ≻ …; "greater" terms print first.
struct MonGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using Poly = std::map<Monomial, Rat, MonGreater>;

// K[t_1..t_n]/(generators, m^(order+1)) with homogeneous generators of
// degree ≥ 2, reduced slice by slice; every computation happens on the
// retained monomial basis.
class PolyQuotient {
public:
    PolyQuotient() = default;
    PolyQuotient(std::vector<std::string> vars, int order, std::vector<Poly> gens = {});

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Poly>& generators() const { return gens_; }

    const std::vector<Monomial>& slice_monomials(int deg) const;
    const std::vector<Monomial>& basis_monomials(int deg) const;
    std::vector<Monomial> all_basis_monomials() const; // ascending degree
    Subspace ideal_slice(int deg) const;               // in slice coordinates

    Poly normal_form(const Poly& p) const;
    Poly mul_nf(const Monomial& u, const Monomial& v) const;

    std::string monomial_string(const Monomial& m) const;
    std::string poly_string(const Poly& p) const;
    Poly parse_poly(const std::string& s) const;
    std::vector<std::string> ideal_strings() const;

    LocalAlgebra to_local_algebra() const;

private:
    int nvars_ = 0;
    int order_ = 0;
    std::vector<std::string> vars_;
    std::vector<Poly> gens_;
    // per degree 0..order: monomial list, basis flags, pivot expansions
    std::vector<std::vector<Monomial>> slices_;
    std::vector<std::vector<Monomial>> basis_;
    std::vector<std::map<int, SparseRow>> reduce_; // pivot slice-index ↦ RREF row
    void build();
    int slice_index(int deg, const Monomial& m) const;
};

} // namespace dialg
