#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dialg/deformation.hpp"
#include "dialg/fixtures.hpp"
#include "support.hpp"

#include <random>

using namespace dialg;

namespace {

LocalAlgebra dual_numbers()
{
    return LocalAlgebra::truncated_polynomial(1);
}

DeformationLaw random_infinitesimal_law(std::mt19937& rng, const CochainComplex& complex,
                                        const LocalAlgebra& base)
{
    DeformationLaw law(base, complex.algebra());
    for (int i = 0; i < base.mdim(); ++i)
        law.set_correction(i, test::random_cocycle(rng, complex, 2));
    return law;
}

// ρ(1⊗x) = 1⊗x + Σ m_i ⊗ φ_i(x) intertwines law1 and law2 on generators.
bool rho_intertwines(const DeformationLaw& law1, const DeformationLaw& law2,
                     const std::vector<Cochain>& phis)
{
    const int d = law1.algebra().dim();
    for (Op op : {Op::Left, Op::Right})
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                TensorElem lhs = apply_rho(law1.base(), phis,
                                           law1.product(op, law1.generator(i), law1.generator(j)));
                TensorElem rhs = law2.product(op, apply_rho(law1.base(), phis, law1.generator(i)),
                                              apply_rho(law1.base(), phis, law1.generator(j)));
                if (!(lhs == rhs))
                    return false;
            }
    return true;
}

} // namespace

TEST_CASE("trivial laws satisfy the axioms over any base")
{
    for (const std::string& name : {"zero1", "kx2", "barunit2"}) {
        CochainComplex c(fixture(name));
        for (const LocalAlgebra& base :
             {LocalAlgebra::field(), dual_numbers(), LocalAlgebra::truncated_polynomial(3)}) {
            DeformationLaw law(base, c.algebra());
            CHECK(law.check().empty());
        }
    }
}

TEST_CASE("a law over the dual numbers is valid iff its correction is a cocycle")
{
    CochainComplex c(fixture("zero1"));
    DeformationLaw law(dual_numbers(), c.algebra());
    Cochain corr(2, 1);
    corr.set(DeformationLaw::y2_index(Op::Left), {0, 0}, 0, Rat(1)); // x⊣x = t·x
    law.set_correction(0, corr);
    CHECK(law.check().empty());

    // over the zero dialgebra every 2-cochain is a cocycle; take kx2 instead
    CochainComplex ckx(fixture("kx2"));
    DeformationLaw bad(dual_numbers(), ckx.algebra());
    Cochain nc(2, 2);
    nc.set(DeformationLaw::y2_index(Op::Left), {0, 0}, 1, Rat(1));
    REQUIRE_FALSE(ckx.is_cocycle(nc));
    bad.set_correction(0, nc);
    CHECK_FALSE(bad.check().empty());
    DeformationLaw good(dual_numbers(), ckx.algebra());
    good.set_correction(0, ckx.cohomology(2).representatives[0]);
    CHECK(good.check().empty());
}

TEST_CASE("alpha cocycles read off the corrections")
{
    std::mt19937 rng(5);
    CochainComplex c(fixture("zero2"));
    LocalAlgebra base = [] {
        LocalAlgebra a(std::vector<std::string>{"s", "u"});
        return a; // square-zero, 𝔪 two-dimensional
    }();
    DeformationLaw law = random_infinitesimal_law(rng, c, base);
    CHECK(alpha_cocycle(law, {Rat(1), Rat(0)}) == law.correction(0));
    CHECK(alpha_cocycle(law, {Rat(0), Rat(1)}) == law.correction(1));
    DeformationLaw trivial(base, c.algebra());
    CHECK(alpha_cocycle(trivial, {Rat(1), Rat(1)}).is_zero());
    CHECK_THROWS_AS(alpha_cocycle(DeformationLaw(LocalAlgebra::truncated_polynomial(2),
                                                 c.algebra()),
                                  std::vector<Rat>(2, Rat(1))),
                    math_error);
}

TEST_CASE("alpha cocycles of valid infinitesimal laws are cocycles")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        Dialgebra d = test::random_dialgebra(rng, 1 + trial % 2);
        CochainComplex c(d);
        LocalAlgebra base = trial % 2 == 0 ? dual_numbers() : [] {
            return LocalAlgebra(std::vector<std::string>{"s", "u"});
        }();
        DeformationLaw law = random_infinitesimal_law(rng, c, base);
        REQUIRE(law.check().empty());
        std::vector<Rat> xi(base.mdim());
        for (int i = 0; i < base.mdim(); ++i)
            xi[i] = test::small_rat(rng);
        CHECK(c.is_cocycle(alpha_cocycle(law, xi)));
    }
}

TEST_CASE("the universal infinitesimal deformation")
{
    // rigid dialgebra: base K, trivial law
    CochainComplex rigid(fixture("barunit2"));
    DeformationLaw eta0 = universal_infinitesimal(rigid);
    CHECK(eta0.mdim() == 0);
    CHECK(eta0.check().empty());

    // zero dialgebra d=1: two parameters, corrections are the basis cochains
    CochainComplex c(fixture("zero1"));
    DeformationLaw eta = universal_infinitesimal(c);
    CHECK(eta.mdim() == 2);
    CHECK(eta.base().is_infinitesimal());
    CHECK(eta.check().empty());
    for (int i = 0; i < 2; ++i)
        CHECK(eta.correction(i) == c.cohomology(2).representatives[i]);

    // kx2: one parameter
    CochainComplex ckx(fixture("kx2"));
    DeformationLaw etakx = universal_infinitesimal(ckx);
    CHECK(etakx.mdim() == 1);
    CHECK(etakx.check().empty());
}

TEST_CASE("switching representatives gives an equivalent law")
{
    std::mt19937 rng(23);
    CochainComplex c(fixture("kx2"));
    DeformationLaw eta = universal_infinitesimal(c);
    // μ'(α) = μ(α) + δν(α)
    Cochain nu(1, 2);
    nu.set(0, {0}, 1, Rat(2));
    nu.set(0, {1}, 1, Rat(-1));
    DeformationLaw eta2 = eta;
    eta2.set_correction(0, eta.correction(0) + c.coboundary(nu));
    CHECK(eta2.check().empty());
    auto witness = equivalent_infinitesimal(eta, eta2, c);
    REQUIRE(witness.has_value());
    CHECK(rho_intertwines(eta, eta2, *witness));
    // the explicit automorphism ρ(x,φ) = (x, φ + ν(·)(x)) also works
    CHECK(rho_intertwines(eta2, eta, {nu}));
}

TEST_CASE("push-outs")
{
    std::mt19937 rng(31);
    CochainComplex c(fixture("zero1"));
    DeformationLaw eta = universal_infinitesimal(c);

    DeformationLaw same = push_out(eta, BaseMap::identity(eta.base()));
    CHECK(same == eta);

    BaseMap zero_map;
    zero_map.target = dual_numbers();
    zero_map.images = {AVec{Rat(0), Rat(0)}, AVec{Rat(0), Rat(0)}};
    DeformationLaw killed = push_out(eta, zero_map);
    CHECK(killed == DeformationLaw(dual_numbers(), c.algebra()));

    // augmentation-incompatible maps are rejected
    BaseMap bad = zero_map;
    bad.images[0][0] = 1;
    CHECK_THROWS_AS(push_out(eta, bad), math_error);

    // a non-multiplicative map is rejected: K[t]/(t^2) → K[s]/(s^3), t ↦ s
    // works, but t ↦ s with t^2 = 0 and s^2 ≠ 0 must fail
    LocalAlgebra ks3 = LocalAlgebra::truncated_polynomial(2);
    DeformationLaw dual_law = random_infinitesimal_law(rng, c, dual_numbers());
    BaseMap t_to_s;
    t_to_s.target = ks3;
    t_to_s.images = {AVec{Rat(0), Rat(1), Rat(0)}};
    CHECK_THROWS_AS(push_out(dual_law, t_to_s), math_error);
}

TEST_CASE("infinitesimal classes and Prop 4.1")
{
    std::mt19937 rng(37);
    for (const std::string& name : {"zero1", "zero2", "kx2", "barunit2"}) {
        CochainComplex c(fixture(name));
        DeformationLaw eta = universal_infinitesimal(c);
        int h = c.cohomology(2).dim;

        // a_{η_D} is the identity in the canonical bases
        RatMatrix id_mat = infinitesimal_class(eta, c);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j)
                CHECK(id_mat[i][j] == (i == j ? Rat(1) : Rat(0)));

        for (int trial = 0; trial < 3; ++trial) {
            LocalAlgebra base = trial == 1 ? LocalAlgebra(std::vector<std::string>{"s", "u"})
                                           : dual_numbers();
            DeformationLaw law = random_infinitesimal_law(rng, c, base);
            RatMatrix cls = infinitesimal_class(law, c);

            // the canonical φ = id ⊕ a_λ' matches the class of λ
            BaseMap phi;
            phi.target = base;
            for (int a = 0; a < h; ++a) {
                AVec img(base.mdim() + 1, Rat(0));
                for (int i = 0; i < base.mdim(); ++i)
                    img[i + 1] = cls[a][i];
                phi.images.push_back(std::move(img));
            }
            DeformationLaw pushed = push_out(eta, phi);
            CHECK(infinitesimal_class(pushed, c) == cls);

            // ... and λ is equivalent to the push-out (Prop 4.1)
            auto witness = equivalent_infinitesimal(pushed, law, c);
            REQUIRE(witness.has_value());
            CHECK(rho_intertwines(pushed, law, *witness));

            // uniqueness: the linear system "class(push_out(η,φ)) = class(λ)"
            // in the unknown matrix has a unique solution
            RatMatrix gram(h, std::vector<Rat>(h, Rat(0)));
            for (int a = 0; a < h; ++a) {
                std::vector<Rat> col = c.class_of(eta.correction(a));
                for (int row = 0; row < h; ++row)
                    gram[row][a] = col[row];
            }
            CHECK(test::dense_rank(gram) == h); // unique solution for every column
        }
    }
}

TEST_CASE("adding coboundaries never moves the infinitesimal class")
{
    std::mt19937 rng(43);
    CochainComplex c(fixture("kx2"));
    DeformationLaw law = random_infinitesimal_law(rng, c, dual_numbers());
    Cochain psi(1, 2);
    psi.set(0, {0}, 0, Rat(1));
    psi.set(0, {1}, 1, Rat(-2));
    DeformationLaw shifted = law;
    shifted.set_correction(0, law.correction(0) + c.coboundary(psi));
    CHECK(infinitesimal_class(shifted, c) == infinitesimal_class(law, c));
    auto w = equivalent_infinitesimal(law, shifted, c);
    REQUIRE(w.has_value());
    CHECK(rho_intertwines(law, shifted, *w));

    // a representative-class difference is *not* equivalent
    DeformationLaw other = law;
    other.set_correction(0, law.correction(0) + c.cohomology(2).representatives[0]);
    CHECK_FALSE(equivalent_infinitesimal(law, other, c).has_value());
}

TEST_CASE("the differential")
{
    CochainComplex c(fixture("zero1"));
    DeformationLaw eta = universal_infinitesimal(c);
    RatMatrix deta = differential(eta, c);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(deta[i][j] == (i == j ? Rat(1) : Rat(0)));

    // trivial law: zero differential
    DeformationLaw trivial(LocalAlgebra::truncated_polynomial(2), c.algebra());
    RatMatrix zero = differential(trivial, c);
    for (const auto& row : zero)
        CHECK(is_zero_vec(row));

    // x⊣x = t x = x⊢x over K[t]/(t^3): dλ has the single column (1,1)
    LocalAlgebra kt3 = LocalAlgebra::truncated_polynomial(2);
    DeformationLaw law(kt3, c.algebra());
    Cochain corr(2, 1);
    corr.set(DeformationLaw::y2_index(Op::Left), {0, 0}, 0, Rat(1));
    corr.set(DeformationLaw::y2_index(Op::Right), {0, 0}, 0, Rat(1));
    law.set_correction(0, corr);
    REQUIRE(law.check().empty());
    RatMatrix dl = differential(law, c);
    REQUIRE(dl.size() == 2);
    REQUIRE(dl[0].size() == 1); // TA of K[t]/(t^3) is one-dimensional
    CHECK(dl[0][0] == 1);
    CHECK(dl[1][0] == 1);
}

TEST_CASE("liftings over an extension: action and difference class")
{
    std::mt19937 rng(53);
    CochainComplex c(fixture("zero1"));
    // extension of the dual numbers by K with trivial cocycle
    LocalAlgebra a = dual_numbers();
    AlgExtension ext = extension_from_cocycle(a, SymBilinear(1));
    REQUIRE(ext.total.is_infinitesimal());

    DeformationLaw lambda = random_infinitesimal_law(rng, c, a);
    DeformationLaw mu(ext.total, c.algebra());
    mu.set_correction(0, lambda.correction(0));
    REQUIRE(mu.check().empty());
    CHECK(push_to_base(mu, ext) == lambda);

    // acting by zero does nothing
    CHECK(act_by_cocycle(mu, ext, Cochain(2, 1), c) == mu);

    // acting by a random cocycle keeps the push-out and shifts the class
    Cochain z = test::random_cocycle(rng, c, 2);
    DeformationLaw mu2 = act_by_cocycle(mu, ext, z, c);
    CHECK(push_to_base(mu2, ext) == lambda);
    DifferenceClass diff = difference_class(mu2, mu, ext, c);
    CHECK(diff.cls == c.class_of(z));

    // equal laws have difference zero
    CHECK(is_zero_vec(difference_class(mu, mu, ext, c).cls));

    // laws with different push-outs are rejected
    DeformationLaw stranger(ext.total, c.algebra());
    Cochain other(2, 1);
    other.set(DeformationLaw::y2_index(Op::Left), {0, 0}, 0, Rat(7));
    stranger.set_correction(0, lambda.correction(0) + other);
    CHECK_THROWS_AS(difference_class(stranger, mu, ext, c), math_error);
}

TEST_CASE("acting by a coboundary gives an equivalent lifting with explicit rho")
{
    std::mt19937 rng(47);
    CochainComplex c(fixture("kx2"));
    LocalAlgebra a = dual_numbers();
    AlgExtension ext = extension_from_cocycle(a, SymBilinear(1));
    DeformationLaw mu(ext.total, c.algebra());
    mu.set_correction(0, test::random_cocycle(rng, c, 2));
    REQUIRE(mu.check().empty());

    Cochain psi(1, 2);
    psi.set(0, {0}, 1, Rat(1));
    psi.set(0, {1}, 0, Rat(-2));
    DeformationLaw mu2 = act_by_cocycle(mu, ext, c.coboundary(psi), c);
    CHECK(is_zero_vec(difference_class(mu2, mu, ext, c).cls));
    // ρ(1⊗x) = 1⊗x + i(1)⊗ψ(x) carries μ₂ onto μ
    std::vector<Cochain> phis(ext.total.mdim(), Cochain(1, 2));
    phis[ext.kernel_index] = psi;
    CHECK(rho_intertwines(mu2, mu, phis));
}

TEST_CASE("Prop 7.2: automorphisms act through the differential")
{
    std::mt19937 rng(59);
    for (const std::string& name : {"zero1", "kx2"}) {
        CochainComplex c(fixture(name));
        LocalAlgebra a = dual_numbers();
        AlgExtension ext = extension_from_cocycle(a, SymBilinear(1));
        DeformationLaw lambda = random_infinitesimal_law(rng, c, a);

        DeformationLaw mu(ext.total, c.algebra());
        mu.set_correction(0, lambda.correction(0));
        mu.set_correction(ext.kernel_index, test::random_cocycle(rng, c, 2));
        REQUIRE(mu.check().empty());
        REQUIRE(push_to_base(mu, ext) == lambda);

        for (const ExtensionAutomorphism& r : extension_automorphisms(ext)) {
            DeformationLaw rmu = push_by_automorphism(mu, ext, r);
            CHECK(push_to_base(rmu, ext) == lambda);
            DifferenceClass diff = difference_class(rmu, mu, ext, c);
            // dλ(h): pair the derivation h with the tangent coordinates
            TangentSpace ta = tangent_space(a);
            RatMatrix dl = differential(lambda, c);
            std::vector<Rat> expected(dl.size(), Rat(0));
            for (size_t row = 0; row < dl.size(); ++row)
                for (int t = 0; t < ta.dim; ++t) {
                    Rat pairing(0);
                    std::vector<Rat> comp = ta.coords.complement_vector(t);
                    for (int m = 0; m < a.mdim(); ++m)
                        pairing += r.h[m] * comp[m];
                    expected[row] += dl[row][t] * pairing;
                }
            CHECK(diff.cls == expected);
        }
    }
}
