#include "dialg/deformation.hpp"

namespace dialg {

TensorElem TensorElem::zero(int r, int d)
{
    TensorElem e;
    e.a.assign(r + 1, Vec(d, Rat(0)));
    return e;
}

TensorElem TensorElem::generator(int r, int d, int j)
{
    TensorElem e = zero(r, d);
    e.a[0][j] = 1;
    return e;
}

bool TensorElem::is_zero() const
{
    for (const auto& v : a)
        if (!is_zero_vec(v))
            return false;
    return true;
}

TensorElem& TensorElem::operator+=(const TensorElem& rhs)
{
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            a[i][j] += rhs.a[i][j];
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& rhs)
{
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            a[i][j] -= rhs.a[i][j];
    return *this;
}

BaseMap BaseMap::identity(const LocalAlgebra& a)
{
    BaseMap phi;
    phi.target = a;
    for (int i = 0; i < a.mdim(); ++i)
        phi.images.push_back(a.m_basis_vec(i));
    return phi;
}

bool BaseMap::is_multiplicative(const LocalAlgebra& source) const
{
    for (const AVec& img : images)
        if (img.at(0) != 0)
            return false; // not augmentation-compatible
    for (int i = 0; i < source.mdim(); ++i)
        for (int j = i; j < source.mdim(); ++j) {
            AVec lhs(target.mdim() + 1, Rat(0));
            for (const auto& [k, v] : source.m_product(i, j))
                for (int t = 0; t <= target.mdim(); ++t)
                    lhs[t] += v * images[k][t];
            AVec rhs = target.mul(images[i], images[j]);
            if (lhs != rhs)
                return false;
        }
    return true;
}

AVec BaseMap::apply(const LocalAlgebra& source, const AVec& x) const
{
    if (static_cast<int>(x.size()) != source.mdim() + 1)
        throw input_error("base map applied to an element of the wrong algebra");
    AVec out(target.mdim() + 1, Rat(0));
    out[0] = x[0];
    for (int i = 0; i < source.mdim(); ++i)
        for (int t = 0; t <= target.mdim(); ++t)
            out[t] += x[i + 1] * images[i][t];
    return out;
}

int DeformationLaw::y2_index(Op op)
{
    // Y_2 in label order is {[12], [21]}; ⊣ is carried by [21], ⊢ by [12].
    static const int left_idx = tree_index(parse_tree_label("[21]"));
    static const int right_idx = tree_index(parse_tree_label("[12]"));
    return op == Op::Left ? left_idx : right_idx;
}

DeformationLaw::DeformationLaw(LocalAlgebra base, Dialgebra algebra)
    : base_(std::move(base)), D_(std::move(algebra))
{
    corr_.assign(base_.mdim(), Cochain(2, D_.dim()));
    int n = base_.mdim() + 1;
    basis_mul_.reserve(static_cast<size_t>(n) * n);
    for (int alpha = 0; alpha < n; ++alpha) {
        AVec va(n, Rat(0));
        va[alpha] = 1;
        for (int beta = 0; beta < n; ++beta) {
            AVec vb(n, Rat(0));
            vb[beta] = 1;
            basis_mul_.push_back(base_.mul(va, vb));
        }
    }
}

void DeformationLaw::set_correction(int i, Cochain c)
{
    if (c.degree() != 2 || c.dim() != D_.dim())
        throw input_error("law corrections must be 2-cochains of the dialgebra");
    corr_.at(i) = std::move(c);
}

const AVec& DeformationLaw::basis_product(int alpha, int beta) const
{
    return basis_mul_[static_cast<size_t>(alpha) * (base_.mdim() + 1) + beta];
}

TensorElem DeformationLaw::product(Op op, const TensorElem& x, const TensorElem& y) const
{
    const int r = base_.mdim();
    const int d = D_.dim();
    const int tree = y2_index(op);
    TensorElem out = TensorElem::zero(r, d);
    for (int alpha = 0; alpha <= r; ++alpha) {
        if (is_zero_vec(x.a[alpha]))
            continue;
        for (int beta = 0; beta <= r; ++beta) {
            if (is_zero_vec(y.a[beta]))
                continue;
            const AVec& gamma = basis_product(alpha, beta);
            Vec prod = D_.product(op, x.a[alpha], y.a[beta]);
            for (int g = 0; g <= r; ++g) {
                if (gamma[g] == 0)
                    continue;
                for (int t = 0; t < d; ++t)
                    out.a[g][t] += gamma[g] * prod[t];
            }
            for (int i = 0; i < r; ++i) {
                if (corr_[i].is_zero())
                    continue;
                Vec ci = corr_[i].eval(enumerate_trees(2)[tree], {x.a[alpha], y.a[beta]});
                if (is_zero_vec(ci))
                    continue;
                AVec gm(r + 1, Rat(0)); // gamma · m_i
                for (int g = 0; g <= r; ++g) {
                    if (gamma[g] == 0)
                        continue;
                    const AVec& gmi = basis_mul_[static_cast<size_t>(g) * (r + 1) + i + 1];
                    for (int t = 0; t <= r; ++t)
                        gm[t] += gamma[g] * gmi[t];
                }
                for (int g = 0; g <= r; ++g) {
                    if (gm[g] == 0)
                        continue;
                    for (int t = 0; t < d; ++t)
                        out.a[g][t] += gm[g] * ci[t];
                }
            }
        }
    }
    return out;
}

namespace {

TensorElem oriented_defect(const DeformationLaw& law, const Tree& y, int i, int j, int k)
{
    Op outer_r = y.circ(0);
    Op inner_r = Dialgebra::op_of_2tree(y.face(0));
    Op outer_l = y.circ(3);
    Op inner_l = Dialgebra::op_of_2tree(y.face(3));
    TensorElem gi = law.generator(i), gj = law.generator(j), gk = law.generator(k);
    TensorElem lhs = law.product(outer_r, gi, law.product(inner_r, gj, gk));
    TensorElem rhs = law.product(outer_l, law.product(inner_l, gi, gj), gk);
    lhs -= rhs;
    return lhs;
}

} // namespace

std::vector<LawViolation> DeformationLaw::check() const
{
    std::vector<LawViolation> out;
    const int r = base_.mdim();
    const int d = D_.dim();
    for (int axiom = 1; axiom <= 5; ++axiom) {
        Tree y = Dialgebra::tree_of_axiom(axiom);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    TensorElem defect = oriented_defect(*this, y, i, j, k);
                    for (int w = 0; w <= r; ++w)
                        if (!is_zero_vec(defect.a[w]))
                            out.push_back({axiom, {i, j, k}, w - 1, defect.a[w]});
                }
    }
    return out;
}

std::vector<Cochain> DeformationLaw::defect_cochains() const
{
    const int r = base_.mdim();
    const int d = D_.dim();
    std::vector<Cochain> out(r, Cochain(3, d));
    for (const Tree& y : enumerate_trees(3)) {
        int tree = tree_index(y);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    TensorElem defect = oriented_defect(*this, y, i, j, k);
                    if (!is_zero_vec(defect.a[0]))
                        throw math_error("deformation law breaks the axioms at order zero");
                    for (int w = 0; w < r; ++w)
                        for (int t = 0; t < d; ++t)
                            if (defect.a[w + 1][t] != 0)
                                out[w].add(tree, {i, j, k}, t, defect.a[w + 1][t]);
                }
    }
    return out;
}

Cochain alpha_cocycle(const DeformationLaw& law, const std::vector<Rat>& xi)
{
    if (!law.base().is_infinitesimal())
        throw math_error("alpha cocycles require an infinitesimal base");
    if (static_cast<int>(xi.size()) != law.mdim())
        throw input_error("functional length does not match the maximal ideal");
    Cochain out(2, law.algebra().dim());
    for (int i = 0; i < law.mdim(); ++i)
        if (xi[i] != 0)
            out += xi[i] * law.correction(i);
    return out;
}

DeformationLaw universal_infinitesimal(const CochainComplex& complex)
{
    const CohomologySpace& h2 = complex.cohomology(2);
    std::vector<std::string> names;
    for (int i = 1; i <= h2.dim; ++i)
        names.push_back("t" + std::to_string(i));
    DeformationLaw law(LocalAlgebra(names), complex.algebra());
    for (int i = 0; i < h2.dim; ++i)
        law.set_correction(i, h2.representatives[i]);
    return law;
}

DeformationLaw push_out(const DeformationLaw& law, const BaseMap& phi)
{
    if (static_cast<int>(phi.images.size()) != law.mdim())
        throw input_error("base map arity does not match the law's base");
    if (!phi.is_multiplicative(law.base()))
        throw math_error("push-out requires a unital augmentation-compatible algebra map");
    DeformationLaw out(phi.target, law.algebra());
    for (int w = 0; w < phi.target.mdim(); ++w) {
        Cochain c(2, law.algebra().dim());
        for (int i = 0; i < law.mdim(); ++i)
            if (phi.images[i][w + 1] != 0)
                c += phi.images[i][w + 1] * law.correction(i);
        out.set_correction(w, std::move(c));
    }
    return out;
}

RatMatrix infinitesimal_class(const DeformationLaw& law, const CochainComplex& complex)
{
    if (!law.base().is_infinitesimal())
        throw math_error("infinitesimal classes require an infinitesimal base");
    int h = complex.cohomology(2).dim;
    RatMatrix m(h, std::vector<Rat>(law.mdim(), Rat(0)));
    for (int i = 0; i < law.mdim(); ++i) {
        std::vector<Rat> cls = complex.class_of(law.correction(i));
        for (int row = 0; row < h; ++row)
            m[row][i] = cls[row];
    }
    return m;
}

std::optional<std::vector<Cochain>> equivalent_infinitesimal(const DeformationLaw& law1,
                                                             const DeformationLaw& law2,
                                                             const CochainComplex& complex)
{
    if (!(law1.base() == law2.base()))
        throw input_error("equivalence requires a common base");
    if (!law1.base().is_infinitesimal())
        throw math_error("equivalence test implemented for infinitesimal bases only");
    const SparseMatrix& delta1 = complex.coboundary_matrix(1);
    std::vector<Cochain> phis;
    for (int i = 0; i < law1.mdim(); ++i) {
        Cochain diff = law1.correction(i) - law2.correction(i);
        auto x = solve(delta1, diff.to_dense());
        if (!x)
            return std::nullopt;
        phis.push_back(Cochain::from_dense(1, law1.algebra().dim(), *x));
    }
    return phis;
}

TensorElem apply_rho(const LocalAlgebra& base, const std::vector<Cochain>& phis,
                     const TensorElem& x)
{
    const int r = base.mdim();
    TensorElem out = x;
    const Tree& y1 = enumerate_trees(1)[0];
    for (int alpha = 0; alpha <= r; ++alpha) {
        if (is_zero_vec(x.a[alpha]))
            continue;
        AVec walpha(r + 1, Rat(0));
        walpha[alpha] = 1;
        for (int i = 0; i < r; ++i) {
            if (phis[i].is_zero())
                continue;
            Vec img = phis[i].eval(y1, {x.a[alpha]});
            if (is_zero_vec(img))
                continue;
            AVec wm = base.mul(walpha, base.m_basis_vec(i));
            for (int g = 0; g <= r; ++g) {
                if (wm[g] == 0)
                    continue;
                for (size_t t = 0; t < img.size(); ++t)
                    out.a[g][t] += wm[g] * img[t];
            }
        }
    }
    return out;
}

RatMatrix differential(const DeformationLaw& law, const CochainComplex& complex)
{
    InfinitesimalQuotient quo = infinitesimal_quotient(law.base());
    BaseMap pi;
    pi.target = quo.algebra;
    for (int i = 0; i < law.mdim(); ++i) {
        AVec img(quo.algebra.mdim() + 1, Rat(0));
        for (int t = 0; t < quo.algebra.mdim(); ++t)
            img[t + 1] = quo.projection[i][t];
        pi.images.push_back(std::move(img));
    }
    return infinitesimal_class(push_out(law, pi), complex);
}

DeformationLaw act_by_cocycle(const DeformationLaw& law, const AlgExtension& ext,
                              const Cochain& c, const CochainComplex& complex)
{
    if (!(law.base() == ext.total))
        throw input_error("the law must live over the total algebra of the extension");
    if (!complex.is_cocycle(c))
        throw math_error("act_by_cocycle requires a 2-cocycle");
    DeformationLaw out = law;
    out.set_correction(ext.kernel_index, law.correction(ext.kernel_index) + c);
    return out;
}

DifferenceClass difference_class(const DeformationLaw& law1, const DeformationLaw& law2,
                                 const AlgExtension& ext, const CochainComplex& complex)
{
    if (!(law1.base() == ext.total) || !(law2.base() == ext.total))
        throw input_error("difference classes live over the total algebra of the extension");
    for (int i = 0; i < law1.mdim(); ++i)
        if (i != ext.kernel_index && !(law1.correction(i) == law2.correction(i)))
            throw math_error("difference class requires equal push-outs to the base");
    Cochain gamma = law1.correction(ext.kernel_index) - law2.correction(ext.kernel_index);
    if (!complex.is_cocycle(gamma))
        throw math_error("difference of liftings failed to be a cocycle");
    DifferenceClass out{gamma, complex.class_of(gamma)};
    return out;
}

DeformationLaw push_to_base(const DeformationLaw& law, const AlgExtension& ext)
{
    if (!(law.base() == ext.total))
        throw input_error("the law must live over the total algebra of the extension");
    BaseMap p;
    p.target = ext.base;
    for (int i = 0; i < ext.total.mdim(); ++i) {
        AVec img(ext.base.mdim() + 1, Rat(0));
        if (i != ext.kernel_index)
            img[i + 1] = 1;
        p.images.push_back(std::move(img));
    }
    return push_out(law, p);
}

DeformationLaw push_by_automorphism(const DeformationLaw& law, const AlgExtension& ext,
                                    const ExtensionAutomorphism& aut)
{
    if (!(law.base() == ext.total))
        throw input_error("the law must live over the total algebra of the extension");
    BaseMap r;
    r.target = ext.total;
    for (int i = 0; i < ext.total.mdim(); ++i)
        r.images.push_back(aut.apply(ext, ext.total.m_basis_vec(i)));
    return push_out(law, r);
}

} // namespace dialg
