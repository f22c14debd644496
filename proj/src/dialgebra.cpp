#include "dialg/dialgebra.hpp"

#include "dialg/linalg.hpp"

namespace dialg {

Dialgebra::Dialgebra(int dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names))
{
    if (dim < 1)
        throw input_error("dialgebra dimension must be at least 1");
    if (names_.empty()) {
        for (int i = 1; i <= dim; ++i)
            names_.push_back("e" + std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != dim)
        throw input_error("basis name count does not match dimension");
}

void Dialgebra::set_constant(Op op, int i, int j, int k, const Rat& value)
{
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_)
        throw input_error("structure constant index out of range");
    auto& tensor = op == Op::Left ? left_ : right_;
    if (value == 0)
        tensor.erase({i, j, k});
    else
        tensor[{i, j, k}] = value;
    table_valid_ = false;
}

Rat Dialgebra::constant(Op op, int i, int j, int k) const
{
    const auto& tensor = op == Op::Left ? left_ : right_;
    auto it = tensor.find({i, j, k});
    return it == tensor.end() ? Rat(0) : it->second;
}

void Dialgebra::build_table() const
{
    for (int t = 0; t < 2; ++t) {
        table_[t].assign(static_cast<size_t>(dim_) * dim_, {});
        const auto& tensor = t == 0 ? left_ : right_;
        for (const auto& [idx, v] : tensor)
            table_[t][static_cast<size_t>(idx[0]) * dim_ + idx[1]].push_back({idx[2], v});
    }
    table_valid_ = true;
}

const std::vector<std::pair<int, Rat>>& Dialgebra::basis_product(Op op, int i, int j) const
{
    if (!table_valid_)
        build_table();
    return table_[op == Op::Left ? 0 : 1][static_cast<size_t>(i) * dim_ + j];
}

Vec Dialgebra::product(Op op, const Vec& x, const Vec& y) const
{
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw input_error("vector length does not match dialgebra dimension");
    Vec out(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0)
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0)
                continue;
            Rat c = x[i] * y[j];
            for (const auto& [k, v] : basis_product(op, i, j))
                out[k] += c * v;
        }
    }
    return out;
}

Op Dialgebra::op_of_2tree(const Tree& y)
{
    if (y.vertices() != 2)
        throw input_error("expected a 2-tree");
    // [21] = |∨[1] carries ⊣, [12] = [1]∨| carries ⊢
    return y.left().is_leaf() ? Op::Left : Op::Right;
}

int Dialgebra::axiom_number(const Tree& y)
{
    const std::string l = y.label();
    if (l == "[321]")
        return 1;
    if (l == "[312]")
        return 2;
    if (l == "[131]")
        return 3;
    if (l == "[213]")
        return 4;
    if (l == "[123]")
        return 5;
    throw input_error("axiom numbers are attached to 3-trees only");
}

Vec Dialgebra::axiom_defect(const Tree& y, int i, int j, int k) const
{
    if (y.vertices() != 3)
        throw input_error("axiom defects are indexed by 3-trees");
    Op outer_r = y.circ(0);
    Op inner_r = op_of_2tree(y.face(0));
    Op outer_l = y.circ(3);
    Op inner_l = op_of_2tree(y.face(3));

    Vec a(dim_, Rat(0)), b(dim_, Rat(0)), c(dim_, Rat(0));
    a[i] = 1, b[j] = 1, c[k] = 1;
    Vec lhs = product(outer_r, a, product(inner_r, b, c));
    Vec rhs = product(outer_l, product(inner_l, a, b), c);
    for (int t = 0; t < dim_; ++t)
        lhs[t] -= rhs[t];
    return lhs;
}

Tree Dialgebra::tree_of_axiom(int axiom)
{
    for (const Tree& y : enumerate_trees(3))
        if (axiom_number(y) == axiom)
            return y;
    throw input_error("axiom number must be 1..5");
}

std::vector<AxiomViolation> Dialgebra::validate() const
{
    std::vector<AxiomViolation> out;
    for (int axiom = 1; axiom <= 5; ++axiom) {
        Tree y = tree_of_axiom(axiom);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) {
                    Vec defect = axiom_defect(y, i, j, k);
                    if (!is_zero_vec(defect))
                        out.push_back({axiom, {i, j, k}, std::move(defect)});
                }
    }
    return out;
}

} // namespace dialg
