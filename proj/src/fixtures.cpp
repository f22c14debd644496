#include "dialg/fixtures.hpp"

#include <algorithm>

namespace dialg {

namespace {

Dialgebra zero_dialgebra(int d)
{
    return Dialgebra(d);
}

Dialgebra kx2()
{
    // K[x]/(x²) with basis e1 = 1, e2 = x and ⊣ = ⊢ = multiplication
    Dialgebra d(2);
    for (Op op : {Op::Left, Op::Right}) {
        d.set_constant(op, 0, 0, 0, Rat(1));
        d.set_constant(op, 0, 1, 1, Rat(1));
        d.set_constant(op, 1, 0, 1, Rat(1));
    }
    return d;
}

Dialgebra barunit(int n)
{
    // e_i ⊣ e_j = ⟨e_j, e1⟩ e_i and e_i ⊢ e_j = ⟨e_i, e1⟩ e_j
    Dialgebra d(n);
    for (int i = 0; i < n; ++i) {
        d.set_constant(Op::Left, i, 0, i, Rat(1));
        d.set_constant(Op::Right, 0, i, i, Rat(1));
    }
    return d;
}

} // namespace

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names = {"zero1",    "zero2",    "zero3", "kx2",
                                                   "barunit2", "barunit3"};
    return names;
}

bool is_fixture_name(const std::string& name)
{
    const auto& names = fixture_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Dialgebra fixture(const std::string& name)
{
    if (name == "zero1")
        return zero_dialgebra(1);
    if (name == "zero2")
        return zero_dialgebra(2);
    if (name == "zero3")
        return zero_dialgebra(3);
    if (name == "kx2")
        return kx2();
    if (name == "barunit2")
        return barunit(2);
    if (name == "barunit3")
        return barunit(3);
    throw input_error("unknown fixture name: '" + name + "'");
}

} // namespace dialg
