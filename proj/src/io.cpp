#include "dialg/io.hpp"

#include <fstream>
#include <sstream>

namespace dialg {

Json rat_json(const Rat& q)
{
    return rat_str(q);
}

Rat rat_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return parse_rat(j.get<std::string>());
    throw input_error("rational values must be integers or 'p/q' strings");
}

namespace {

void require_object(const Json& j, const char* what)
{
    if (!j.is_object())
        throw input_error(std::string(what) + " document must be a JSON object");
}

void read_tensor(const Json& j, const char* key, Dialgebra& d, Op op)
{
    if (!j.contains(key))
        return;
    const Json& arr = j.at(key);
    if (!arr.is_array())
        throw input_error(std::string("'") + key + "' must be an array of [i,j,k,value]");
    for (const Json& entry : arr) {
        if (!entry.is_array() || entry.size() != 4)
            throw input_error(std::string("'") + key + "' entries must be [i,j,k,value]");
        d.set_constant(op, entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(),
                       rat_from_json(entry[3]));
    }
}

Json tensor_json(const Dialgebra& d, Op op)
{
    Json arr = Json::array();
    for (const auto& [idx, v] : d.constants(op))
        arr.push_back(Json::array({idx[0], idx[1], idx[2], rat_json(v)}));
    return arr;
}

} // namespace

Json dialgebra_to_json(const Dialgebra& d)
{
    Json j;
    j["dim"] = d.dim();
    j["basis"] = d.basis_names();
    j["left"] = tensor_json(d, Op::Left);
    j["right"] = tensor_json(d, Op::Right);
    return j;
}

Dialgebra dialgebra_from_json(const Json& j, bool check)
{
    require_object(j, "dialgebra");
    if (!j.contains("dim"))
        throw input_error("dialgebra document lacks 'dim'");
    int dim = j.at("dim").get<int>();
    std::vector<std::string> names;
    if (j.contains("basis"))
        names = j.at("basis").get<std::vector<std::string>>();
    Dialgebra d(dim, names);
    read_tensor(j, "left", d, Op::Left);
    read_tensor(j, "right", d, Op::Right);
    if (check) {
        std::vector<AxiomViolation> violations = d.validate();
        if (!violations.empty()) {
            std::ostringstream os;
            os << "dialgebra axioms fail:";
            for (size_t i = 0; i < violations.size() && i < 3; ++i)
                os << " [axiom " << violations[i].axiom << " at (" << violations[i].triple[0]
                   << "," << violations[i].triple[1] << "," << violations[i].triple[2] << ")]";
            if (violations.size() > 3)
                os << " and " << violations.size() - 3 << " more";
            throw math_error(os.str());
        }
    }
    return d;
}

Json cochain_to_json(const Cochain& f)
{
    Json j;
    j["degree"] = f.degree();
    Json entries = Json::array();
    const auto& trees = enumerate_trees(f.degree());
    const int d = f.dim();
    for (const auto& [idx, v] : f.coeffs()) {
        long long rest = idx;
        int k = static_cast<int>(rest % d);
        rest /= d;
        std::vector<int> multi(f.degree());
        for (int t = f.degree() - 1; t >= 0; --t) {
            multi[t] = static_cast<int>(rest % d);
            rest /= d;
        }
        int tree = static_cast<int>(rest);
        entries.push_back(Json::array({trees[tree].label(), multi, k, rat_json(v)}));
    }
    j["entries"] = std::move(entries);
    return j;
}

Cochain cochain_from_json(const Json& j, int dim)
{
    require_object(j, "cochain");
    if (!j.contains("degree"))
        throw input_error("cochain document lacks 'degree'");
    int degree = j.at("degree").get<int>();
    Cochain f(degree, dim);
    if (!j.contains("entries"))
        return f;
    for (const Json& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 4)
            throw input_error("cochain entries must be [treeLabel, [j...], k, value]");
        Tree y = parse_tree_label(e[0].get<std::string>());
        if (y.vertices() != degree)
            throw input_error("cochain entry tree degree mismatch");
        std::vector<int> multi = e[1].get<std::vector<int>>();
        f.add(tree_index(y), multi, e[2].get<int>(), rat_from_json(e[3]));
    }
    return f;
}

Json local_algebra_to_json(const LocalAlgebra& a)
{
    Json j;
    j["dim"] = a.dim();
    j["mideal_basis"] = a.mideal_names();
    Json products = Json::array();
    for (const auto& [idx, v] : a.products())
        if (idx[0] <= idx[1])
            products.push_back(Json::array({idx[0], idx[1], idx[2], rat_json(v)}));
    j["products"] = std::move(products);
    return j;
}

LocalAlgebra local_algebra_from_json(const Json& j)
{
    require_object(j, "local algebra");
    if (!j.contains("mideal_basis"))
        throw input_error("local algebra document lacks 'mideal_basis'");
    std::vector<std::string> names = j.at("mideal_basis").get<std::vector<std::string>>();
    if (j.contains("dim") && j.at("dim").get<int>() != static_cast<int>(names.size()) + 1)
        throw input_error("local algebra 'dim' must equal 1 + #mideal_basis");
    LocalAlgebra a(names);
    if (j.contains("products"))
        for (const Json& e : j.at("products")) {
            if (!e.is_array() || e.size() != 4)
                throw input_error("local algebra products must be [i,j,k,value]");
            a.set_product(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                          rat_from_json(e[3]));
        }
    std::vector<std::string> issues = a.validate();
    if (!issues.empty())
        throw math_error("local algebra invalid: " + issues.front());
    return a;
}

Json polyquot_to_json(const PolyQuotient& q)
{
    Json j;
    j["vars"] = q.vars();
    j["order"] = q.order();
    j["ideal"] = q.ideal_strings();
    return j;
}

PolyQuotient polyquot_from_json(const Json& j)
{
    require_object(j, "polynomial quotient");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    int order = j.at("order").get<int>();
    PolyQuotient plain(vars, order);
    std::vector<Poly> gens;
    if (j.contains("ideal"))
        for (const Json& s : j.at("ideal"))
            gens.push_back(plain.parse_poly(s.get<std::string>()));
    return PolyQuotient(vars, order, gens);
}

Json deformation_law_to_json(const DeformationLaw& law)
{
    Json j;
    j["base"] = local_algebra_to_json(law.base());
    j["dialgebra"] = dialgebra_to_json(law.algebra());
    Json corr = Json::object();
    for (int i = 0; i < law.mdim(); ++i)
        if (!law.correction(i).is_zero())
            corr[law.base().mideal_names()[i]] = cochain_to_json(law.correction(i));
    j["corrections"] = std::move(corr);
    return j;
}

DeformationLaw deformation_law_from_json(const Json& j, bool check, const Dialgebra* context)
{
    require_object(j, "deformation law");
    if (!j.contains("base"))
        throw input_error("deformation law document needs 'base'");
    if (!j.contains("dialgebra") && context == nullptr)
        throw input_error("deformation law document needs 'dialgebra'");
    LocalAlgebra base;
    if (j.at("base").contains("vars"))
        base = polyquot_from_json(j.at("base")).to_local_algebra();
    else
        base = local_algebra_from_json(j.at("base"));
    Dialgebra d = [&] {
        if (!j.contains("dialgebra"))
            return *context;
        const Json& dj = j.at("dialgebra");
        Dialgebra loaded = dj.is_string()
                               ? dialgebra_from_json(load_json_file(dj.get<std::string>()), check)
                               : dialgebra_from_json(dj, check);
        if (context != nullptr && !(loaded == *context))
            throw input_error("deformation law names a different dialgebra than the command");
        return loaded;
    }();
    DeformationLaw law(base, d);
    if (j.contains("corrections")) {
        require_object(j.at("corrections"), "corrections");
        for (const auto& [name, doc] : j.at("corrections").items()) {
            Cochain c = cochain_from_json(doc, d.dim());
            if (c.degree() != 2)
                throw input_error("law corrections must have degree 2");
            law.set_correction(base.name_index(name), std::move(c));
        }
    }
    if (check) {
        std::vector<LawViolation> violations = law.check();
        if (!violations.empty())
            throw math_error("deformation law breaks the dialgebra axioms (" +
                             std::to_string(violations.size()) + " violations)");
    }
    return law;
}

Json sym_bilinear_to_json(const SymBilinear& f)
{
    Json arr = Json::array();
    for (int i = 0; i < f.r; ++i)
        for (int j = i; j < f.r; ++j)
            if (f(i, j) != 0)
                arr.push_back(Json::array({i, j, rat_json(f(i, j))}));
    return arr;
}

SymBilinear sym_bilinear_from_json(const Json& j, int r)
{
    SymBilinear f(r);
    if (!j.is_array())
        throw input_error("cocycle must be an array of [i,j,value]");
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw input_error("cocycle entries must be [i,j,value]");
        f.set(e[0].get<int>(), e[1].get<int>(), rat_from_json(e[2]));
    }
    return f;
}

Json obstruction_report(const ObstructionResult& result)
{
    Json j;
    Json cls = Json::array();
    for (const Rat& c : result.cls)
        cls.push_back(rat_json(c));
    j["class"] = std::move(cls);
    j["extendible"] = result.extendible;
    j["defect"] = cochain_to_json(result.defect);
    if (result.psi)
        j["psi"] = cochain_to_json(*result.psi);
    return j;
}

Json miniversal_report(const MiniversalState& state)
{
    Json j;
    j["variables"] = state.base.nvars();
    j["order"] = state.order;
    j["ideal"] = state.base.ideal_strings();
    Json law = Json::object();
    std::vector<Monomial> mons = state.base.all_basis_monomials();
    for (size_t i = 0; i < mons.size(); ++i)
        if (!state.law.correction(static_cast<int>(i)).is_zero())
            law[state.base.monomial_string(mons[i])] =
                cochain_to_json(state.law.correction(static_cast<int>(i)));
    j["law"] = std::move(law);
    Json steps = Json::array();
    for (const MiniversalStep& s : state.steps)
        steps.push_back(Json{{"order", s.order}, {"harvested", s.harvested},
                             {"hy3_dim", s.hy3_dim}});
    j["steps"] = std::move(steps);
    return j;
}

Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write file: " + path);
    out << dump_json(j);
}

std::string dump_json(const Json& j)
{
    return j.dump(2) + "\n";
}

} // namespace dialg
