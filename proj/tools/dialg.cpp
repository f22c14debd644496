#include "dialg/fixtures.hpp"
#include "dialg/io.hpp"
#include "dialg/miniversal.hpp"
#include "dialg/obstruction.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace dialg;

namespace {

struct Output {
    bool json = false;
    std::string out_path;

    void emit(const Json& report, const std::string& text) const
    {
        if (!out_path.empty())
            write_json_file(out_path, report);
        else if (json)
            std::cout << dump_json(report);
        else
            std::cout << text;
    }
};

// Fixture shorthands resolve to the bundled dialgebras; anything else is a
// file path.
Json resolve_input(const std::string& arg)
{
    if (std::filesystem::exists(arg))
        return load_json_file(arg);
    if (is_fixture_name(arg))
        return dialgebra_to_json(fixture(arg));
    throw input_error("no such file or fixture: '" + arg + "'");
}

Dialgebra load_input(const std::string& arg, bool check)
{
    return dialgebra_from_json(resolve_input(arg), check);
}

std::string render_trees(const Json& j)
{
    std::ostringstream os;
    os << "Y_" << j.at("n").get<int>() << ": " << j.at("count").get<long long>() << " trees\n";
    for (const Json& t : j.at("trees")) {
        os << "  " << t.at("label").get<std::string>();
        if (t.contains("faces")) {
            os << "  faces:";
            for (const Json& f : t.at("faces"))
                os << " " << f.get<std::string>();
        }
        if (t.contains("ops")) {
            os << "  ops:";
            for (const Json& o : t.at("ops"))
                os << " " << o.get<std::string>();
        }
        os << "\n";
    }
    return os.str();
}

std::string render_check(const Json& j)
{
    std::ostringstream os;
    if (j.at("valid").get<bool>()) {
        os << "valid: all five dialgebra axioms hold\n";
        return os.str();
    }
    os << "INVALID: " << j.at("violations").size() << " axiom violations\n";
    for (const Json& v : j.at("violations")) {
        os << "  axiom " << v.at("axiom").get<int>() << " at (";
        const Json& triple = v.at("triple");
        os << triple[0].get<int>() << "," << triple[1].get<int>() << "," << triple[2].get<int>()
           << "), defect [";
        bool first = true;
        for (const Json& c : v.at("defect")) {
            if (!first)
                os << ", ";
            os << c.get<std::string>();
            first = false;
        }
        os << "]\n";
    }
    return os.str();
}

std::string render_cohomology(const Json& j)
{
    std::ostringstream os;
    os << "HY^" << j.at("degree").get<int>() << ": dimension " << j.at("dim").get<int>()
       << " (cochains " << j.at("cy_dim").get<long long>() << ", cocycles "
       << j.at("kernel_dim").get<int>() << ", coboundaries " << j.at("image_dim").get<int>()
       << ")\n";
    if (j.contains("representatives"))
        os << "  " << j.at("representatives").size() << " representative cochains included\n";
    return os.str();
}

std::string render_law(const Json& j, const std::string& title)
{
    std::ostringstream os;
    os << title << "\n";
    const Json& base = j.at("base");
    os << "  base: maximal ideal of dimension " << base.at("mideal_basis").size() << " (";
    bool first = true;
    for (const Json& n : base.at("mideal_basis")) {
        if (!first)
            os << ", ";
        os << n.get<std::string>();
        first = false;
    }
    os << ")\n  corrections on " << j.at("corrections").size() << " basis elements\n";
    return os.str();
}

std::string render_obstruction(const Json& j)
{
    std::ostringstream os;
    os << "obstruction class [";
    bool first = true;
    for (const Json& c : j.at("class")) {
        if (!first)
            os << ", ";
        os << c.get<std::string>();
        first = false;
    }
    os << "]\n" << (j.at("extendible").get<bool>() ? "extendible: yes" : "extendible: no")
       << "\n";
    return os.str();
}

std::string render_miniversal(const Json& j)
{
    std::ostringstream os;
    os << "miniversal base at order " << j.at("order").get<int>() << ": K[[";
    for (int i = 1; i <= j.at("variables").get<int>(); ++i)
        os << (i > 1 ? ", " : "") << "t" << i;
    os << "]] / I with I generated by:\n";
    if (j.at("ideal").empty())
        os << "  (no relations through this order)\n";
    for (const Json& g : j.at("ideal"))
        os << "  " << g.get<std::string>() << "\n";
    for (const Json& s : j.at("steps"))
        os << "order " << s.at("order").get<int>() << ": harvested "
           << s.at("harvested").get<int>() << " relations (HY^3 dimension "
           << s.at("hy3_dim").get<int>() << ")\n";
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"dialgebra cohomology and deformation toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Output output;
    int threads = 1;
    bool no_check = false;
    app.add_flag("--json", output.json, "print the JSON report instead of text");
    app.add_option("--out", output.out_path, "write the JSON report to a file");
    app.add_option("--threads", threads, "worker threads for matrix assembly")
        ->check(CLI::PositiveNumber);
    app.add_flag("--no-check", no_check, "skip axiom validation when loading");

    // trees
    int trees_n = 0;
    bool trees_ops = false, trees_faces = false;
    CLI::App* cmd_trees = app.add_subcommand("trees", "list Y_n with faces and ∘-tables");
    cmd_trees->add_option("n", trees_n, "tree degree")->required();
    cmd_trees->add_flag("--ops", trees_ops, "include the operation-symbol table");
    cmd_trees->add_flag("--faces", trees_faces, "include all faces");

    // check
    std::string check_input;
    CLI::App* cmd_check = app.add_subcommand("check", "validate the five dialgebra axioms");
    cmd_check->add_option("input", check_input, "dialgebra file or fixture name")->required();

    // cohomology
    std::string coh_input;
    int coh_degree = -1;
    bool coh_reps = false;
    CLI::App* cmd_coh = app.add_subcommand("cohomology", "dimension of HY^n with representatives");
    cmd_coh->add_option("input", coh_input, "dialgebra file or fixture name")->required();
    cmd_coh->add_option("--degree", coh_degree, "cohomology degree (0..3)")->required();
    cmd_coh->add_flag("--reps", coh_reps, "include representative cochains");

    // infinitesimal
    std::string inf_input;
    CLI::App* cmd_inf =
        app.add_subcommand("infinitesimal", "universal infinitesimal deformation η_D");
    cmd_inf->add_option("input", inf_input, "dialgebra file or fixture name")->required();

    // obstruction
    std::string obs_input, obs_def, obs_ext;
    CLI::App* cmd_obs =
        app.add_subcommand("obstruction", "obstruction class of a deformation and extension");
    cmd_obs->add_option("input", obs_input, "dialgebra file or fixture name")->required();
    cmd_obs->add_option("--deformation", obs_def, "deformation law document")->required();
    cmd_obs->add_option("--extension", obs_ext, "extension document")->required();

    // miniversal
    std::string mini_input;
    int mini_order = 4;
    long long mini_budget = default_monomial_budget;
    CLI::App* cmd_mini =
        app.add_subcommand("miniversal", "truncated miniversal deformation of a dialgebra");
    cmd_mini->add_option("input", mini_input, "dialgebra file or fixture name")->required();
    cmd_mini->add_option("--order", mini_order, "truncation order (≥ 1, default 4)");
    cmd_mini->add_option("--budget", mini_budget, "coefficient slot budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_thread_count(threads);

        if (cmd_trees->parsed()) {
            const auto& trees = enumerate_trees(trees_n);
            Json report;
            report["n"] = trees_n;
            report["count"] = static_cast<long long>(trees.size());
            Json list = Json::array();
            for (const Tree& y : trees) {
                Json t;
                t["label"] = y.label();
                if (trees_faces && trees_n >= 1) {
                    Json faces = Json::array();
                    for (int i = 0; i <= trees_n; ++i)
                        faces.push_back(y.face(i).label());
                    t["faces"] = std::move(faces);
                }
                if (trees_ops && trees_n >= 1) {
                    Json ops = Json::array();
                    for (int i = 0; i <= trees_n; ++i)
                        ops.push_back(op_name(y.circ(i)));
                    t["ops"] = std::move(ops);
                }
                list.push_back(std::move(t));
            }
            report["trees"] = std::move(list);
            output.emit(report, render_trees(report));
            return 0;
        }

        if (cmd_check->parsed()) {
            Dialgebra d = dialgebra_from_json(resolve_input(check_input), /*check=*/false);
            std::vector<AxiomViolation> violations = d.validate();
            Json report;
            report["valid"] = violations.empty();
            Json vlist = Json::array();
            for (const AxiomViolation& v : violations) {
                Json defect = Json::array();
                for (const Rat& c : v.defect)
                    defect.push_back(rat_json(c));
                vlist.push_back(Json{{"axiom", v.axiom},
                                     {"triple", {v.triple[0], v.triple[1], v.triple[2]}},
                                     {"defect", std::move(defect)}});
            }
            report["violations"] = std::move(vlist);
            output.emit(report, render_check(report));
            return violations.empty() ? 0 : 1;
        }

        if (cmd_coh->parsed()) {
            CochainComplex complex(load_input(coh_input, !no_check));
            const CohomologySpace& h = complex.cohomology(coh_degree);
            Json report;
            report["degree"] = coh_degree;
            report["dim"] = h.dim;
            report["cy_dim"] = complex.dim_cy(coh_degree);
            report["kernel_dim"] = h.cocycles.dim();
            report["image_dim"] = h.coboundaries.dim();
            if (coh_reps) {
                Json reps = Json::array();
                for (const Cochain& f : h.representatives)
                    reps.push_back(cochain_to_json(f));
                report["representatives"] = std::move(reps);
            }
            output.emit(report, render_cohomology(report));
            return 0;
        }

        if (cmd_inf->parsed()) {
            CochainComplex complex(load_input(inf_input, !no_check));
            Json report = deformation_law_to_json(universal_infinitesimal(complex));
            output.emit(report, render_law(report, "universal infinitesimal deformation"));
            return 0;
        }

        if (cmd_obs->parsed()) {
            Dialgebra d = load_input(obs_input, !no_check);
            CochainComplex complex(d);
            DeformationLaw law =
                deformation_law_from_json(load_json_file(obs_def), !no_check, &d);
            Json extdoc = load_json_file(obs_ext);
            if (!extdoc.is_object() || !extdoc.contains("cocycle"))
                throw input_error("extension document needs a 'cocycle' field");
            if (extdoc.contains("base")) {
                LocalAlgebra base = local_algebra_from_json(extdoc.at("base"));
                if (!(base == law.base()))
                    throw input_error("extension base differs from the deformation base");
            }
            SymBilinear f = sym_bilinear_from_json(extdoc.at("cocycle"), law.base().mdim());
            AlgExtension ext = extension_from_cocycle(law.base(), f);
            ObstructionResult result = obstruction_class(law, ext, complex);
            Json report = obstruction_report(result);
            output.emit(report, render_obstruction(report));
            return 0;
        }

        if (cmd_mini->parsed()) {
            if (mini_order < 1)
                throw input_error("miniversal order must be at least 1");
            CochainComplex complex(load_input(mini_input, !no_check));
            MiniversalState state = miniversal(complex, mini_order, mini_budget);
            Json report = miniversal_report(state);
            output.emit(report, render_miniversal(report));
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
