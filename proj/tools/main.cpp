// Command-line front end: exact verification, classification, isomorphism and
// realization checks for the graded pre-Lie families A_a and B_b.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "prelie/classify.hpp"
#include "prelie/errors.hpp"
#include "prelie/search.hpp"
#include "prelie/vector_field.hpp"

using namespace prelie;
using njson = nlohmann::ordered_json;

namespace {

struct StructureArgs {
    std::string family;  // "A" or "B"
    std::string param = "0";
    std::string table_path;
    bool symbolic = false;
};

void add_structure_flags(CLI::App* cmd, StructureArgs& args) {
    cmd->add_option("--family", args.family, "closed family: A or B");
    cmd->add_option("--param", args.param, "family parameter (scalar expression)");
    cmd->add_option("--table", args.table_path, "path to a table JSON file");
    cmd->add_flag("--symbolic", args.symbolic, "use the formal parameter t");
}

StructureMap load_structure(const StructureArgs& args) {
    if (!args.table_path.empty()) {
        std::ifstream in(args.table_path);
        if (!in) throw CLI::ValidationError("--table", "cannot open " + args.table_path);
        std::stringstream buf;
        buf << in.rdbuf();
        return structure_from_json(buf.str(), args.symbolic);
    }
    Scalar p = args.symbolic ? scalar_t() : parse_scalar(args.param);
    if (args.family == "A") return StructureMap::closed_a(p);
    if (args.family == "B") return StructureMap::closed_b(p);
    throw CLI::ValidationError("--family", "must be A or B (or use --table)");
}

StructureMap parse_side(const std::string& text, int) {
    // "A:2" or "B:2/5"
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--lhs/--rhs", "expected family:param, e.g. A:2");
    std::string fam = text.substr(0, colon);
    Scalar p = parse_scalar(text.substr(colon + 1));
    if (fam == "A") return StructureMap::closed_a(p);
    if (fam == "B") return StructureMap::closed_b(p);
    throw CLI::ValidationError("--lhs/--rhs", "family must be A or B");
}

void emit(const njson& report, bool json_output) {
    if (json_output) {
        std::cout << report.dump() << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for graded pre-Lie structures e_i o e_j = f(i)g(j)e_{i+j}"};
    app.require_subcommand(1);

    bool json_output = false;
    app.add_flag("--json", json_output, "compact JSON output (default is indented JSON)");
    app.add_flag("--text", [](int64_t) {}, "indented output (default)");

    StructureArgs check_args, classify_args, invariants_args, bracket_args, realize_args;
    int radius = 4;

    auto* check = app.add_subcommand("check", "defect scan of the pre-Lie identity");
    check->fallthrough();
    add_structure_flags(check, check_args);
    check->add_option("--radius", radius, "window radius");

    auto* classify_cmd = app.add_subcommand("classify", "decision procedure for a window table");
    classify_cmd->fallthrough();
    add_structure_flags(classify_cmd, classify_args);

    auto* iso = app.add_subcommand("iso", "check a diagonal (+-reversal) isomorphism candidate");
    iso->fallthrough();
    std::string map_kind, lhs_text, rhs_text;
    int iso_radius = 6;
    iso->add_option("--map", map_kind, "flipA (e_i -> e_-i) or flipB (e_i -> -e_-i)")->required();
    iso->add_option("--lhs", lhs_text, "left structure, family:param")->required();
    iso->add_option("--rhs", rhs_text, "right structure, family:param")->required();
    iso->add_option("--radius", iso_radius, "window radius");

    auto* invariants = app.add_subcommand("invariants", "isomorphism invariants of a closed family");
    invariants->fallthrough();
    add_structure_flags(invariants, invariants_args);
    int inv_radius = 4;
    invariants->add_option("--radius", inv_radius, "window radius (>= 3)");

    auto* search = app.add_subcommand("search", "enumerate window tables and classify survivors");
    search->fallthrough();
    int search_radius = 2;
    std::string values_csv = "0,1,-1";
    unsigned long long budget = 100'000'000ULL;
    bool override_budget = false;
    std::string split_name = "All";
    search->add_option("--radius", search_radius, "window radius");
    search->add_option("--values", values_csv, "comma-separated value set");
    search->add_option("--budget", budget, "defect-evaluation budget");
    search->add_flag("--override-budget", override_budget, "run past the budget guard");
    search->add_option("--case", split_name, "All | A | B");

    auto* realize = app.add_subcommand("realize", "vector-field realization checks");
    realize->fallthrough();
    add_structure_flags(realize, realize_args);
    int realize_radius = 4;
    realize->add_option("--radius", realize_radius, "window radius");

    auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket structure constants");
    bracket_cmd->fallthrough();
    add_structure_flags(bracket_cmd, bracket_args);
    int bracket_radius = 4;
    bracket_cmd->add_option("--radius", bracket_radius, "window radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) {
            StructureMap S = load_structure(check_args);
            DefectReport report = defect_scan(S, radius);
            njson j = njson::parse(to_json_string(report));
            j["annihilator"] = njson::array();
            for (Degree d : annihilator_window(S, radius)) j["annihilator"].push_back(d);
            emit(j, json_output);
            return report.empty() && j["annihilator"].empty() ? 0 : 1;
        }
        if (classify_cmd->parsed()) {
            StructureMap S = load_structure(classify_args);
            ClassificationResult res = classify(S);
            emit(njson::parse(to_json_string(res)), json_output);
            return res.verdict == Verdict::TypeA || res.verdict == Verdict::TypeB ? 0 : 1;
        }
        if (iso->parsed()) {
            StructureMap lhs = parse_side(lhs_text, iso_radius);
            StructureMap rhs = parse_side(rhs_text, iso_radius);
            DiagonalMap map;
            if (map_kind == "flipA") map = DiagonalMap::flip_a(iso_radius, lhs.exemplar());
            else if (map_kind == "flipB") map = DiagonalMap::flip_b(iso_radius, lhs.exemplar());
            else throw CLI::ValidationError("--map", "must be flipA or flipB");
            auto violations = iso_check(map, lhs, rhs, iso_radius);
            njson j;
            j["map"] = map_kind;
            j["violations"] = njson::array();
            for (const auto& v : violations)
                j["violations"].push_back({v.i, v.j, to_string(v.lhs), to_string(v.rhs)});
            emit(j, json_output);
            return violations.empty() ? 0 : 1;
        }
        if (invariants->parsed()) {
            StructureMap S = load_structure(invariants_args);
            InvariantSummary inv = invariants_extract(S, inv_radius);
            njson j;
            j["e0_square_zero"] = inv.e0_square_zero;
            j["associative"] = inv.associative;
            j["spectrum"] = njson::array();
            for (const auto& s : inv.spectrum) j["spectrum"].push_back(to_string(s));
            j["assoc_ratio"] = to_string(inv.assoc_ratio);
            j["b_from_ratio"] = to_string(b_from_assoc_ratio(inv.assoc_ratio));
            emit(j, json_output);
            return 0;
        }
        if (search->parsed()) {
            SearchConfig cfg;
            cfg.radius = search_radius;
            cfg.budget = budget;
            cfg.override_budget = override_budget;
            if (split_name == "All") cfg.split = CaseSplit::All;
            else if (split_name == "A") cfg.split = CaseSplit::CaseAOnly;
            else if (split_name == "B") cfg.split = CaseSplit::CaseBOnly;
            else throw CLI::ValidationError("--case", "must be All, A or B");
            std::stringstream ss(values_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                cfg.value_set.push_back(std::get<GaussRational>(parse_scalar(item)));
            SearchReport report = run_search(cfg);
            emit(njson::parse(to_json_string(report)), json_output);
            return 0;
        }
        if (realize->parsed()) {
            StructureMap S = load_structure(realize_args);
            njson j;
            Realization R = S.is_closed_a() ? realize_A(S.param(), realize_radius)
                                            : realize_B0(realize_radius, is_symbolic(S.param()));
            auto violations = verify_realization(R, S, realize_radius);
            j["realization"] = njson::array();
            for (const auto& [d, vf] : R.assignment)
                j["realization"].push_back({d, to_string(vf)});
            j["violations"] = njson::array();
            for (const auto& v : violations) j["violations"].push_back({v.i, v.j});
            if (S.is_closed_b()) {
                ObstructionB obs = obstruction_B(S.param());
                j["obstruction"] = {{"abstract", to_json_string(obs.abstract)},
                                    {"realized", to_string(obs.realized)},
                                    {"consistent", obs.consistent}};
            }
            emit(j, json_output);
            return violations.empty() ? 0 : 1;
        }
        if (bracket_cmd->parsed()) {
            StructureMap S = load_structure(bracket_args);
            njson j;
            j["bracket"] = njson::array();
            Scalar like = S.exemplar();
            for (Degree i = -bracket_radius; i <= bracket_radius; ++i)
                for (Degree jdeg = -bracket_radius; jdeg <= bracket_radius; ++jdeg) {
                    Element br = bracket(S, Element::basis(i, like), Element::basis(jdeg, like));
                    j["bracket"].push_back({i, jdeg, to_string(br.coefficient_at(i + jdeg))});
                }
            if (S.is_closed_b()) {
                j["bar_bracket"] = njson::array();
                const Scalar& b = S.param();
                for (Degree i = -bracket_radius; i <= bracket_radius; ++i)
                    for (Degree jdeg = -bracket_radius; jdeg <= bracket_radius; ++jdeg) {
                        Element bi = change_of_basis_B(b, Element::basis(i, like),
                                                      BarDirection::to_bar);
                        Element bj = change_of_basis_B(b, Element::basis(jdeg, like),
                                                      BarDirection::to_bar);
                        Element br = change_of_basis_B(b, bracket(S, bi, bj),
                                                      BarDirection::from_bar);
                        j["bar_bracket"].push_back({i, jdeg, to_string(br.coefficient_at(i + jdeg))});
                    }
            }
            emit(j, json_output);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
