#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "twistkit/acceptance.hpp"
#include "twistkit/catalog.hpp"
#include "twistkit/cocycle.hpp"
#include "twistkit/parse.hpp"
#include "twistkit/presentation.hpp"
#include "twistkit/repcheck.hpp"

using namespace twistkit;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::domain_error("cannot write " + out_path);
    out << text;
}

// A presentation source: "catalog:<name>", "-" for stdin, otherwise a
// file holding presentation JSON.
GradedPresentation load_presentation(const std::string& source) {
    if (source.rfind("catalog:", 0) == 0) return catalog(source.substr(8));
    return GradedPresentation::from_json(json::parse(slurp(source)));
}

// Cocycle specs: builtin:sigma_V, builtin:bilinear_q:<matrix JSON>, an
// inline JSON descriptor, or a file holding one.
TwoCocycle resolve_cocycle(const std::string& spec, const std::optional<GradingGroup>& group,
                           unsigned order) {
    if (spec == "builtin:sigma_V") {
        TwoCocycle sigma = TwoCocycle::sigma_v(order);
        if (group && !(*group == sigma.group()))
            throw std::domain_error("builtin:sigma_V lives on Z/2 x Z/2, not on the given group");
        return sigma;
    }
    const std::string bilinear = "builtin:bilinear_q:";
    if (spec.rfind(bilinear, 0) == 0) {
        if (!group) throw std::domain_error("builtin:bilinear_q needs a group context");
        auto matrix = json::parse(spec.substr(bilinear.size())).get<std::vector<std::vector<long>>>();
        return TwoCocycle::bilinear_q(*group, matrix, order);
    }
    if (!group) throw std::domain_error("a cocycle descriptor needs a group context");
    json descriptor = spec.rfind('{', 0) == 0 || spec.rfind('[', 0) == 0 ? json::parse(spec)
                                                                         : json::parse(slurp(spec));
    return TwoCocycle::from_json(descriptor, *group, order);
}

json scalar_grid_json(const std::vector<std::vector<Scalar>>& grid) {
    json rows = json::array();
    for (const auto& row : grid) {
        json cells = json::array();
        for (const Scalar& s : row) cells.push_back(s.str());
        rows.push_back(cells);
    }
    return rows;
}

int cmd_check_cocycle(const std::string& spec, const std::string& group_json, unsigned order,
                      const std::string& out_path) {
    std::optional<GradingGroup> group;
    if (!group_json.empty()) group = GradingGroup::from_json(json::parse(group_json));
    TwoCocycle sigma = resolve_cocycle(spec, group, order);
    CocycleCheck check = check_cocycle(sigma);
    json report;
    report["command"] = "check-cocycle";
    report["cocycle"] = sigma.descriptor();
    report["group"] = sigma.group().to_json();
    report["status"] = check.valid ? "valid" : "invalid";
    report["details"] = check.details;
    if (check.witness) {
        json triple = json::array();
        for (const GroupElement& g : *check.witness) triple.push_back(g);
        report["witness"] = triple;
    }
    report["provenance"] = {{"input_hash", input_hash(sigma.descriptor().dump())}};
    emit(report, out_path);
    return check.valid ? 0 : 1;
}

int cmd_catalog(const std::string& name, const std::string& params_json, bool list,
                const std::string& out_path) {
    if (list) {
        json report;
        report["command"] = "catalog";
        report["names"] = catalog_names();
        emit(report, out_path);
        return 0;
    }
    GradedPresentation p = params_json.empty() ? catalog(name)
                                               : catalog(name, json::parse(params_json));
    emit(p.to_json(), out_path);
    return 0;
}

int cmd_twist(const std::string& in_path, const std::string& spec, const std::string& out_path) {
    GradedPresentation p = GradedPresentation::from_json(json::parse(slurp(in_path)));
    TwoCocycle sigma = spec.empty()
                           ? (p.cocycle ? *p.cocycle
                                        : throw std::domain_error(
                                              "no --cocycle given and the presentation carries none"))
                           : resolve_cocycle(spec, p.gens.group(), p.scalar_order);
    GradedPresentation twisted = twist_presentation(p, sigma);
    emit(twisted.to_json(), out_path);
    return 0;
}

int cmd_normalize(const std::string& source, const std::string& spec, const std::string& expr,
                  const std::string& out_path) {
    GradedPresentation p = load_presentation(source);
    if (!spec.empty())
        p = twist_presentation(p, resolve_cocycle(spec, p.gens.group(), p.scalar_order));
    RewriteSystem rules = rewrite_system(p);
    ConfluenceReport confluence = rules.check_local_confluence();
    NcPoly input = parse_poly(expr, p.gens, p.scalar_order);
    NcPoly normal = rules.normalize(input);
    json report;
    report["command"] = "normalize";
    report["expression"] = expr;
    report["normalized"] = normal.str(p.gens);
    report["confluent"] = confluence.confluent;
    report["provenance"] = {{"input_hash", input_hash(p.to_json().dump())}};
    emit(report, out_path);
    return 0;
}

int cmd_verify(const std::string& source, const std::string& target,
               const std::string& source_spec, const std::string& target_spec,
               const std::string& images_json, const std::string& out_path) {
    GradedPresentation src = load_presentation(source);
    if (!source_spec.empty())
        src = twist_presentation(src, resolve_cocycle(source_spec, src.gens.group(),
                                                      src.scalar_order));
    GradedPresentation dst = load_presentation(target);
    if (!target_spec.empty())
        dst = twist_presentation(dst, resolve_cocycle(target_spec, dst.gens.group(),
                                                      dst.scalar_order));
    std::vector<NcPoly> images;
    for (const auto& text : json::parse(images_json).get<std::vector<std::string>>())
        images.push_back(parse_poly(text, dst.gens, dst.scalar_order));
    HomomorphismReport verdict = verify_homomorphism(images, src, dst);
    json report;
    report["command"] = "verify";
    report["status"] = verdict.holds ? "pass" : "fail";
    report["details"] = verdict.details;
    report["provenance"] = {{"source_hash", input_hash(src.to_json().dump())},
                            {"target_hash", input_hash(dst.to_json().dump())}};
    emit(report, out_path);
    return verdict.holds ? 0 : 1;
}

int cmd_modules(const std::string& family, unsigned n, const std::string& sign_text,
                const std::string& out_path) {
    int sign = 0;
    if (sign_text == "+" || sign_text == "+1" || sign_text == "1") sign = +1;
    else if (sign_text == "-" || sign_text == "-1") sign = -1;
    else if (!sign_text.empty())
        throw std::domain_error("--sign must be +1 or -1");
    MatrixModule m;
    if (family == "E") {
        if (sign != 0) throw std::domain_error("the E family takes no sign");
        m = build_E(n);
    } else if (family == "A") {
        m = build_A(n, sign == 0 ? +1 : sign);
    } else if (family == "B") {
        m = build_B(n, sign == 0 ? +1 : sign);
    } else {
        throw std::domain_error("--family must be E, A or B");
    }
    json report = module_report(m);
    emit(report, out_path);
    return report["relations_ok"] == true && report["simple"] == true ? 0 : 1;
}

int cmd_twist_to_tensor(const std::string& spec, const std::string& group_json, unsigned order,
                        const std::string& out_path) {
    std::optional<GradingGroup> group;
    if (!group_json.empty()) group = GradingGroup::from_json(json::parse(group_json));
    TwoCocycle sigma = resolve_cocycle(spec, group, order);
    GroupAlgebraTensor tensor = cocycle_to_twist(sigma);
    json report;
    report["command"] = "twist-to-tensor";
    report["cocycle"] = sigma.descriptor();
    report["group"] = sigma.group().to_json();
    report["coefficients"] = scalar_grid_json(tensor.coefficients);
    report["lazy"] = twist_is_lazy(tensor);
    report["provenance"] = {{"input_hash", input_hash(sigma.descriptor().dump())}};
    emit(report, out_path);
    return 0;
}

int cmd_suite(const std::string& out_path) {
    auto results = run_acceptance_cases();
    json cases = json::array();
    int failures = 0;
    for (const CaseResult& result : results) {
        cases.push_back({{"name", result.name},
                         {"status", result.status},
                         {"details", result.details},
                         {"provenance", result.provenance}});
        if (result.status != "pass") ++failures;
    }
    json report;
    report["command"] = "suite";
    report["cases"] = cases;
    report["failures"] = failures;
    emit(report, out_path);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact twisting of group-graded algebra presentations"};
    app.require_subcommand(1);

    std::string cocycle_spec, group_json, out_path = "-", in_path = "-";
    std::string name, params_json, expr, source, target, source_spec, target_spec, images_json;
    std::string family, sign_text;
    unsigned order = Scalar::default_order, module_n = 0;
    bool list_names = false;

    CLI::App* check = app.add_subcommand("check-cocycle", "validate a two-cocycle");
    check->add_option("--cocycle", cocycle_spec, "cocycle spec")->required();
    check->add_option("--group", group_json, "grading group JSON");
    check->add_option("--order", order, "cyclotomic order");
    check->add_option("--output", out_path, "report path");

    CLI::App* cat = app.add_subcommand("catalog", "print a catalog presentation");
    cat->add_option("name", name, "catalog entry name");
    cat->add_option("--params", params_json, "parameter JSON");
    cat->add_flag("--list", list_names, "list catalog names");
    cat->add_option("--output", out_path, "report path");

    CLI::App* twist = app.add_subcommand("twist", "twist a presentation by a cocycle");
    twist->add_option("--input", in_path, "presentation JSON path, - for stdin");
    twist->add_option("--cocycle", cocycle_spec, "cocycle spec (default: the attached one)");
    twist->add_option("--output", out_path, "twisted presentation path");

    CLI::App* norm = app.add_subcommand("normalize", "normalize an expression modulo relations");
    norm->add_option("--catalog", name, "catalog entry to use as the source");
    norm->add_option("--input", in_path, "presentation JSON path");
    norm->add_option("--cocycle", cocycle_spec, "twist the presentation first");
    norm->add_option("--expr", expr, "expression to normalize")->required();
    norm->add_option("--output", out_path, "report path");

    CLI::App* verify = app.add_subcommand("verify", "certify a homomorphism by images");
    verify->add_option("--source", source, "source presentation (catalog:<name>, file, -)")
        ->required();
    verify->add_option("--target", target, "target presentation (catalog:<name>, file, -)")
        ->required();
    verify->add_option("--twist-source", source_spec, "cocycle applied to the source");
    verify->add_option("--twist-target", target_spec, "cocycle applied to the target");
    verify->add_option("--images", images_json, "JSON array of image expressions")->required();
    verify->add_option("--output", out_path, "report path");

    CLI::App* modules = app.add_subcommand("modules", "build and audit a module family member");
    modules->add_option("--family", family, "E, A or B")->required();
    modules->add_option("--n", module_n, "family index")->required();
    modules->add_option("--sign", sign_text, "+1 or -1 for the odd families");
    modules->add_option("--output", out_path, "report path");

    CLI::App* tensor = app.add_subcommand("twist-to-tensor", "expand a cocycle into its twist tensor");
    tensor->add_option("--cocycle", cocycle_spec, "cocycle spec")->required();
    tensor->add_option("--group", group_json, "grading group JSON");
    tensor->add_option("--order", order, "cyclotomic order");
    tensor->add_option("--output", out_path, "report path");

    CLI::App* suite = app.add_subcommand("suite", "run the full verification battery");
    suite->add_option("--output", out_path, "report path");

    try {
        app.parse(argc, argv);
        if (check->parsed()) return cmd_check_cocycle(cocycle_spec, group_json, order, out_path);
        if (cat->parsed()) {
            if (!list_names && name.empty())
                throw std::domain_error("catalog needs a name or --list");
            return cmd_catalog(name, params_json, list_names, out_path);
        }
        if (twist->parsed()) return cmd_twist(in_path, cocycle_spec, out_path);
        if (norm->parsed()) {
            std::string src = name.empty() ? in_path : "catalog:" + name;
            return cmd_normalize(src, cocycle_spec, expr, out_path);
        }
        if (verify->parsed())
            return cmd_verify(source, target, source_spec, target_spec, images_json, out_path);
        if (modules->parsed()) return cmd_modules(family, module_n, sign_text, out_path);
        if (tensor->parsed()) return cmd_twist_to_tensor(cocycle_spec, group_json, order, out_path);
        if (suite->parsed()) return cmd_suite(out_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
