#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "bistab/report_json.hpp"
#include "bistab/table.hpp"
#include "bistab/verify.hpp"

namespace {

using bistab::IndexReport;

void print_index_report(const bistab::HypersurfaceModel& model, const IndexReport& report,
                        bool as_json) {
    if (as_json) {
        nlohmann::json j = report;
        j["family"] = model;
        j["family_label"] = bistab::family_label(model);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "family:     " << bistab::family_label(model) << "\n";
    std::cout << "index:      " << bistab::to_string(report.index) << "\n";
    std::cout << "nullity:    ";
    if (report.nullity_levels.empty()) {
        std::cout << "none\n";
    } else {
        for (const auto& level : report.nullity_levels)
            std::cout << "eigenvalue " << level.eigenvalue.str() << " x "
                      << bistab::to_string(level.multiplicity) << "  ";
        std::cout << "\n";
    }
    std::cout << "contributing eigenspaces:\n";
    for (const auto& [level, value] : report.contributing)
        std::cout << "  eigenvalue " << level.eigenvalue.str() << "  multiplicity "
                  << bistab::to_string(level.multiplicity) << "  form value " << value.str()
                  << "\n";
    std::cout << "enumeration cutoff: " << report.cutoff_used.str()
              << " (form is positive at and below it)\n";
    if (report.closed_form_index)
        std::cout << "closed form: " << bistab::to_string(*report.closed_form_index) << " ("
                  << (report.agreement ? "agrees" : "DISAGREES") << ")\n";
}

int run_verify(const std::string& suite, const bistab::VerifyOptions& options) {
    std::vector<bistab::CheckResult> checks;
    const auto append = [&checks](std::vector<bistab::CheckResult> more) {
        for (auto& check : more) checks.push_back(std::move(check));
    };
    if (suite == "spectrum" || suite == "all") append(bistab::verify_spectrum());
    if (suite == "forms" || suite == "all") append(bistab::verify_forms());
    if (suite == "quadrature" || suite == "all") append(bistab::verify_quadrature(options));
    if (suite == "variation" || suite == "all") append(bistab::verify_variation(options));

    nlohmann::json report;
    report["suite"] = suite;
    report["checks"] = nlohmann::json::array();
    for (const auto& check : checks) {
        nlohmann::json entry;
        entry["name"] = check.name;
        entry["pass"] = check.pass;
        entry["details"] = check.details;
        report["checks"].push_back(std::move(entry));
    }
    const bool pass = bistab::all_pass(checks);
    report["pass"] = pass;
    std::cout << report.dump(2) << "\n";
    for (const auto& check : checks)
        if (!check.pass) std::cerr << "FAIL: " << check.name << "\n";
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stability indices of biharmonic and minimal hypersurfaces of round spheres"};
    app.require_subcommand(1);

    const char* env_format = std::getenv("BISTAB_FORMAT");
    const std::string default_format = env_format ? env_format : "";

    // --- index ---
    auto* index_cmd = app.add_subcommand("index", "Index and nullity of one hypersurface");
    index_cmd->require_subcommand(1);
    std::string index_format = default_format.empty() ? "text" : default_format;
    int arg_p = 0, arg_q = 0, arg_m = 0;
    bool json_flag = false;

    const auto add_family = [&](const std::string& name, const std::string& desc, bool pq) {
        auto* cmd = index_cmd->add_subcommand(name, desc);
        if (pq) {
            cmd->add_option("-p", arg_p, "first factor dimension")->required();
            cmd->add_option("-q", arg_q, "second factor dimension")->required();
        } else {
            cmd->add_option("-m", arg_m, "hypersurface dimension")->required();
        }
        cmd->add_option("--format", index_format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--json", json_flag, "shorthand for --format json");
        return cmd;
    };
    auto* torus_cmd = add_family("torus", "proper biharmonic S^p(1/sqrt2) x S^q(1/sqrt2)", true);
    auto* sphere_cmd = add_family("small-sphere", "proper biharmonic S^m(1/sqrt2)", false);
    auto* equator_cmd = add_family("minimal-equator", "totally geodesic S^m(1)", false);
    auto* clifford_cmd =
        add_family("minimal-clifford", "minimal S^p(sqrt(p/m)) x S^q(sqrt(q/m))", true);

    // --- table ---
    auto* table_cmd =
        app.add_subcommand("table", "Biharmonic hypersurfaces with ambient dimension <= M");
    int ambient_max = 10;
    std::string table_format = default_format.empty() ? "md" : default_format;
    table_cmd->add_option("--ambient-max", ambient_max, "largest ambient sphere dimension")
        ->required();
    table_cmd->add_option("--format", table_format, "md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));

    // --- verify ---
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    bistab::VerifyOptions options;
    verify_cmd->add_option("suite", suite, "spectrum, forms, quadrature, variation or all")
        ->required()
        ->check(CLI::IsMember({"spectrum", "forms", "quadrature", "variation", "all"}));
    verify_cmd->add_option("--samples", options.samples, "Monte-Carlo sample count");
    verify_cmd->add_option("--seed", options.seed, "random seed");
    verify_cmd->add_option("--dt", options.dt, "finite-difference step");
    verify_cmd->add_option("--n", options.n, "circle node count (power of two)");
    verify_cmd->add_option("--tolerance", options.tolerance, "relative error tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (index_cmd->parsed()) {
            std::optional<bistab::HypersurfaceModel> model;
            if (torus_cmd->parsed()) model = bistab::BiharmonicTorus(arg_p, arg_q);
            if (sphere_cmd->parsed()) model = bistab::BiharmonicSmallSphere(arg_m);
            if (equator_cmd->parsed()) model = bistab::MinimalEquator(arg_m);
            if (clifford_cmd->parsed()) model = bistab::MinimalCliffordTorus(arg_p, arg_q);
            const IndexReport report = bistab::compute_index(*model);
            print_index_report(*model, report, json_flag || index_format == "json");
            return 0;
        }
        if (table_cmd->parsed()) {
            const auto rows = bistab::biharmonic_table(ambient_max);
            bistab::TableFormat format = bistab::TableFormat::Markdown;
            if (table_format == "csv") format = bistab::TableFormat::Csv;
            if (table_format == "json") format = bistab::TableFormat::Json;
            std::cout << bistab::render_table(rows, format);
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(suite, options);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
