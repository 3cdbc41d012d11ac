#include "bistab/report_json.hpp"

#include "bistab/table.hpp"

namespace bistab {

void to_json(nlohmann::json& j, const Rational& value) { j = value.str(); }

void from_json(const nlohmann::json& j, Rational& value) {
    value = Rational::parse(j.get<std::string>());
}

nlohmann::json bigint_to_json(const BigInt& value) {
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<long>());
}

void to_json(nlohmann::json& j, const EigenLevel& level) {
    j = nlohmann::json{{"eigenvalue", level.eigenvalue},
                       {"multiplicity", bigint_to_json(level.multiplicity)}};
}

void from_json(const nlohmann::json& j, EigenLevel& level) {
    j.at("eigenvalue").get_to(level.eigenvalue);
    level.multiplicity = bigint_from_json(j.at("multiplicity"));
}

void to_json(nlohmann::json& j, const HypersurfaceModel& model) {
    struct Visitor {
        nlohmann::json& j;
        void operator()(const BiharmonicTorus& t) const {
            j = {{"kind", "biharmonic_torus"}, {"p", t.p}, {"q", t.q}};
        }
        void operator()(const BiharmonicSmallSphere& s) const {
            j = {{"kind", "biharmonic_small_sphere"}, {"m", s.m}};
        }
        void operator()(const MinimalEquator& e) const {
            j = {{"kind", "minimal_equator"}, {"m", e.m}};
        }
        void operator()(const MinimalCliffordTorus& t) const {
            j = {{"kind", "minimal_clifford_torus"}, {"p", t.p}, {"q", t.q}};
        }
        void operator()(const SpaceFormCMC& d) const {
            j = {{"kind", "space_form_cmc"},
                 {"c", d.c},
                 {"m", d.m},
                 {"mean_curvature", d.mean_curvature},
                 {"norm_a_squared", d.norm_a_squared}};
        }
    };
    std::visit(Visitor{j}, model);
}

HypersurfaceModel model_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "biharmonic_torus")
        return BiharmonicTorus(j.at("p").get<int>(), j.at("q").get<int>());
    if (kind == "biharmonic_small_sphere")
        return BiharmonicSmallSphere(j.at("m").get<int>());
    if (kind == "minimal_equator") return MinimalEquator(j.at("m").get<int>());
    if (kind == "minimal_clifford_torus")
        return MinimalCliffordTorus(j.at("p").get<int>(), j.at("q").get<int>());
    if (kind == "space_form_cmc")
        return SpaceFormCMC(j.at("c").get<Rational>(), j.at("m").get<int>(),
                            j.at("mean_curvature").get<Rational>(),
                            j.at("norm_a_squared").get<Rational>());
    throw std::invalid_argument("model_from_json: unknown kind '" + kind + "'");
}

void to_json(nlohmann::json& j, const StabilityForm& form) {
    j = nlohmann::json{{"a2", form.a2},
                       {"a1", form.a1},
                       {"a0", form.a0},
                       {"hypothesis_note", form.hypothesis_note}};
}

void to_json(nlohmann::json& j, const StabilityCertificate& cert) {
    nlohmann::json terms = nlohmann::json::array();
    for (const CertificateTerm& term : cert.term_breakdown)
        terms.push_back({{"term", term.term}, {"sign", to_string(term.sign)}});
    j = nlohmann::json{{"verdict", to_string(cert.verdict)}, {"term_breakdown", terms}};
}

void to_json(nlohmann::json& j, const IndexReport& report) {
    nlohmann::json contributing = nlohmann::json::array();
    for (const auto& [level, value] : report.contributing)
        contributing.push_back({{"eigenvalue", level.eigenvalue},
                                {"multiplicity", bigint_to_json(level.multiplicity)},
                                {"form_value", value}});
    j = nlohmann::json{{"index", bigint_to_json(report.index)},
                       {"nullity_levels", report.nullity_levels},
                       {"contributing", contributing},
                       {"cutoff", report.cutoff_used},
                       {"agreement", report.agreement}};
    if (report.closed_form_index)
        j["closed_form_index"] = bigint_to_json(*report.closed_form_index);
    else
        j["closed_form_index"] = nullptr;
}

void from_json(const nlohmann::json& j, IndexReport& report) {
    report = IndexReport{};
    report.index = bigint_from_json(j.at("index"));
    j.at("nullity_levels").get_to(report.nullity_levels);
    for (const nlohmann::json& entry : j.at("contributing")) {
        EigenLevel level;
        level.eigenvalue = entry.at("eigenvalue").get<Rational>();
        level.multiplicity = bigint_from_json(entry.at("multiplicity"));
        report.contributing.emplace_back(std::move(level),
                                         entry.at("form_value").get<Rational>());
    }
    j.at("cutoff").get_to(report.cutoff_used);
    if (!j.at("closed_form_index").is_null())
        report.closed_form_index = bigint_from_json(j.at("closed_form_index"));
    j.at("agreement").get_to(report.agreement);
}

void to_json(nlohmann::json& j, const QuadratureCheck& check) {
    j = nlohmann::json{{"analytic", check.analytic},
                       {"estimate", check.estimate},
                       {"std_error", check.std_error},
                       {"samples", check.samples},
                       {"converged", check.converged}};
}

void to_json(nlohmann::json& j, const VariationResult& result) {
    j = nlohmann::json{{"second_derivative_estimate", result.second_derivative_estimate},
                       {"analytic_q", result.analytic_q},
                       {"relative_error", result.relative_error},
                       {"first_difference", result.first_difference},
                       {"step_t", result.step_t},
                       {"nodes", result.nodes},
                       {"converged", result.converged}};
}

void to_json(nlohmann::json& j, const TableRow& row) {
    j = nlohmann::json{{"ambient_dim", row.ambient_dim},
                       {"family", row.model},
                       {"family_label", family_label(row.model)},
                       {"index", bigint_to_json(row.index)}};
}

TableRow table_row_from_json(const nlohmann::json& j) {
    return TableRow{j.at("ambient_dim").get<int>(), model_from_json(j.at("family")),
                    bigint_from_json(j.at("index"))};
}

}  // namespace bistab
