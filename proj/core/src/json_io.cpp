#include "ara/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace ara {

namespace {

const Json& require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw Error(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

std::vector<Variable> variables_from_json(const Json& names, const char* what) {
    if (!names.is_array()) throw Error(std::string(what) + ": expected an array of variables");
    std::vector<Variable> vars;
    for (const auto& v : names) vars.push_back(Variable::parse(v.get<std::string>()));
    return vars;
}

} // namespace

Json complex_to_json(const SimplicialComplex& complex) {
    Json vertices = Json::array();
    for (Variable v : complex.vertices()) vertices.push_back(v.name());
    Json facets = Json::array();
    for (const auto& f : complex.facets()) {
        Json facet = Json::array();
        for (Variable v : f) facet.push_back(v.name());
        facets.push_back(std::move(facet));
    }
    return Json{{"vertices", std::move(vertices)}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j) {
    std::vector<Variable> vertices =
        variables_from_json(require(j, "vertices", "complex"), "complex");
    std::vector<std::vector<Variable>> facets;
    const Json& fj = require(j, "facets", "complex");
    if (!fj.is_array()) throw Error("complex: 'facets' must be an array");
    for (const auto& f : fj) facets.push_back(variables_from_json(f, "complex facet"));
    return SimplicialComplex::create(std::move(vertices), std::move(facets));
}

Json ideal_to_json(const MonomialIdeal& ideal, const std::vector<Variable>& variables) {
    Json vars = Json::array();
    for (Variable v : variables) vars.push_back(v.name());
    Json gens = Json::array();
    for (const Monomial& g : ideal.generators()) gens.push_back(g.str());
    return Json{{"variables", std::move(vars)}, {"generators", std::move(gens)}};
}

std::pair<MonomialIdeal, std::vector<Variable>> ideal_from_json(const Json& j) {
    std::vector<Variable> vars = variables_from_json(require(j, "variables", "ideal"), "ideal");
    std::vector<Monomial> gens;
    const Json& gj = require(j, "generators", "ideal");
    if (!gj.is_array()) throw Error("ideal: 'generators' must be an array");
    for (const auto& g : gj) gens.push_back(Monomial::parse(g.get<std::string>()));
    return {MonomialIdeal(std::move(gens)), std::move(vars)};
}

Json witness_to_json(const WitnessSet& witness) {
    Json elements = Json::array();
    for (const Polynomial& e : witness.elements) elements.push_back(e.str());
    return Json{{"target", ideal_to_json(witness.target, witness.variables)},
                {"elements", std::move(elements)},
                {"provenance", provenance_str(witness.provenance)}};
}

Json witness_to_json(const WitnessSet& witness, const Json& trace) {
    Json j = witness_to_json(witness);
    j["trace"] = trace;
    return j;
}

WitnessSet witness_from_json(const Json& j) {
    WitnessSet w;
    auto [ideal, vars] = ideal_from_json(require(j, "target", "witness"));
    w.target = std::move(ideal);
    w.variables = std::move(vars);
    const Json& ej = require(j, "elements", "witness");
    if (!ej.is_array()) throw Error("witness: 'elements' must be an array");
    for (const auto& e : ej) w.elements.push_back(Polynomial::parse(e.get<std::string>()));
    if (j.contains("provenance")) w.provenance = provenance_parse(j.at("provenance"));
    return w;
}

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json cone_trace_to_json(const ConeLiftTrace& trace) {
    Json base = Json::array();
    for (const Polynomial& q : trace.base) base.push_back(q.str());
    Json pf = Json::array();
    for (Variable v : trace.pf_variables) pf.push_back(v.name());
    return Json{{"base", std::move(base)},
                {"pf_variables", std::move(pf)},
                {"apex", trace.apex.name()},
                {"term_assignment", "largest_index"},
                {"A", matrix_to_json(trace.A)},
                {"Abar", matrix_to_json(trace.Abar)},
                {"Aprime", matrix_to_json(trace.Aprime)},
                {"D", trace.D.str()}};
}

Json report_to_json(const VerificationReport& report, bool include_timing) {
    Json inclusions = Json::array();
    for (const ElementInclusion& e : report.inclusions) {
        Json entry{{"index", e.index}, {"ok", e.ok}};
        if (!e.ok) entry["offending_term"] = e.offending_term;
        inclusions.push_back(std::move(entry));
    }
    Json radicals = Json::array();
    for (const RadicalCertificate& r : report.radicals) {
        Json entry{{"generator", r.generator.str()},
                   {"member", r.member},
                   {"slack_basis_size", r.slack_basis_size}};
        if (r.power) entry["power"] = *r.power;
        if (r.cap_exceeded) entry["cap_exceeded"] = true;
        radicals.push_back(std::move(entry));
    }
    Json j{{"verdict", verdict_str(report.verdict)},
           {"field", report.field.str()},
           {"order", report.order.name()},
           {"inclusion_in_target", Json{{"ok", report.inclusion_ok}, {"elements", inclusions}}},
           {"radical_membership", Json{{"ok", report.radical_ok}, {"generators", radicals}}}};
    if (report.ara) {
        j["ara"] = Json{{"lower", report.ara->lower},   {"upper", report.ara->upper},
                        {"exact", report.ara->exact},   {"height", report.ara->ideal_height},
                        {"unmixed", report.ara->unmixed}, {"sci", report.ara->sci}};
    }
    if (report.characteristic_dependent)
        j["characteristic_dependent"] = *report.characteristic_dependent;
    if (include_timing) j["timing_ms"] = report.elapsed_ms;
    return j;
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << dump_json(j);
}

} // namespace ara
