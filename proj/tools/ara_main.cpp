// Command-line surface: construct arithmetical-rank witnesses for
// Stanley-Reisner ideals and verify the claimed radical equalities.
//
// Exit codes: 0 certified / success, 1 refuted or reproduction mismatch,
// 2 inconclusive, 3 input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ara/json_io.hpp"

namespace {

using ara::Json;

struct OutputOptions {
    bool as_json = false;
    std::string out_path; // empty: stdout
    bool timings = false;
};

void emit(const OutputOptions& opts, const Json& machine, const std::string& text) {
    if (!opts.out_path.empty()) ara::save_json_file(opts.out_path, machine);
    if (opts.as_json)
        std::cout << ara::dump_json(machine);
    else
        std::cout << text;
}

std::vector<ara::Variable> parse_variable_list(const std::string& csv) {
    std::vector<ara::Variable> vars;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) vars.push_back(ara::Variable::parse(item));
    }
    if (vars.empty()) throw ara::Error("empty variable list '" + csv + "'");
    return vars;
}

// ---------------------------------------------------------------------------
// complex info

int cmd_complex_info(const std::string& path, const OutputOptions& opts) {
    ara::SimplicialComplex complex = ara::complex_from_json(ara::load_json_file(path));
    ara::MonomialIdeal ideal = ara::stanley_reisner_ideal(complex);
    auto primes = ara::minimal_primes(complex);

    Json j = ara::complex_to_json(complex);
    j["height"] = ara::height(complex);
    j["dimension"] = ara::dimension(complex);
    j["pure"] = ara::is_pure(complex);
    Json prime_list = Json::array();
    for (const auto& p : primes) {
        Json vars = Json::array();
        for (ara::Variable v : p.variables) vars.push_back(v.name());
        prime_list.push_back(std::move(vars));
    }
    j["minimal_primes"] = std::move(prime_list);
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g.str());
    j["stanley_reisner_generators"] = std::move(gens);
    bool cm_applicable = ara::is_pure(complex) && ara::dimension(complex) == 1;
    if (cm_applicable) j["cm_one_dimensional"] = ara::is_cm_one_dimensional(complex);

    std::ostringstream text;
    text << "vertices:  " << complex.vertices().size() << "\n";
    text << "facets:    " << complex.facets().size() << "\n";
    text << "height:    " << ara::height(complex) << "\n";
    text << "dimension: " << ara::dimension(complex) << "\n";
    text << "pure:      " << (ara::is_pure(complex) ? "yes" : "no") << "\n";
    if (cm_applicable)
        text << "1-dim CM:  " << (ara::is_cm_one_dimensional(complex) ? "yes" : "no") << "\n";
    text << "minimal primes (" << primes.size() << "):\n";
    for (const auto& p : primes) {
        text << "  (";
        for (std::size_t i = 0; i < p.variables.size(); ++i)
            text << (i ? ", " : "") << p.variables[i].name();
        text << ")\n";
    }
    if (ideal.is_zero()) {
        text << "Stanley-Reisner ideal: zero ideal (the complex is a simplex)\n";
    } else {
        text << "Stanley-Reisner generators (" << ideal.generators().size() << "):\n";
        for (const auto& g : ideal.generators()) text << "  " << g.str() << "\n";
    }
    emit(opts, j, text.str());
    return 0;
}

// ---------------------------------------------------------------------------
// witness subcommands

std::string witness_text(const ara::WitnessSet& w) {
    std::ostringstream text;
    text << "target ideal (" << w.target.generators().size() << " generators):\n";
    for (const auto& g : w.target.generators()) text << "  " << g.str() << "\n";
    text << "witness (" << w.elements.size() << " elements, " << provenance_str(w.provenance)
         << "):\n";
    for (const auto& e : w.elements) text << "  " << e.str() << "\n";
    return text.str();
}

int emit_witness(const ara::WitnessSet& w, const Json* trace, bool want_trace,
                 const OutputOptions& opts) {
    Json j = (trace && want_trace) ? ara::witness_to_json(w, *trace) : ara::witness_to_json(w);
    emit(opts, j, witness_text(w));
    return 0;
}

int cmd_witness_cycle5(bool want_trace, const OutputOptions& opts) {
    return emit_witness(ara::cycle5_witness(), nullptr, want_trace, opts);
}

int cmd_witness_cone(const std::string& complex_path, const std::string& facet_csv,
                     const std::string& base_path, const std::string& apex_name, bool trust_base,
                     bool want_trace, const OutputOptions& opts) {
    ara::SimplicialComplex complex = ara::complex_from_json(ara::load_json_file(complex_path));
    ara::WitnessSet base = ara::witness_from_json(ara::load_json_file(base_path));
    std::vector<ara::Variable> facet = parse_variable_list(facet_csv);
    ara::Variable apex = ara::Variable::parse(apex_name);
    auto [witness, trace] = ara::cone_lift(complex, facet, base, apex,
                                           trust_base ? ara::BaseCheck::trust
                                                      : ara::BaseCheck::verify);
    Json trace_json = ara::cone_trace_to_json(trace);
    return emit_witness(witness, &trace_json, want_trace, opts);
}

int cmd_witness_family(unsigned n, bool want_trace, const OutputOptions& opts) {
    ara::WitnessSet w = ara::family_witness(n);
    Json trace = Json{{"B", ara::matrix_to_json(ara::family_matrix_B(n))}};
    return emit_witness(w, &trace, want_trace, opts);
}

int cmd_witness_example4(bool want_trace, const OutputOptions& opts) {
    auto [w, c] = ara::example4_witness();
    Json trace = Json{{"C", ara::matrix_to_json(c)}, {"detC", ara::determinant(c).str()}};
    return emit_witness(w, &trace, want_trace, opts);
}

// ---------------------------------------------------------------------------
// verify

std::string report_text(const ara::VerificationReport& report) {
    std::ostringstream text;
    text << "verdict: " << ara::verdict_str(report.verdict) << "  (field " << report.field.str()
         << ", order " << report.order.name() << ")\n";
    text << "  J in I:      " << (report.inclusion_ok ? "ok" : "FAILED") << " ("
         << report.inclusions.size() << " elements)\n";
    text << "  I in sqrtJ:  " << (report.radical_ok ? "ok" : "FAILED") << " ("
         << report.radicals.size() << " generators)\n";
    if (report.ara) {
        text << "  ara bounds:  [" << report.ara->lower << ", " << report.ara->upper << "]";
        if (report.ara->exact) text << "  ara = " << report.ara->upper;
        if (report.ara->sci) text << "  (set-theoretic complete intersection)";
        text << "\n";
    }
    if (report.characteristic_dependent)
        text << "  characteristic dependent: " << (*report.characteristic_dependent ? "YES" : "no")
             << "\n";
    std::string failure = report.failure_summary();
    if (!failure.empty()) text << "  " << failure << "\n";
    return text.str();
}

int cmd_verify(const std::string& witness_path, const std::string& ideal_path,
               const ara::VerifyOptions& vopts, bool certify, const OutputOptions& opts) {
    ara::WitnessSet witness = ara::witness_from_json(ara::load_json_file(witness_path));
    if (!ideal_path.empty()) {
        auto [ideal, vars] = ara::ideal_from_json(ara::load_json_file(ideal_path));
        witness.target = std::move(ideal);
        witness.variables = std::move(vars);
    }
    ara::VerificationReport report =
        certify ? ara::certify_ara(witness, vopts) : ara::verify_up_to_radical(witness, vopts);
    emit(opts, ara::report_to_json(report, opts.timings), report_text(report));
    return ara::exit_code(report);
}

// ---------------------------------------------------------------------------
// reproduce

struct ReproduceRow {
    std::string name;
    ara::WitnessSet witness;
    std::size_t expected_ara;
    bool expected_sci;
};

std::vector<ReproduceRow> reproduce_rows() {
    std::vector<ReproduceRow> rows;

    // Cone lift over the C5 cycle witness.
    {
        auto [w, trace] = ara::cone_lift(ara::cycle_complex(5),
                                         {ara::Variable{1}, ara::Variable{2}},
                                         ara::cycle5_witness(), ara::Variable{0},
                                         ara::BaseCheck::trust);
        rows.push_back({"cone_lift(C5)", std::move(w), 4, false});
    }
    rows.push_back({"family I6", ara::family_witness(6), 4, true});
    rows.push_back({"family I7", ara::family_witness(7), 5, false});

    // I7 again, through the cone over a relabeled 6-cycle.
    {
        ara::SimplicialComplex hexagon = ara::SimplicialComplex::create(
            {ara::Variable{1}, ara::Variable{2}, ara::Variable{3}, ara::Variable{4},
             ara::Variable{6}, ara::Variable{7}},
            {{ara::Variable{1}, ara::Variable{2}},
             {ara::Variable{2}, ara::Variable{3}},
             {ara::Variable{3}, ara::Variable{4}},
             {ara::Variable{4}, ara::Variable{6}},
             {ara::Variable{6}, ara::Variable{7}},
             {ara::Variable{7}, ara::Variable{1}}});
        ara::WitnessSet base = ara::family_witness(6);
        const std::vector<std::pair<std::uint32_t, std::uint32_t>> rename{{5, 6}, {6, 7}};
        std::vector<ara::Monomial> gens;
        for (const auto& g : base.target.generators()) gens.push_back(g.rename(rename));
        base.target = ara::MonomialIdeal(std::move(gens));
        base.variables = hexagon.vertices();
        for (auto& e : base.elements) e = e.rename(rename);
        auto [w, trace] =
            ara::cone_lift(hexagon, {ara::Variable{4}, ara::Variable{6}}, base,
                           ara::Variable{5}, ara::BaseCheck::trust);
        if (w.target != ara::family_ideal(7))
            throw ara::Error("cone of the relabeled 6-cycle did not reproduce I7");
        rows.push_back({"cone_lift(I6) = I7", std::move(w), 5, false});
    }

    {
        auto [w, c] = ara::example4_witness();
        rows.push_back({"matrix-C example", std::move(w), 4, true});
    }
    rows.push_back({"family I8", ara::family_witness(8), 6, false});
    rows.push_back({"family I9", ara::family_witness(9), 7, false});

    // Schmitt-Vogel on the sub-ideal (x3*x5, x3*x6, x4*x6) of the matrix-C
    // example; the divisor pair check is exactly the x3*x6 | x3*x5*x4*x6 step.
    {
        ara::SVPartition partition = ara::SVPartition::of_monomials(
            {{ara::Monomial::parse("x3*x6")},
             {ara::Monomial::parse("x3*x5"), ara::Monomial::parse("x4*x6")}});
        rows.push_back({"schmitt_vogel sub-ideal", ara::schmitt_vogel(partition), 2, true});
    }
    return rows;
}

int cmd_reproduce(const ara::VerifyOptions& vopts, const OutputOptions& opts) {
    std::vector<ReproduceRow> rows = reproduce_rows();
    Json table = Json::array();
    std::ostringstream text;
    text << "ideal                    gens  witness  ara[lo,hi]  sci  verdict      time\n";
    std::string first_failure;

    for (const ReproduceRow& row : rows) {
        ara::VerificationReport report = ara::certify_ara(row.witness, vopts);
        bool ok = report.verdict == ara::Verdict::certified && report.ara &&
                  report.ara->exact && report.ara->upper == row.expected_ara &&
                  report.ara->sci == row.expected_sci;
        if (!ok && first_failure.empty()) first_failure = row.name;

        Json entry{{"name", row.name},
                   {"generators", row.witness.target.generators().size()},
                   {"witness_size", row.witness.elements.size()},
                   {"provenance", provenance_str(row.witness.provenance)},
                   {"ara_lower", report.ara ? report.ara->lower : 0},
                   {"ara_upper", report.ara ? report.ara->upper : 0},
                   {"sci", report.ara && report.ara->sci},
                   {"verdict", ara::verdict_str(report.verdict)},
                   {"ok", ok}};
        if (opts.timings) entry["timing_ms"] = report.elapsed_ms;
        table.push_back(std::move(entry));

        char line[160];
        std::snprintf(line, sizeof(line), "%-24s %4zu  %7zu  [%zu, %zu]      %-4s %-12s %.0fms\n",
                      row.name.c_str(), row.witness.target.generators().size(),
                      row.witness.elements.size(), report.ara ? report.ara->lower : 0,
                      report.ara ? report.ara->upper : 0,
                      (report.ara && report.ara->sci) ? "yes" : "no",
                      ara::verdict_str(report.verdict).c_str(), report.elapsed_ms);
        text << line;
    }

    emit(opts, table, text.str());
    if (!first_failure.empty()) {
        std::cerr << "reproduction mismatch in: " << first_failure << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetical-rank witness constructions for Stanley-Reisner ideals, "
                 "with exact Groebner verification"};
    app.require_subcommand(1);

    OutputOptions out_opts;
    std::string field_name = "q";
    std::string order_name = "degrevlex";
    std::uint64_t cap = 0;
    bool want_trace = false;

    auto add_common = [&](CLI::App* cmd, bool with_field) {
        cmd->add_flag("--json", out_opts.as_json, "machine-readable output on stdout");
        cmd->add_option("--out", out_opts.out_path, "write JSON output to this file");
        if (with_field) {
            cmd->add_option("--field", field_name, "coefficient field: q or fp:<p>");
            cmd->add_option("--order", order_name, "term order: degrevlex or lex");
            cmd->add_option("--cap", cap, "request explicit power certificates up to this cap");
            cmd->add_flag("--timings", out_opts.timings, "include timings in JSON output");
        }
    };

    // complex info
    CLI::App* complex_cmd = app.add_subcommand("complex", "inspect a simplicial complex");
    complex_cmd->require_subcommand(1);
    CLI::App* info_cmd = complex_cmd->add_subcommand("info", "invariants of a complex file");
    std::string complex_path;
    info_cmd->add_option("path", complex_path, "complex JSON file")->required();
    add_common(info_cmd, false);

    // witness
    CLI::App* witness_cmd = app.add_subcommand("witness", "construct a witness");
    witness_cmd->require_subcommand(1);

    CLI::App* cycle5_cmd = witness_cmd->add_subcommand("cycle5", "the classic C5 cycle witness");
    add_common(cycle5_cmd, false);

    CLI::App* cone_cmd = witness_cmd->add_subcommand("cone", "lift a witness over a cone");
    std::string cone_complex, cone_facet, cone_base, cone_apex = "x0";
    bool trust_base = false;
    cone_cmd->add_option("--complex", cone_complex, "complex JSON file")->required();
    cone_cmd->add_option("--facet", cone_facet, "facet, e.g. x1,x2")->required();
    cone_cmd->add_option("--base", cone_base, "base witness JSON file")->required();
    cone_cmd->add_option("--apex", cone_apex, "apex variable (default x0)");
    cone_cmd->add_flag("--trust-base", trust_base, "skip Groebner verification of the base");
    cone_cmd->add_flag("--trace", want_trace, "include the matrices A, Abar, Aprime");
    add_common(cone_cmd, false);

    CLI::App* family_cmd = witness_cmd->add_subcommand("family", "the I_n family witness");
    unsigned family_n = 0;
    family_cmd->add_option("--n", family_n, "number of variables, n >= 6")->required();
    family_cmd->add_flag("--trace", want_trace, "include the matrix B");
    add_common(family_cmd, false);

    CLI::App* example4_cmd =
        witness_cmd->add_subcommand("example4", "the six-variable matrix-C witness");
    example4_cmd->add_flag("--trace", want_trace, "include the matrix C and det C");
    add_common(example4_cmd, false);

    // verify
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify sqrt(J) = I for a witness");
    std::string verify_witness, verify_ideal;
    bool certify = false;
    verify_cmd->add_option("--witness", verify_witness, "witness JSON file")->required();
    verify_cmd->add_option("--ideal", verify_ideal, "target ideal JSON file (overrides the witness target)");
    verify_cmd->add_flag("--certify", certify, "couple the verdict to exact ara bounds");
    add_common(verify_cmd, true);

    // reproduce
    CLI::App* reproduce_cmd =
        app.add_subcommand("reproduce", "run all built-in constructions end to end");
    add_common(reproduce_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        ara::VerifyOptions vopts;
        vopts.field = ara::FieldSpec::parse(field_name);
        vopts.order = ara::TermOrder::by_name(order_name);
        if (cap > 0) vopts.power_cap = cap;

        if (info_cmd->parsed()) return cmd_complex_info(complex_path, out_opts);
        if (cycle5_cmd->parsed()) return cmd_witness_cycle5(want_trace, out_opts);
        if (cone_cmd->parsed())
            return cmd_witness_cone(cone_complex, cone_facet, cone_base, cone_apex, trust_base,
                                    want_trace, out_opts);
        if (family_cmd->parsed()) return cmd_witness_family(family_n, want_trace, out_opts);
        if (example4_cmd->parsed()) return cmd_witness_example4(want_trace, out_opts);
        if (verify_cmd->parsed())
            return cmd_verify(verify_witness, verify_ideal, vopts, certify, out_opts);
        if (reproduce_cmd->parsed()) return cmd_reproduce(vopts, out_opts);
    } catch (const ara::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
