#include "ara/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>

#include "ara/simplicial.hpp"

namespace ara {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::certified: return "certified";
        case Verdict::refuted: return "refuted";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string VerificationReport::failure_summary() const {
    for (const ElementInclusion& e : inclusions)
        if (!e.ok)
            return "element #" + std::to_string(e.index) + " has term " + e.offending_term +
                   " outside the target ideal (direction J in I)";
    for (const RadicalCertificate& r : radicals) {
        if (!r.member)
            return "generator " + r.generator.str() +
                   " is not in the radical of the witness ideal (direction I in sqrt J)";
        if (r.cap_exceeded)
            return "generator " + r.generator.str() + ": certificate not found below cap";
    }
    if (ara && !ara->exact)
        return "ara in [" + std::to_string(ara->lower) + ", " + std::to_string(ara->upper) +
               "] not pinned";
    return "";
}

namespace {

unsigned worker_count(const VerifyOptions& options) {
    if (options.workers > 0) return options.workers;
    if (const char* env = std::getenv("ARA_WORKERS")) {
        char* end = nullptr;
        unsigned long n = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && n >= 1 && n <= 256) return static_cast<unsigned>(n);
    }
    return 1;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned used = std::min<std::size_t>(workers, count);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(used);
    for (unsigned w = 0; w < used; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += used) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Canonical lift of f into F_p: coefficients reduced to 0..p-1, vanishing
// terms dropped.
Polynomial reduce_mod(const Polynomial& f, std::uint64_t p) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        mpz_class num = c.get_num() % static_cast<unsigned long>(p);
        if (num < 0) num += static_cast<unsigned long>(p);
        mpz_class den = c.get_den() % static_cast<unsigned long>(p);
        if (den == 0)
            throw Error("witness coefficient denominator vanishes in characteristic " +
                        std::to_string(p));
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t()) == 0)
            throw Error("no inverse modulo " + std::to_string(p));
        mpz_class lifted = (num * inv) % static_cast<unsigned long>(p);
        if (lifted != 0) out.add_term(m, Rational(lifted));
    }
    return out;
}

VerificationReport run_verify(const WitnessSet& witness, const VerifyOptions& options,
                              bool allow_field_comparison) {
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.field = options.field;
    report.order = options.order;

    const MonomialIdeal& target = witness.target;
    if (!target.all_squarefree())
        throw Error("verification requires a squarefree target ideal");

    std::vector<Polynomial> elements = witness.elements;
    if (!options.field.is_rationals())
        for (Polynomial& e : elements) e = reduce_mod(e, options.field.characteristic());

    // Direction 1: every term of every witness element lies in the target.
    report.inclusion_ok = true;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        ElementInclusion inc;
        inc.index = i;
        const Monomial* bad = target.offending_term(elements[i]);
        inc.ok = bad == nullptr;
        if (bad) {
            inc.offending_term = bad->str();
            report.inclusion_ok = false;
        }
        report.inclusions.push_back(std::move(inc));
    }

    // Direction 2: every minimal generator of the target lies in sqrt(J).
    GroebnerBasis gb = buchberger(elements, options.order, options.field);
    const auto& gens = target.generators();
    report.radicals.resize(gens.size());
    parallel_for(gens.size(), worker_count(options), [&](std::size_t i) {
        RadicalResult r =
            radical_member(Polynomial(gens[i]), gb, options.power_cap);
        report.radicals[i] = RadicalCertificate{gens[i], r.member, r.power, r.cap_exceeded,
                                                r.slack_basis_size};
    });
    report.radical_ok =
        std::all_of(report.radicals.begin(), report.radicals.end(),
                    [](const RadicalCertificate& r) { return r.member; });
    bool capped = std::any_of(report.radicals.begin(), report.radicals.end(),
                              [](const RadicalCertificate& r) { return r.cap_exceeded; });

    if (!report.inclusion_ok || !report.radical_ok)
        report.verdict = Verdict::refuted;
    else if (capped)
        report.verdict = Verdict::inconclusive;
    else
        report.verdict = Verdict::certified;

    // Krull bounds, informational here; certify_ara couples them to the
    // verdict.  Targets outside the Stanley-Reisner correspondence (degree-1
    // generators) simply carry no bounds.
    try {
        SimplicialComplex complex = complex_from_ideal(target, witness.variables);
        AraCertificate ara;
        ara.lower = complex.vertices().size() - complex.min_facet_size();
        ara.upper = witness.elements.size();
        ara.ideal_height = height(complex);
        ara.unmixed = is_pure(complex);
        ara.exact = report.verdict == Verdict::certified && ara.lower == ara.upper;
        ara.sci = ara.exact && ara.upper == ara.ideal_height && ara.unmixed;
        report.ara = ara;
    } catch (const Error&) {
    }

    if (!options.field.is_rationals() && options.compare_with_rationals &&
        allow_field_comparison) {
        VerifyOptions q_options = options;
        q_options.field = FieldSpec::rationals();
        VerificationReport q_report = run_verify(witness, q_options, false);
        report.characteristic_dependent = q_report.verdict != report.verdict;
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

} // namespace

VerificationReport verify_up_to_radical(const WitnessSet& witness, const VerifyOptions& options) {
    return run_verify(witness, options, true);
}

VerificationReport certify_ara(const WitnessSet& witness, const VerifyOptions& options) {
    VerificationReport report = verify_up_to_radical(witness, options);
    if (!report.ara)
        throw Error("ara certification needs a Stanley-Reisner target "
                    "(squarefree, no degree-one generators)");
    if (report.verdict == Verdict::certified && !report.ara->exact)
        report.verdict = Verdict::inconclusive; // ara only bracketed, no verdict
    return report;
}

int exit_code(const VerificationReport& report) {
    switch (report.verdict) {
        case Verdict::certified: return 0;
        case Verdict::refuted: return 1;
        case Verdict::inconclusive: return 2;
    }
    return 2;
}

} // namespace ara
