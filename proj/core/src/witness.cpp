#include "ara/witness.hpp"

#include <algorithm>
#include <random>

#include "ara/verify.hpp"

namespace ara {

std::string provenance_str(Provenance p) {
    switch (p) {
        case Provenance::schmitt_vogel: return "schmitt_vogel";
        case Provenance::cone_lift: return "cone_lift";
        case Provenance::family_In: return "family_In";
        case Provenance::example4: return "example4";
        case Provenance::user: return "user";
    }
    return "?";
}

Provenance provenance_parse(const std::string& text) {
    for (Provenance p : {Provenance::schmitt_vogel, Provenance::cone_lift, Provenance::family_In,
                         Provenance::example4, Provenance::user})
        if (provenance_str(p) == text) return p;
    throw Error("unknown provenance '" + text + "'");
}

// --------------------------------------------------------------------------
// Schmitt-Vogel

SVPartition SVPartition::of_monomials(const std::vector<std::vector<Monomial>>& levels) {
    SVPartition p;
    for (const auto& level : levels) {
        std::vector<Polynomial> polys;
        polys.reserve(level.size());
        for (const Monomial& m : level) polys.emplace_back(m);
        p.levels.push_back(std::move(polys));
    }
    return p;
}

std::uint64_t SVPartition::exponent(std::size_t level, std::size_t index) const {
    if (level < exponents.size() && index < exponents[level].size())
        return exponents[level][index];
    return 1;
}

namespace {

// Single-term elements are the only usable divisors in condition (iii):
// membership in the principal ideal they generate is a per-term check.
std::optional<Monomial> as_single_term(const Polynomial& p) {
    if (p.term_count() != 1) return std::nullopt;
    return p.terms().begin()->first;
}

SVValidation sv_fail(const std::string& message) {
    return SVValidation{false, message};
}

} // namespace

SVValidation validate_sv(const SVPartition& partition) {
    const auto& levels = partition.levels;
    if (levels.empty()) return sv_fail("condition (ii): no levels given");
    if (levels[0].size() != 1)
        return sv_fail("condition (ii): P_0 must have exactly one element, got " +
                       std::to_string(levels[0].size()));
    for (std::size_t l = 0; l < levels.size(); ++l) {
        if (l < partition.exponents.size() &&
            !partition.exponents[l].empty() &&
            partition.exponents[l].size() != levels[l].size())
            return sv_fail("exponent list of level " + std::to_string(l) +
                           " does not match its size");
        for (std::size_t i = 0; i < levels[l].size(); ++i) {
            if (levels[l][i].is_zero()) return sv_fail("zero element in level " + std::to_string(l));
            if (partition.exponent(l, i) < 1)
                return sv_fail("exponent e(p) must be >= 1 in level " + std::to_string(l));
        }
    }

    // Condition (iii): for p != p'' in P_l there must be a single-term p' in
    // some lower level with p*p'' in (p').
    for (std::size_t l = 1; l < levels.size(); ++l) {
        for (std::size_t i = 0; i < levels[l].size(); ++i) {
            for (std::size_t j = i + 1; j < levels[l].size(); ++j) {
                if (levels[l][i] == levels[l][j]) continue;
                Polynomial product = levels[l][i] * levels[l][j];
                bool divisible = false;
                for (std::size_t ll = 0; ll < l && !divisible; ++ll) {
                    for (const Polynomial& cand : levels[ll]) {
                        auto m = as_single_term(cand);
                        if (m && MonomialIdeal({*m}).contains(product)) {
                            divisible = true;
                            break;
                        }
                    }
                }
                if (!divisible)
                    return sv_fail("condition (iii): pair (" + levels[l][i].str() + ", " +
                                   levels[l][j].str() + ") in level " + std::to_string(l) +
                                   " has no lower-level divisor of its product");
            }
        }
    }
    return SVValidation{};
}

SVValidation validate_sv(const SVPartition& partition, const std::vector<Polynomial>& expected) {
    SVValidation v = validate_sv(partition);
    if (!v.ok) return v;
    for (const Polynomial& p : expected) {
        bool found = false;
        for (const auto& level : partition.levels)
            if (std::find(level.begin(), level.end(), p) != level.end()) {
                found = true;
                break;
            }
        if (!found) return sv_fail("condition (i): element " + p.str() + " is in no level");
    }
    return v;
}

WitnessSet schmitt_vogel(const SVPartition& partition) {
    SVValidation v = validate_sv(partition);
    if (!v.ok) throw Error("invalid Schmitt-Vogel partition: " + v.message);

    std::vector<Monomial> gens;
    std::vector<Polynomial> sums;
    for (std::size_t l = 0; l < partition.levels.size(); ++l) {
        Polynomial q;
        for (std::size_t i = 0; i < partition.levels[l].size(); ++i) {
            const Polynomial& p = partition.levels[l][i];
            auto m = as_single_term(p);
            if (!m || p.terms().begin()->second != 1)
                throw Error("Schmitt-Vogel witness needs monomial members, got " + p.str());
            gens.push_back(*m);
            q += p.pow(partition.exponent(l, i));
        }
        sums.push_back(std::move(q));
    }

    WitnessSet w;
    w.target = MonomialIdeal(gens);
    std::vector<Variable> vars;
    for (const Monomial& g : gens)
        for (Variable v : g.support()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    w.variables = std::move(vars);
    w.elements = std::move(sums);
    w.provenance = Provenance::schmitt_vogel;
    for (const Polynomial& q : w.elements)
        if (!w.target.contains(q)) throw Error("internal: Schmitt-Vogel sum left the ideal");
    return w;
}

std::optional<SVPartition> find_sv_partition(const MonomialIdeal& ideal, std::size_t levels,
                                             std::uint64_t seed, unsigned restarts) {
    const auto& gens = ideal.generators();
    if (levels == 0 || gens.size() < levels) return std::nullopt;
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(gens.size());

    for (unsigned attempt = 0; attempt < restarts; ++attempt) {
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<std::vector<Monomial>> layers(levels);
        bool failed = false;
        for (std::size_t idx : perm) {
            const Monomial& g = gens[idx];
            bool placed = false;
            for (std::size_t l = 0; l < levels && !placed; ++l) {
                if (l == 0 && !layers[0].empty()) continue;
                bool fits = true;
                for (const Monomial& other : layers[l]) {
                    Monomial product = g * other;
                    bool divisible = false;
                    for (std::size_t ll = 0; ll < l && !divisible; ++ll)
                        for (const Monomial& cand : layers[ll])
                            if (cand.divides(product)) {
                                divisible = true;
                                break;
                            }
                    if (!divisible) {
                        fits = false;
                        break;
                    }
                }
                if (fits) {
                    layers[l].push_back(g);
                    placed = true;
                }
            }
            if (!placed) {
                failed = true;
                break;
            }
        }
        if (failed) continue;
        if (std::any_of(layers.begin(), layers.end(),
                        [](const auto& l) { return l.empty(); }))
            continue;
        SVPartition p = SVPartition::of_monomials(layers);
        if (validate_sv(p).ok) return p;
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Cone lift

std::pair<WitnessSet, ConeLiftTrace> cone_lift(const SimplicialComplex& complex,
                                               const std::vector<Variable>& facet,
                                               const WitnessSet& base, Variable apex,
                                               BaseCheck check) {
    MonomialIdeal ideal = stanley_reisner_ideal(complex);
    if (ideal.is_zero())
        throw Error("cone lift is undefined for a simplex (zero Stanley-Reisner ideal)");
    if (!is_pure(complex)) throw Error("cone lift requires an unmixed (pure) complex");
    const std::size_t t = height(complex);
    if (base.elements.size() != t)
        throw Error("SCI hypothesis violated: base witness has " +
                    std::to_string(base.elements.size()) + " elements but the ideal has height " +
                    std::to_string(t));
    if (base.target != ideal)
        throw Error("base witness targets a different ideal than the given complex");
    for (const Polynomial& q : base.elements) {
        const Monomial* bad = ideal.offending_term(q);
        if (bad)
            throw Error("base element " + q.str() + " has term " + bad->str() +
                        " outside the ideal");
    }
    if (check == BaseCheck::verify) {
        VerificationReport report = verify_up_to_radical(base);
        if (report.verdict != Verdict::certified)
            throw Error("base witness failed Groebner verification: " + report.failure_summary());
    }

    // P_F in ascending variable order; column j of A belongs to pf[j].
    std::vector<Variable> pf;
    std::vector<Variable> sorted_facet = facet;
    std::sort(sorted_facet.begin(), sorted_facet.end());
    if (!complex.is_facet(sorted_facet)) throw Error("cone base is not a facet of the complex");
    std::set_difference(complex.vertices().begin(), complex.vertices().end(),
                        sorted_facet.begin(), sorted_facet.end(), std::back_inserter(pf));
    if (pf.size() != t) throw Error("internal: P_F size differs from the height");

    ConeLiftTrace trace{base.elements, pf, apex, PolyMatrix(t, t), PolyMatrix(t, t),
                        PolyMatrix(t, t), Polynomial{}};

    // Decompose q_i = sum_j a_ij * x_{pf[j]}; every term is assigned to the
    // largest-index variable of P_F dividing it.
    for (std::size_t i = 0; i < t; ++i) {
        for (const auto& [m, c] : base.elements[i].terms()) {
            std::optional<std::size_t> col;
            for (std::size_t j = pf.size(); j-- > 0;) {
                if (m.exponent(pf[j]) > 0) {
                    col = j;
                    break;
                }
            }
            if (!col)
                throw Error("decomposition impossible: term " + m.str() + " of base element " +
                            base.elements[i].str() + " avoids every variable of P_F");
            trace.A.at(i, *col) +=
                Polynomial(m.divide_by(Monomial::variable(pf[*col])), c);
        }
    }

    // Abar[i][j] = phi(a_ij) * x_{pf[j]} and Aprime = Abar + apex * Id.
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            trace.Abar.at(i, j) =
                square_substitution(trace.A.at(i, j)) * Polynomial::variable(pf[j]);
            trace.Aprime.at(i, j) = trace.Abar.at(i, j);
            if (i == j) trace.Aprime.at(i, j) += Polynomial::variable(apex);
        }

    trace.D = determinant(trace.Aprime) - Polynomial(Monomial::variable(apex, t));
    if (!ideal.contains(trace.D)) throw Error("internal: D has a term outside the base ideal");

    SimplicialComplex lifted_complex = cone(complex, sorted_facet, apex);
    MonomialIdeal lifted_ideal = stanley_reisner_ideal(lifted_complex);

    WitnessSet out;
    out.variables = lifted_complex.vertices();
    out.target = lifted_ideal;
    out.provenance = Provenance::cone_lift;
    out.elements.push_back(trace.D);
    for (std::size_t i = 0; i < t; ++i) {
        Polynomial qbar = square_substitution(base.elements[i]);
        if (!ideal.contains(qbar)) throw Error("internal: phi(q) left the base ideal");
        out.elements.push_back(qbar + Polynomial(Monomial::variable(apex) *
                                                 Monomial::variable(pf[i])));
    }
    for (const Polynomial& e : out.elements)
        if (!lifted_ideal.contains(e))
            throw Error("internal: lifted element has a term outside the lifted ideal");
    return {std::move(out), std::move(trace)};
}

// --------------------------------------------------------------------------
// The family I_n

MonomialIdeal family_ideal(unsigned n) {
    if (n < 6) throw Error("the family I_n needs n >= 6");
    auto pair = [](unsigned a, unsigned b) {
        return Monomial::variable(Variable{a}) * Monomial::variable(Variable{b});
    };
    std::vector<Monomial> gens;
    for (unsigned j = 3; j <= n - 1; ++j) gens.push_back(pair(1, j));
    for (unsigned j = 4; j <= n; ++j) gens.push_back(pair(2, j));
    for (unsigned j = 5; j <= n; ++j) gens.push_back(pair(3, j));
    for (unsigned j = 4; j <= n - 2; ++j) gens.push_back(pair(j, n));
    return MonomialIdeal(std::move(gens));
}

PolyMatrix family_matrix_B(unsigned n) {
    if (n < 6) throw Error("the family matrix B needs n >= 6");
    const std::size_t size = n - 3;
    PolyMatrix b(size, size);
    auto var = [](unsigned idx) { return Polynomial::variable(Variable{idx}); };
    // Rules I-VI, with 1-based row/column indices as in the construction.
    for (unsigned j = 1; j <= n - 4; ++j) b.at(j - 1, j - 1) = var(1);   // I.(i)
    b.at(size - 1, size - 1) = var(3);                                   // I.(ii)
    for (unsigned j = 1; j <= n - 4; ++j) b.at(j, j - 1) = var(2);       // II
    for (unsigned j = 2; j <= n - 4; ++j)                                // IV
        b.at(j - 2, j - 1) = var(3) * var(3 + j);
    b.at(0, size - 1) = var(2);                                          // V.(i)
    for (unsigned i = 2; i <= n - 4; ++i) b.at(i - 1, size - 1) = var(2 + i); // V.(ii)
    return b;
}

WitnessSet family_witness(unsigned n) {
    MonomialIdeal ideal = family_ideal(n);
    PolyMatrix b = family_matrix_B(n);
    const std::size_t size = n - 3;

    Polynomial sign_term(Monomial::variable(Variable{2}, size));
    Polynomial d = determinant(b);
    d = (n % 2 == 0) ? d - sign_term : d + sign_term;

    // Lemma invariants: D lies in I_n per-term, and apart from x1^(n-4)*x3
    // every term is divisible by x2 and by some x_j with 4 <= j <= n.
    if (!ideal.contains(d)) throw Error("internal: family D left the ideal");
    Polynomial rest = d - Polynomial(Monomial::variable(Variable{1}, n - 4) *
                                     Monomial::variable(Variable{3}));
    for (const auto& [m, c] : rest.terms()) {
        if (m.exponent(Variable{2}) == 0)
            throw Error("internal: family D term " + m.str() + " avoids x2");
        bool tail = false;
        for (unsigned j = 4; j <= n && !tail; ++j) tail = m.exponent(Variable{j}) > 0;
        if (!tail) throw Error("internal: family D term " + m.str() + " avoids x4..xn");
    }

    WitnessSet w;
    for (unsigned i = 1; i <= n; ++i) w.variables.push_back(Variable{i});
    w.target = ideal;
    w.provenance = Provenance::family_In;
    w.elements.push_back(std::move(d));
    for (std::size_t i = 0; i < size; ++i) {
        Polynomial q;
        for (std::size_t j = 0; j < size; ++j)
            q += b.at(i, j) * Polynomial::variable(Variable{static_cast<std::uint32_t>(4 + j)});
        if (!ideal.contains(q)) throw Error("internal: family q left the ideal");
        w.elements.push_back(std::move(q));
    }
    return w;
}

// --------------------------------------------------------------------------

std::pair<WitnessSet, PolyMatrix> example4_witness() {
    auto var = [](unsigned idx) { return Polynomial::variable(Variable{idx}); };
    auto mono = [](std::string_view s) { return Monomial::parse(s); };

    PolyMatrix c(3, 3);
    c.at(0, 0) = var(1);
    c.at(0, 1) = var(2);
    c.at(0, 2) = var(3);
    c.at(1, 0) = var(2);
    c.at(1, 1) = var(3);
    c.at(1, 2) = var(4);
    c.at(2, 1) = var(1);
    c.at(2, 2) = var(2);

    WitnessSet w;
    for (unsigned i = 1; i <= 6; ++i) w.variables.push_back(Variable{i});
    w.target = MonomialIdeal({mono("x1*x4"), mono("x1*x5"), mono("x1*x2*x3"), mono("x2*x4"),
                              mono("x2*x5"), mono("x2*x6"), mono("x3*x5"), mono("x3*x6"),
                              mono("x4*x6")});
    w.provenance = Provenance::example4;

    Polynomial d = determinant(c) - Polynomial(mono("x1*x2*x3")) + Polynomial(mono("x2^3"));
    w.elements.push_back(std::move(d));
    w.elements.push_back(Polynomial::parse("x1*x4 + x2*x5 + x3*x6"));
    w.elements.push_back(Polynomial::parse("x2*x4 + x3*x5 + x4*x6"));
    w.elements.push_back(Polynomial::parse("x1*x5 + x2*x6"));
    for (const Polynomial& e : w.elements)
        if (!w.target.contains(e)) throw Error("internal: example witness element left the ideal");
    return {std::move(w), std::move(c)};
}

WitnessSet cycle5_witness() {
    WitnessSet w;
    for (unsigned i = 1; i <= 5; ++i) w.variables.push_back(Variable{i});
    w.target = stanley_reisner_ideal(cycle_complex(5));
    w.provenance = Provenance::user;
    w.elements.push_back(Polynomial::parse("x1*x3"));
    w.elements.push_back(Polynomial::parse("x1*x4 + x2*x5"));
    w.elements.push_back(Polynomial::parse("x2*x4 + x3*x5"));
    for (const Polynomial& e : w.elements)
        if (!w.target.contains(e)) throw Error("internal: cycle witness element left the ideal");
    return w;
}

} // namespace ara
