#include "ara/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ara {

// --------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 2 || p > 1000000007ULL) throw Error("prime field characteristic out of range");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error(std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(text.substr(3));
        } catch (const std::exception&) {
            throw Error("invalid field spec '" + text + "'");
        }
        return prime(p);
    }
    throw Error("invalid field spec '" + text + "' (expected q or fp:<p>)");
}

namespace {

// --------------------------------------------------------------------------
// Coefficient policies.  QField does exact rational division and backs the
// public normal_form contract.  ZField computes over primitive integer
// polynomials with cross-multiplied (pseudo) reduction steps: the same
// Groebner basis and the same zero/nonzero answers, without any rational
// canonicalization in the inner loop.  FpField is modular arithmetic.

struct QField {
    static constexpr bool fraction_free = false;
    using Coef = Rational;
    Coef from_rational(const Rational& r) const { return r; }
    Rational to_rational(const Coef& c) const { return c; }
    bool is_zero(const Coef& c) const { return c == 0; }
    Coef one() const { return Rational(1); }
    Coef neg(const Coef& c) const { return -c; }
    Coef add(const Coef& a, const Coef& b) const { return a + b; }
    Coef mul(const Coef& a, const Coef& b) const { return a * b; }
    Coef div(const Coef& a, const Coef& b) const { return a / b; }
};

struct ZField {
    static constexpr bool fraction_free = true;
    using Coef = mpz_class;
    Rational to_rational(const Coef& c) const { return Rational(c); }
    bool is_zero(const Coef& c) const { return c == 0; }
    Coef one() const { return mpz_class(1); }
    Coef neg(const Coef& c) const { return -c; }
    Coef add(const Coef& a, const Coef& b) const { return a + b; }
    Coef mul(const Coef& a, const Coef& b) const { return a * b; }
};

struct FpField {
    static constexpr bool fraction_free = false;
    std::uint64_t p;
    using Coef = std::uint64_t;

    Coef from_rational(const Rational& r) const {
        mpz_class num = r.get_num() % static_cast<unsigned long>(p);
        if (num < 0) num += static_cast<unsigned long>(p);
        mpz_class den = r.get_den() % static_cast<unsigned long>(p);
        if (den == 0)
            throw Error("coefficient denominator vanishes in characteristic " + std::to_string(p));
        return mul(num.get_ui(), inv(den.get_ui()));
    }
    Rational to_rational(const Coef& c) const { return Rational(static_cast<unsigned long>(c)); }
    bool is_zero(const Coef& c) const { return c == 0; }
    Coef one() const { return 1; }
    Coef neg(const Coef& c) const { return c == 0 ? 0 : p - c; }
    Coef add(const Coef& a, const Coef& b) const {
        Coef s = a + b;
        return s >= p ? s - p : s;
    }
    Coef mul(const Coef& a, const Coef& b) const {
        return static_cast<Coef>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Coef powmod(Coef a, std::uint64_t e) const {
        Coef r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Coef inv(const Coef& a) const {
        if (a == 0) throw Error("division by zero in F_p");
        return powmod(a, p - 2);
    }
    Coef div(const Coef& a, const Coef& b) const { return mul(a, inv(b)); }
};

// --------------------------------------------------------------------------
// Engine: division and completion on order-sorted term vectors

template <class F>
struct Engine {
    using C = typename F::Coef;
    struct Term {
        Monomial m;
        C c;
    };
    using Poly = std::vector<Term>; // descending under the active order

    F field;
    TermOrder order;

    Poly from(const Polynomial& p) const {
        Poly out;
        out.reserve(p.term_count());
        if constexpr (F::fraction_free) {
            mpz_class den_lcm = 1;
            for (const auto& [m, c] : p.terms())
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            for (const auto& [m, c] : p.terms())
                out.push_back({m, mpz_class(c.get_num() * (den_lcm / c.get_den()))});
        } else {
            for (const auto& [m, c] : p.terms()) {
                C fc = field.from_rational(c);
                if (!field.is_zero(fc)) out.push_back({m, fc});
            }
        }
        std::sort(out.begin(), out.end(),
                  [&](const Term& a, const Term& b) { return order.greater(a.m, b.m); });
        return out;
    }

    // Lift back to a rational polynomial; fraction-free bases are made monic
    // here so the reduced basis is the canonical one over Q.
    Polynomial lift_monic(const Poly& p) const {
        Polynomial out;
        if (p.empty()) return out;
        if constexpr (F::fraction_free) {
            Rational lc(p.front().c);
            for (const Term& t : p) out.add_term(t.m, Rational(t.c) / lc);
        } else {
            for (const Term& t : p) out.add_term(t.m, field.to_rational(t.c));
        }
        return out;
    }

    Polynomial lift_raw(const Poly& p) const {
        Polynomial out;
        for (const Term& t : p) out.add_term(t.m, field.to_rational(t.c));
        return out;
    }

    // sa * a[a_from..] + c * m * b, merged in order.
    Poly add_scaled(const Poly& a, std::size_t a_from, const C& sa, const C& c,
                    const Monomial& m, const Poly& b) const {
        const bool scale_a = !(sa == field.one());
        Poly out;
        out.reserve(a.size() - a_from + b.size());
        std::size_t i = a_from, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                out.push_back({a[i].m, scale_a ? field.mul(sa, a[i].c) : a[i].c});
                ++i;
                continue;
            }
            Monomial mb = b[j].m * m;
            int cmp = (i < a.size()) ? order.compare(a[i].m, mb) : -1;
            if (cmp > 0) {
                out.push_back({a[i].m, scale_a ? field.mul(sa, a[i].c) : a[i].c});
                ++i;
            } else if (cmp < 0) {
                C coef = field.mul(c, b[j].c);
                if (!field.is_zero(coef)) out.push_back({std::move(mb), std::move(coef)});
                ++j;
            } else {
                C left = scale_a ? field.mul(sa, a[i].c) : a[i].c;
                C sum = field.add(left, field.mul(c, b[j].c));
                if (!field.is_zero(sum)) out.push_back({a[i].m, std::move(sum)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void strip_content(Poly& p) const {
        if constexpr (F::fraction_free) {
            if (p.empty()) return;
            mpz_class g = 0;
            for (const Term& t : p) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
                if (g == 1) break;
            }
            if (p.front().c < 0) g = -g;
            if (g != 1)
                for (Term& t : p) t.c /= g;
        }
    }

    // Content-strip across the already-extracted remainder and the tail
    // jointly, so the pair stays one consistent scalar multiple.
    void strip_joint(Poly& remainder, Poly& h) const {
        if constexpr (F::fraction_free) {
            mpz_class g = 0;
            for (const Term& t : remainder) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
                if (g == 1) return;
            }
            for (const Term& t : h) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
                if (g == 1) return;
            }
            if (g == 0 || g == 1) return;
            for (Term& t : remainder) t.c /= g;
            for (Term& t : h) t.c /= g;
        }
    }

    // Full normal form of h against the list; for the fraction-free policy
    // the result is a nonzero integer multiple of the exact normal form.
    Poly reduce_full(Poly h, const std::vector<Poly>& basis) const {
        Poly remainder;
        std::size_t pos = 0;
        int steps = 0;
        while (pos < h.size()) {
            const Poly* divisor = nullptr;
            for (const Poly& f : basis)
                if (f.front().m.divides(h[pos].m)) {
                    divisor = &f;
                    break;
                }
            if (!divisor) {
                remainder.push_back(std::move(h[pos]));
                ++pos;
                continue;
            }
            Monomial shift = h[pos].m.divide_by(divisor->front().m);
            if constexpr (F::fraction_free) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), divisor->front().c.get_mpz_t(), h[pos].c.get_mpz_t());
                mpz_class sa = divisor->front().c / g;
                mpz_class c = -(h[pos].c / g);
                if (sa < 0) {
                    sa = -sa;
                    c = -c;
                }
                h = add_scaled(h, pos, sa, c, shift, *divisor);
                if (sa != 1 && !remainder.empty())
                    for (Term& t : remainder) t.c *= sa;
                if (++steps % 16 == 0) strip_joint(remainder, h);
            } else {
                C factor = field.neg(field.div(h[pos].c, divisor->front().c));
                h = add_scaled(h, pos, field.one(), factor, shift, *divisor);
            }
            pos = 0;
        }
        return remainder;
    }

    bool reduces_to_zero(Poly h, const std::vector<Poly>& basis) const {
        return reduce_full(std::move(h), basis).empty();
    }

    // Divide by the coefficient content and normalize the leading sign
    // (fraction-free), or make monic (true fields).
    void normalize(Poly& p) const {
        if constexpr (F::fraction_free) {
            strip_content(p);
        } else {
            if (p.empty()) return;
            C lc = p.front().c;
            for (Term& t : p) t.c = field.div(t.c, lc);
        }
    }

    Poly spoly(const Poly& a, const Poly& b) const {
        Monomial gamma = Monomial::lcm(a.front().m, b.front().m);
        Monomial ma = gamma.divide_by(a.front().m);
        Monomial mb = gamma.divide_by(b.front().m);
        C ca = a.front().c;
        C cb = b.front().c;
        if constexpr (F::fraction_free) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            ca /= g;
            cb /= g;
        }
        Poly left;
        left.reserve(a.size());
        for (const Term& t : a) left.push_back({t.m * ma, field.mul(t.c, cb)});
        return add_scaled(left, 0, field.one(), field.neg(ca), mb, b);
    }

    struct DegreeOrderLess {
        const TermOrder* order;
        bool operator()(const Monomial& a, const Monomial& b) const {
            std::uint64_t da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            return order->compare(a, b) < 0;
        }
    };

    // Buchberger completion with the Gebauer-Moeller installation of the
    // coprime and chain criteria; pairs are pruned at creation time and
    // selected smallest lcm degree first, ties by input index.  The first
    // known_gb_prefix inputs are an already reduced Groebner basis, so their
    // mutual S-pairs are skipped.
    std::vector<Poly> completion(const std::vector<Poly>& input,
                                 std::size_t known_gb_prefix = 0) const {
        std::vector<Poly> g;
        std::set<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>> queue;
        std::map<std::pair<std::uint32_t, std::uint32_t>, Monomial> pair_lcm;
        bool unit_found = false;

        auto update = [&](Poly p, bool make_pairs) {
            if (p.empty()) return;
            normalize(p);
            if (p.front().m.is_unit()) {
                unit_found = true;
                return;
            }
            const std::uint32_t t = static_cast<std::uint32_t>(g.size());
            const Monomial& lmf = p.front().m;
            if (make_pairs) {
                // Drop queued pairs whose lcm the new leading monomial divides
                // strictly on both sides.
                for (auto it = queue.begin(); it != queue.end();) {
                    auto [deg, i, j] = *it;
                    const Monomial& lij = pair_lcm.at({i, j});
                    if (lmf.divides(lij) &&
                        lij != Monomial::lcm(g[i].front().m, lmf) &&
                        lij != Monomial::lcm(g[j].front().m, lmf)) {
                        pair_lcm.erase({i, j});
                        it = queue.erase(it);
                    } else {
                        ++it;
                    }
                }
                // Group the candidate pairs (i, t) by their lcm; keep only
                // divisibility-minimal lcms, one representative each, and
                // drop any group that contains a coprime pair.
                std::map<Monomial, std::vector<std::uint32_t>, DegreeOrderLess> groups{
                    DegreeOrderLess{&order}};
                for (std::uint32_t i = 0; i < t; ++i)
                    groups[Monomial::lcm(g[i].front().m, lmf)].push_back(i);
                std::vector<const Monomial*> kept;
                for (const auto& [lcm_m, members] : groups) {
                    bool covered = std::any_of(kept.begin(), kept.end(), [&](const Monomial* k) {
                        return k->divides(lcm_m);
                    });
                    if (covered) continue;
                    kept.push_back(&lcm_m);
                    bool coprime_member =
                        std::any_of(members.begin(), members.end(), [&](std::uint32_t i) {
                            return g[i].front().m.coprime(lmf);
                        });
                    if (coprime_member) continue; // its S-poly reduces to zero
                    std::uint32_t rep = members.front();
                    queue.insert({lcm_m.degree(), rep, t});
                    pair_lcm.emplace(std::make_pair(rep, t), lcm_m);
                }
            }
            g.push_back(std::move(p));
        };

        for (std::size_t k = 0; k < input.size() && !unit_found; ++k) {
            if (k < known_gb_prefix)
                update(input[k], false);
            else
                update(reduce_full(input[k], g), true);
        }

        while (!unit_found && !queue.empty()) {
            auto [deg, i, j] = *queue.begin();
            queue.erase(queue.begin());
            pair_lcm.erase({i, j});
            update(reduce_full(spoly(g[i], g[j]), g), true);
        }

        if (unit_found) return {Poly{{Monomial{}, field.one()}}};
        return g;
    }

    std::vector<Poly> reduced_basis(const std::vector<Poly>& input,
                                    std::size_t known_gb_prefix = 0) const {
        std::vector<Poly> g = completion(input, known_gb_prefix);

        // Minimal: drop members whose leading monomial another one divides.
        std::vector<Poly> minimal;
        for (std::size_t i = 0; i < g.size(); ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < g.size() && !drop; ++j) {
                if (i == j) continue;
                const Monomial& lmj = g[j].front().m;
                if (lmj.divides(g[i].front().m) && (lmj != g[i].front().m || j < i)) drop = true;
            }
            if (!drop) minimal.push_back(g[i]);
        }

        // Auto-reduce tails; normalization happens on lift.
        std::vector<Poly> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others);
            normalize(r);
            reduced.push_back(std::move(r));
        }
        std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
            return order.less(a.front().m, b.front().m);
        });
        return reduced;
    }
};

// --------------------------------------------------------------------------

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t hash_input(const std::vector<Polynomial>& gens, const TermOrder& order,
                         const FieldSpec& field) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const Polynomial& g : gens) h = fnv1a(fnv1a(h, g.str()), "\n");
    h = fnv1a(h, order.name());
    h = fnv1a(h, field.str());
    return h;
}

template <class F>
GroebnerBasis run_buchberger(const F& f, const std::vector<Polynomial>& gens,
                             const TermOrder& order, const FieldSpec& field,
                             std::size_t known_gb_prefix = 0) {
    Engine<F> engine{f, order};
    std::vector<typename Engine<F>::Poly> input;
    std::size_t prefix = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto p = engine.from(gens[i]);
        if (p.empty()) continue;
        input.push_back(std::move(p));
        if (i < known_gb_prefix) prefix = input.size();
    }
    GroebnerBasis gb;
    gb.order = order;
    gb.field = field;
    gb.source_hash = hash_input(gens, order, field);
    for (const auto& p : engine.reduced_basis(input, prefix))
        gb.generators.push_back(engine.lift_monic(p));
    return gb;
}

GroebnerBasis buchberger_seeded(const std::vector<Polynomial>& gens, const TermOrder& order,
                                const FieldSpec& field, std::size_t known_gb_prefix) {
    if (field.is_rationals())
        return run_buchberger(ZField{}, gens, order, field, known_gb_prefix);
    return run_buchberger(FpField{field.characteristic()}, gens, order, field, known_gb_prefix);
}

template <class F>
bool run_zero_check(const F& f, const Polynomial& poly, const std::vector<Polynomial>& basis,
                    const TermOrder& order) {
    Engine<F> engine{f, order};
    std::vector<typename Engine<F>::Poly> divisors;
    for (const Polynomial& g : basis) {
        auto p = engine.from(g);
        if (!p.empty()) divisors.push_back(std::move(p));
    }
    return engine.reduces_to_zero(engine.from(poly), divisors);
}

std::uint32_t fresh_variable_index(const std::vector<Polynomial>& polys) {
    std::uint32_t next = 0;
    for (const Polynomial& p : polys)
        for (const Variable& v : p.support()) next = std::max(next, v.index + 1);
    return next;
}

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                         const FieldSpec& field) {
    return buchberger_seeded(gens, order, field, 0);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order, const FieldSpec& field) {
    if (field.is_rationals()) {
        Engine<QField> engine{QField{}, order};
        std::vector<Engine<QField>::Poly> divisors;
        for (const Polynomial& g : basis) {
            auto p = engine.from(g);
            if (!p.empty()) divisors.push_back(std::move(p));
        }
        return engine.lift_raw(engine.reduce_full(engine.from(f), divisors));
    }
    Engine<FpField> engine{FpField{field.characteristic()}, order};
    std::vector<Engine<FpField>::Poly> divisors;
    for (const Polynomial& g : basis) {
        auto p = engine.from(g);
        if (!p.empty()) divisors.push_back(std::move(p));
    }
    return engine.lift_raw(engine.reduce_full(engine.from(f), divisors));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.generators, gb.order, gb.field);
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                  const TermOrder& order, const FieldSpec& field) {
    return ideal_member(f, buchberger(gens, order, field));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.field.is_rationals())
        return run_zero_check(ZField{}, f, gb.generators, gb.order);
    return run_zero_check(FpField{gb.field.characteristic()}, f, gb.generators, gb.order);
}

RadicalResult radical_member(const Polynomial& g, const std::vector<Polynomial>& gens,
                             const TermOrder& order, const FieldSpec& field,
                             std::optional<std::uint64_t> power_cap) {
    return radical_member(g, buchberger(gens, order, field), power_cap);
}

RadicalResult radical_member(const Polynomial& g, const GroebnerBasis& gb,
                             std::optional<std::uint64_t> power_cap) {
    if (g.is_zero()) throw Error("radical membership requires a nonzero polynomial");
    RadicalResult result;

    // A small explicit power g^k in J is already a radical certificate and is
    // far cheaper than a fresh slack-variable basis, so try that first.
    constexpr std::uint64_t kQuickCap = 16;
    std::uint64_t quick_cap = power_cap ? std::min(kQuickCap, *power_cap) : kQuickCap;
    for (std::uint64_t k = 1; k <= quick_cap; k *= 2) {
        if (ideal_member(g.pow(k), gb)) {
            result.member = true;
            result.power = k;
            return result;
        }
        if (k > quick_cap / 2) break;
    }

    std::vector<Polynomial> slacked = gb.generators;
    std::uint32_t slack = fresh_variable_index(slacked);
    for (const Variable& v : g.support()) slack = std::max(slack, v.index + 1);
    Polynomial one_minus_yg =
        Polynomial(Rational(1)) - Polynomial::variable(Variable{slack}) * g;
    slacked.push_back(std::move(one_minus_yg));

    GroebnerBasis rab = buchberger_seeded(slacked, gb.order, gb.field, gb.generators.size());
    result.slack_basis_size = rab.generators.size();
    result.member = rab.generators.size() == 1 && rab.generators.front().term_count() == 1 &&
                    rab.generators.front().terms().begin()->first.is_unit();

    if (power_cap && result.member) {
        for (std::uint64_t k = 1; k <= *power_cap; k *= 2) {
            if (k > quick_cap && ideal_member(g.pow(k), gb)) {
                result.power = k;
                break;
            }
            if (k > *power_cap / 2) break; // next doubling would leave the cap
        }
        result.cap_exceeded = !result.power.has_value();
    }
    return result;
}

} // namespace ara
