#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ara/poly_matrix.hpp"
#include "ara/simplicial.hpp"

namespace ara {

enum class Provenance { schmitt_vogel, cone_lift, family_In, example4, user };

std::string provenance_str(Provenance p);
Provenance provenance_parse(const std::string& text);

// An ordered list of polynomials claimed to generate the target ideal up to
// radical.  Library constructions enforce per-term membership of every
// element; user-supplied witnesses are taken as-is and judged by the verifier.
struct WitnessSet {
    std::vector<Variable> variables; // the ambient ring
    MonomialIdeal target;
    std::vector<Polynomial> elements;
    Provenance provenance = Provenance::user;
};

// --------------------------------------------------------------------------
// Schmitt-Vogel sums

// Layered subsets P_0,...,P_r of a finite polynomial set, plus one exponent
// e(p) >= 1 per member.  levels and exponents run in parallel.
struct SVPartition {
    std::vector<std::vector<Polynomial>> levels;
    std::vector<std::vector<std::uint64_t>> exponents; // empty = all ones

    static SVPartition of_monomials(const std::vector<std::vector<Monomial>>& levels);
    std::uint64_t exponent(std::size_t level, std::size_t index) const;
};

struct SVValidation {
    bool ok = true;
    std::string message; // names the first violated condition and the pair
};

// Checks the three conditions: the levels cover the expected set (when one is
// given), level 0 is a singleton, and every pair p != p'' inside a level has
// a lower-level single-term divisor of p*p''.
SVValidation validate_sv(const SVPartition& partition);
SVValidation validate_sv(const SVPartition& partition, const std::vector<Polynomial>& expected);

// The sums q_l = sum_{p in P_l} p^{e(p)}; these generate the union of the
// levels up to radical.  All members must be single-term polynomials so the
// target monomial ideal is defined; the partition must validate.
WitnessSet schmitt_vogel(const SVPartition& partition);

// Randomized greedy search for a valid partition of the generators into
// exactly `levels` layers.  Returns nothing if no attempt succeeds.
std::optional<SVPartition> find_sv_partition(const MonomialIdeal& ideal, std::size_t levels,
                                             std::uint64_t seed, unsigned restarts = 200);

// --------------------------------------------------------------------------
// Cone lift

// Intermediate data of the lift; enough to replay every identity:
// q_i = sum_j A[i][j] * x_{pf[j]},  Abar[i][j] = phi(A[i][j]) * x_{pf[j]},
// Aprime = Abar + apex * Id,  D = det(Aprime) - apex^t.
struct ConeLiftTrace {
    std::vector<Polynomial> base;
    std::vector<Variable> pf_variables; // generators of P_F, ascending
    Variable apex;
    PolyMatrix A, Abar, Aprime;
    Polynomial D;
};

enum class BaseCheck { verify, trust };

// Lifts a size-t witness of I_Delta (t = height, the SCI hypothesis) to a
// size-(t+1) witness of the cone's Stanley-Reisner ideal.  By default the
// base witness is verified with the Groebner engine first; pass
// BaseCheck::trust to skip that step.
std::pair<WitnessSet, ConeLiftTrace> cone_lift(const SimplicialComplex& complex,
                                               const std::vector<Variable>& facet,
                                               const WitnessSet& base, Variable apex,
                                               BaseCheck check = BaseCheck::verify);

// --------------------------------------------------------------------------
// The family I_n and the fixed six-variable example

MonomialIdeal family_ideal(unsigned n);  // n >= 6
PolyMatrix family_matrix_B(unsigned n);  // (n-3) x (n-3)
WitnessSet family_witness(unsigned n);   // {D, q_1, ..., q_{n-3}}

// Witness {D, q1, q2, q3} for the height-4 ideal on six variables, together
// with the 3x3 coefficient matrix C with det C = 2*x1*x2*x3 - x1^2*x4 - x2^3.
std::pair<WitnessSet, PolyMatrix> example4_witness();

// The witness {x1*x3, x1*x4 + x2*x5, x2*x4 + x3*x5} for the C_5 cycle ideal.
WitnessSet cycle5_witness();

} // namespace ara
