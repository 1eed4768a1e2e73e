#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ara/field.hpp"
#include "ara/polynomial.hpp"
#include "ara/term_order.hpp"

namespace ara {

// A reduced Groebner basis: auto-reduced, leading coefficients 1, sorted by
// ascending leading monomial.  Over F_p the generators are returned with
// coefficients lifted to 0..p-1.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    TermOrder order;
    FieldSpec field;
    std::uint64_t source_hash = 0; // FNV-1a over the canonicalized input
};

// Buchberger completion with the normal pair-selection strategy (smallest
// lcm degree, ties by input index) and both the coprime-leading-term and
// chain criteria.  Deterministic for a fixed input ordering.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const TermOrder& order,
                         const FieldSpec& field = FieldSpec::rationals());

// Remainder of multivariate division of f by the given list; no term of the
// result is divisible by any leading term of the list, and f - result lies in
// the generated ideal.  The list does not have to be a Groebner basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const TermOrder& order, const FieldSpec& field = FieldSpec::rationals());
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                  const TermOrder& order, const FieldSpec& field = FieldSpec::rationals());
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

struct RadicalResult {
    bool member = false;
    std::optional<std::uint64_t> power;  // explicit k with g^k in the ideal, when searched
    bool cap_exceeded = false;           // explicit search hit the cap without a certificate
    std::size_t slack_basis_size = 0;    // size of the Rabinowitsch basis
};

// Radical membership via the Rabinowitsch trick: g in sqrt(J) iff 1 lies in
// J + (1 - y*g) with y a fresh slack variable.  When power_cap is given, an
// explicit exponent is searched by doubling k = 1, 2, 4, ... <= cap; the
// Rabinowitsch answer stays authoritative either way.
RadicalResult radical_member(const Polynomial& g, const std::vector<Polynomial>& gens,
                             const TermOrder& order,
                             const FieldSpec& field = FieldSpec::rationals(),
                             std::optional<std::uint64_t> power_cap = {});
// Same, reusing a precomputed basis of J.
RadicalResult radical_member(const Polynomial& g, const GroebnerBasis& gb,
                             std::optional<std::uint64_t> power_cap = {});

} // namespace ara
