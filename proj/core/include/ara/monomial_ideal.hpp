#pragma once

#include <vector>

#include "ara/polynomial.hpp"

namespace ara {

// Removes every monomial that is divisible by another member of the set;
// the survivors generate the same ideal.  Idempotent and order-independent.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

// An ideal generated by monomials, stored by its unique minimal generating
// set in descending display order.  The default-constructed ideal is (0).
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<Monomial> generators);

    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool all_squarefree() const;

    bool contains(const Monomial& m) const;
    // Per-term membership: true iff every term of f is divisible by some
    // generator.  Exact for monomial ideals; no Groebner machinery involved.
    bool contains(const Polynomial& f) const;
    // First term of f outside the ideal, if any.
    const Monomial* offending_term(const Polynomial& f) const;

    MonomialIdeal radical() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<Monomial> gens_;
};

} // namespace ara
