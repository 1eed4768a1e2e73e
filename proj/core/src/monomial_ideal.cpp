#include "ara/monomial_ideal.hpp"

#include <algorithm>

namespace ara {

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> minimal;
    for (const Monomial& m : monomials) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Monomial& g) { return g.divides(m); });
        if (!redundant) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end(), DisplayGreater{});
    return minimal;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators)
    : gens_(minimalize(std::move(generators))) {}

bool MonomialIdeal::all_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const Polynomial& f) const {
    return offending_term(f) == nullptr;
}

const Monomial* MonomialIdeal::offending_term(const Polynomial& f) const {
    for (const auto& [m, c] : f.terms())
        if (!contains(m)) return &m;
    return nullptr;
}

MonomialIdeal MonomialIdeal::radical() const {
    std::vector<Monomial> parts;
    parts.reserve(gens_.size());
    for (const Monomial& g : gens_) parts.push_back(g.squarefree_part());
    return MonomialIdeal(std::move(parts));
}

} // namespace ara
