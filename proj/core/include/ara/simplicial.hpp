#pragma once

#include <cstdint>
#include <vector>

#include "ara/monomial_ideal.hpp"

namespace ara {

// The prime P_F = (X \ F) attached to a facet F; its height is the number
// of generators.
struct MinimalPrime {
    std::vector<Variable> variables; // ascending

    friend bool operator==(const MinimalPrime&, const MinimalPrime&) = default;
};

// A simplicial complex, stored by its vertex set and maximal faces only.
// Invariants enforced on construction: facets nonempty, no facet contains
// another, and every vertex lies in some facet (every {x} is a face).
class SimplicialComplex {
public:
    static SimplicialComplex create(std::vector<Variable> vertices,
                                    std::vector<std::vector<Variable>> facets);

    const std::vector<Variable>& vertices() const { return vertices_; }
    const std::vector<std::vector<Variable>>& facets() const { return facets_; }

    bool has_vertex(Variable v) const;
    bool is_face(const std::vector<Variable>& subset) const;
    bool is_facet(const std::vector<Variable>& subset) const;
    std::size_t max_facet_size() const;
    std::size_t min_facet_size() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<Variable> vertices_;              // ascending
    std::vector<std::vector<Variable>> facets_;   // each ascending; list sorted
};

// The Stanley-Reisner ideal: minimal generators are the products of the
// minimal non-faces (all squarefree).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

// Inverse direction of the correspondence; rejects non-squarefree generators
// and degree-one generators (a vertex must lie in some facet).
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     std::vector<Variable> vertices);

// One prime per facet: P_F = (vertices \ F).
std::vector<MinimalPrime> minimal_primes(const SimplicialComplex& complex);

std::size_t height(const SimplicialComplex& complex);    // |X| - max |F|
std::size_t dimension(const SimplicialComplex& complex); // max |F| - 1
bool is_pure(const SimplicialComplex& complex);
inline bool is_unmixed(const SimplicialComplex& complex) { return is_pure(complex); }

// Connectivity of the facet graph; only defined for pure 1-dimensional
// complexes, anything else is an error.
bool is_cm_one_dimensional(const SimplicialComplex& complex);

// Attaches the simplex on F + {apex} in place of the facet F.
SimplicialComplex cone(const SimplicialComplex& complex, const std::vector<Variable>& facet,
                       Variable apex);

// The cycle graph C_n on x1..xn as a 1-dimensional complex; n >= 3.
SimplicialComplex cycle_complex(unsigned n);

} // namespace ara
