#include "ara/simplicial.hpp"

#include <algorithm>
#include <cstdint>

namespace ara {

namespace {

bool subset_of(const std::vector<Variable>& a, const std::vector<Variable>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void sort_unique(std::vector<Variable>& vars) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
}

std::string face_str(const std::vector<Variable>& face) {
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i > 0) out += ",";
        out += face[i].name();
    }
    return out + "}";
}

constexpr std::size_t kMaxEnumVertices = 24; // subset enumeration bound

} // namespace

SimplicialComplex SimplicialComplex::create(std::vector<Variable> vertices,
                                            std::vector<std::vector<Variable>> facets) {
    SimplicialComplex c;
    sort_unique(vertices);
    if (vertices.empty()) throw Error("complex needs at least one vertex");
    for (auto& f : facets) {
        sort_unique(f);
        if (f.empty()) throw Error("facets must be nonempty");
        for (Variable v : f)
            if (!std::binary_search(vertices.begin(), vertices.end(), v))
                throw Error("facet " + face_str(f) + " uses unknown vertex " + v.name());
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (const auto& f : facets)
        for (const auto& g : facets)
            if (&f != &g && subset_of(f, g))
                throw Error("facet " + face_str(f) + " is contained in facet " + face_str(g));
    for (Variable v : vertices) {
        bool covered = std::any_of(facets.begin(), facets.end(), [&](const auto& f) {
            return std::binary_search(f.begin(), f.end(), v);
        });
        if (!covered) throw Error("vertex " + v.name() + " lies in no facet");
    }
    c.vertices_ = std::move(vertices);
    c.facets_ = std::move(facets);
    return c;
}

bool SimplicialComplex::has_vertex(Variable v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::is_face(const std::vector<Variable>& subset) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const auto& f) { return subset_of(subset, f); });
}

bool SimplicialComplex::is_facet(const std::vector<Variable>& subset) const {
    return std::binary_search(facets_.begin(), facets_.end(), subset);
}

std::size_t SimplicialComplex::max_facet_size() const {
    std::size_t m = 0;
    for (const auto& f : facets_) m = std::max(m, f.size());
    return m;
}

std::size_t SimplicialComplex::min_facet_size() const {
    std::size_t m = vertices_.size();
    for (const auto& f : facets_) m = std::min(m, f.size());
    return m;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
    const auto& verts = complex.vertices();
    const std::size_t n = verts.size();
    if (n > kMaxEnumVertices) throw Error("non-face enumeration supported up to 24 vertices");

    // Ascending-cardinality subset search; subsets containing a known minimal
    // non-face are pruned.  Singletons are faces by the vertex invariant.
    std::vector<std::uint32_t> nonfaces;
    std::vector<std::uint32_t> facet_masks;
    for (const auto& f : complex.facets()) {
        std::uint32_t mask = 0;
        for (Variable v : f) {
            std::size_t i = std::lower_bound(verts.begin(), verts.end(), v) - verts.begin();
            mask |= 1u << i;
        }
        facet_masks.push_back(mask);
    }
    auto is_face_mask = [&](std::uint32_t s) {
        return std::any_of(facet_masks.begin(), facet_masks.end(),
                           [&](std::uint32_t f) { return (s & ~f) == 0; });
    };

    std::vector<std::uint32_t> subsets((1u << n));
    for (std::uint32_t s = 0; s < subsets.size(); ++s) subsets[s] = s;
    std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });
    for (std::uint32_t s : subsets) {
        if (__builtin_popcount(s) < 2) continue;
        bool pruned = std::any_of(nonfaces.begin(), nonfaces.end(),
                                  [&](std::uint32_t nf) { return (nf & ~s) == 0; });
        if (pruned) continue;
        if (!is_face_mask(s)) nonfaces.push_back(s);
    }

    std::vector<Monomial> gens;
    for (std::uint32_t nf : nonfaces) {
        Monomial m;
        for (std::size_t i = 0; i < n; ++i)
            if (nf & (1u << i)) m = m * Monomial::variable(verts[i]);
        gens.push_back(m);
    }
    return MonomialIdeal(std::move(gens));
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     std::vector<Variable> vertices) {
    sort_unique(vertices);
    const std::size_t n = vertices.size();
    if (n == 0) throw Error("complex needs at least one vertex");
    if (n > kMaxEnumVertices) throw Error("face enumeration supported up to 24 vertices");
    if (!ideal.all_squarefree())
        throw Error("Stanley-Reisner correspondence requires squarefree generators");

    std::vector<std::uint32_t> gen_masks;
    for (const Monomial& g : ideal.generators()) {
        if (g.degree() < 2)
            throw Error("generator " + g.str() +
                        " excludes a vertex; every vertex must be a face");
        std::uint32_t mask = 0;
        for (Variable v : g.support()) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
            if (it == vertices.end() || *it != v)
                throw Error("generator " + g.str() + " uses unknown vertex " + v.name());
            mask |= 1u << (it - vertices.begin());
        }
        gen_masks.push_back(mask);
    }

    auto is_face_mask = [&](std::uint32_t s) {
        return std::none_of(gen_masks.begin(), gen_masks.end(),
                            [&](std::uint32_t g) { return (g & ~s) == 0; });
    };

    // Collect maximal faces.
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t s = (1u << n); s-- > 0;) {
        if (!is_face_mask(s)) continue;
        bool contained = std::any_of(maximal.begin(), maximal.end(),
                                     [&](std::uint32_t f) { return (s & ~f) == 0; });
        if (!contained) maximal.push_back(s);
    }

    std::vector<std::vector<Variable>> facets;
    for (std::uint32_t f : maximal) {
        std::vector<Variable> face;
        for (std::size_t i = 0; i < n; ++i)
            if (f & (1u << i)) face.push_back(vertices[i]);
        facets.push_back(std::move(face));
    }
    return SimplicialComplex::create(std::move(vertices), std::move(facets));
}

std::vector<MinimalPrime> minimal_primes(const SimplicialComplex& complex) {
    std::vector<MinimalPrime> primes;
    for (const auto& f : complex.facets()) {
        MinimalPrime p;
        std::set_difference(complex.vertices().begin(), complex.vertices().end(), f.begin(),
                            f.end(), std::back_inserter(p.variables));
        primes.push_back(std::move(p));
    }
    return primes;
}

std::size_t height(const SimplicialComplex& complex) {
    return complex.vertices().size() - complex.max_facet_size();
}

std::size_t dimension(const SimplicialComplex& complex) {
    return complex.max_facet_size() - 1;
}

bool is_pure(const SimplicialComplex& complex) {
    return complex.max_facet_size() == complex.min_facet_size();
}

bool is_cm_one_dimensional(const SimplicialComplex& complex) {
    if (!is_pure(complex)) throw Error("Cohen-Macaulay graph test requires a pure complex");
    if (dimension(complex) != 1)
        throw Error("Cohen-Macaulay graph test requires dimension 1, got " +
                    std::to_string(dimension(complex)));
    // BFS over the graph whose edges are the facets.
    const auto& verts = complex.vertices();
    std::vector<std::size_t> component(verts.size());
    auto index_of = [&](Variable v) {
        return static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (std::size_t i = 0; i < component.size(); ++i) component[i] = i;
    auto root = [&](std::size_t i) {
        while (component[i] != i) i = component[i] = component[component[i]];
        return i;
    };
    for (const auto& f : complex.facets()) {
        std::size_t a = root(index_of(f[0]));
        std::size_t b = root(index_of(f[1]));
        component[a] = b;
    }
    std::size_t r = root(0);
    for (std::size_t i = 1; i < component.size(); ++i)
        if (root(i) != r) return false;
    return true;
}

SimplicialComplex cone(const SimplicialComplex& complex, const std::vector<Variable>& facet,
                       Variable apex) {
    std::vector<Variable> f = facet;
    sort_unique(f);
    if (!complex.is_facet(f)) throw Error("cone base " + face_str(f) + " is not a facet");
    if (complex.has_vertex(apex))
        throw Error("cone apex " + apex.name() + " is already a vertex");

    std::vector<Variable> vertices = complex.vertices();
    vertices.push_back(apex);
    std::vector<std::vector<Variable>> facets;
    for (const auto& g : complex.facets())
        if (g != f) facets.push_back(g);
    f.push_back(apex);
    sort_unique(f);
    facets.push_back(std::move(f));
    return SimplicialComplex::create(std::move(vertices), std::move(facets));
}

SimplicialComplex cycle_complex(unsigned n) {
    if (n < 3) throw Error("cycle complex needs n >= 3");
    std::vector<Variable> vertices;
    std::vector<std::vector<Variable>> facets;
    for (unsigned i = 1; i <= n; ++i) {
        vertices.push_back(Variable{i});
        unsigned j = (i % n) + 1;
        facets.push_back({Variable{i}, Variable{j}});
    }
    return SimplicialComplex::create(std::move(vertices), std::move(facets));
}

} // namespace ara
