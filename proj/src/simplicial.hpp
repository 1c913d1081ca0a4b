#pragma once

#include "dga.hpp"

#include <iosfwd>

namespace dgc {

/* Finite simplicial complex given by facets (ascending vertex tuples); the
   face closure is expanded on construction. */
struct SimplicialComplex {
    std::vector<std::vector<int>> facets;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim] -> sorted list
    std::string label;

    static SimplicialComplex from_facets(std::vector<std::vector<int>> facets,
                                         std::string label = "complex");
    static SimplicialComplex parse(std::istream& is, std::string label = "file");

    int dimension() const { return static_cast<int>(simplices.size()) - 1; }
    int count(int dim) const {
        return dim >= 0 && dim <= dimension() ? static_cast<int>(simplices[dim].size()) : 0;
    }
    long euler_characteristic() const;  // alternating simplex count
    SimplicialComplex suspension() const;
    int find(const std::vector<int>& simplex) const;  // ordinal within its dimension, -1 absent
};

// Built-in complexes: boundary_delta(k), circle, rp2, moore(2,2) (suspended rp2).
SimplicialComplex builtin_complex(const std::string& name);

/* Normalized simplicial cochains as a DGAlgebra: coboundary differential,
   front/back cup product, Steenrod interval cup-one.  Works over any RingTag.
   The sign of the cup-one interval term is (-1)^{(i+1)(q+1)+pq}; both cup-one
   identities hold exactly with this choice and are enforced by the invariant
   suite. */
DGAlgebra cochain_algebra(const SimplicialComplex& k, RingTag ring);

/* Formal DGA presets over the integers:
     sphere(n) | exterior(n)      one generator, square zero
     truncated_poly(n, h)         x^h = 0
     moore(p, n)                  du = p v, square zero, trivial cup-one
     wedge_of_spheres(n1, n2, ..) square-zero generators
     tensor(a, b)                 graded tensor product (no cup-one)
   Nested syntax is parsed recursively, e.g. tensor(truncated_poly(2,2),exterior(3)). */
DGAlgebra preset(const std::string& spec);

}  // namespace dgc
