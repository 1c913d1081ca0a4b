#pragma once

#include "graded.hpp"

#include <memory>
#include <tuple>

namespace dgc {

/* Homogeneous element of a graded object: coefficients over the basis of one
   degree. */
struct Elem {
    int degree = 0;
    Vec coeffs;
    bool zero() const { return vec_is_zero(coeffs); }
    bool operator==(const Elem& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

using SparseElem = std::map<int, Int>;  // global basis index -> coefficient

/* Finite DG algebra over a RingTag: graded basis, degree +1 differential,
   sparse product table, unit, augmentation, optional cup-one table.
   Immutable after finalize(); everything downstream shares by const ref. */
struct DGAlgebra {
    RingTag ring;
    GradedBasis basis;
    std::string label;
    std::vector<SparseMatrix> diffs;  // diffs[n] : A^n -> A^{n+1}
    std::map<std::pair<int, int>, SparseElem> product_table;
    bool has_cup1 = false;
    std::map<std::pair<int, int>, SparseElem> cup1_table;
    Vec unit;     // element of A^0
    Vec augment;  // functional on A^0
    std::shared_ptr<const DGAlgebra> integral_parent;  // set by base_change
    std::string reduction_kind;                        // "red_p" or "red_p^eps"

    std::vector<int> offsets;
    int total_dim = 0;

    void finalize();  // offsets, shape checks, table normalization

    int top_degree() const { return basis.top_degree(); }
    int dim(int n) const { return basis.dim(n); }
    int global(int deg, int ord) const { return offsets[deg] + ord; }
    std::pair<int, int> local(int g) const;  // (degree, ordinal)
    int degree_of(int g) const { return local(g).first; }
    const std::string& name_of(int g) const;

    Elem zero_elem(int degree) const { return Elem{degree, Vec(dim(degree), 0)}; }
    Elem basis_elem(int g) const;
    Elem unit_elem() const { return Elem{0, unit}; }
    Elem from_sparse(int degree, const SparseElem& s) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem scale(const Int& c, const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem cup1(const Elem& a, const Elem& b) const;
    Elem apply_d(const Elem& a) const;
    Int aug(const Elem& a) const;

    CochainComplex complex() const;
    bool is_connected() const;    // A^0 = span(unit) with aug(unit) = 1
    bool is_one_reduced() const;  // dim A^1 == 0
    bool graded_commutative() const;

    // Full exhaustive invariant suite (d^2, Leibniz, associativity, unit,
    // augmentation, cup-one identities when present).  Throws on violation.
    void check_invariants() const;

    DGAlgebra base_change(RingTag target) const;  // Integers -> F_p or Z/p^eps
};

// Residual of the cup-one coboundary identity on basis elements:
//   d(a u1 b) - ab + (-1)^{|a||b|} ba + (da) u1 b + (-1)^{|a|} a u1 (db)
Elem cup1_coboundary_residual(const DGAlgebra& a, int ga, int gb);

// Residual of the Hirsch identity on basis elements:
//   (ab) u1 c - (-1)^{|a|} a (b u1 c) - (-1)^{|b||c|} (a u1 c) b
Elem hirsch_residual(const DGAlgebra& a, int ga, int gb, int gc);

DGAlgebra tensor_dga(const DGAlgebra& a, const DGAlgebra& b);

/* Finite DG coalgebra: degree +1 (or zero) differential, full coproduct,
   counit, coaugmentation. */
struct DGCoalgebra {
    RingTag ring;
    GradedBasis basis;
    std::string label;
    std::vector<SparseMatrix> diffs;
    std::map<int, std::vector<std::tuple<int, int, Int>>> coproduct;  // full
    Vec counit;  // functional on degree 0
    Vec coaug;   // element of degree 0
    // Degree-truncated coalgebras (bar constructions) store a cut-off
    // differential; degrees >= this bound are excluded from the co-Leibniz
    // check.  Negative means the differential is complete everywhere.
    int diff_complete_below = -1;

    std::vector<int> offsets;
    int total_dim = 0;

    void finalize();
    int top_degree() const { return basis.top_degree(); }
    int dim(int n) const { return basis.dim(n); }
    int global(int deg, int ord) const { return offsets[deg] + ord; }
    std::pair<int, int> local(int g) const;

    bool differential_is_zero() const;
    // Reduced coproduct of a basis element (both tensor factors positive degree).
    std::vector<std::tuple<int, int, Int>> reduced_coproduct(int g) const;

    void check_invariants() const;  // d^2, coassociativity, counit, co-Leibniz,
                                    // degree-wise conilpotence witness
};

// Dual coalgebra of a finite zero-differential algebra (homology coalgebra of
// a formal model).
DGCoalgebra dual_coalgebra(const DGAlgebra& a);

}  // namespace dgc
