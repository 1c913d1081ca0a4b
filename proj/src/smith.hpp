#pragma once

#include "sparse.hpp"

namespace dgc {

/* Smith normal form of an integer matrix: left * A * right is diagonal with
   d1 | d2 | ... (nonnegative, trailing zeros).  The transforms and their
   inverses are unimodular by construction; left*A*right == diag is re-checked
   exactly before returning. */
struct SmithForm {
    std::vector<Int> diag;  // length min(rows, cols)
    SparseMatrix left, right, left_inv, right_inv;

    SparseMatrix diagonal_matrix(int rows, int cols) const;
};

SmithForm smith_normal_form(const SparseMatrix& a);

// Exact solve of a x = b over Z via the Smith form.  On failure the
// certificate stores the cokernel coordinates of b (residues against the
// diagonal), which downstream obstruction bookkeeping consumes.
SolveResult solve_integer(const SparseMatrix& a, const Vec& b);

/* Cohomology of  prev --d_in--> here --d_out--> next  over Z, as a finitely
   generated abelian group with chosen cocycle representatives.
   For each torsion generator t_i of order s_i, bounding[i] in the previous
   degree satisfies  d_in * bounding[i] == s_i * torsion_reps[i]  exactly. */
struct IntegralCohomology {
    int ambient = 0;
    int free_rank = 0;
    std::vector<Vec> free_reps;
    std::vector<Int> torsion_orders;  // each >= 2, divisibility chain order
    std::vector<Vec> torsion_reps;
    std::vector<Vec> bounding;

    // internals kept for class computations
    SparseMatrix kernel_matrix;  // columns: Z-basis of the cocycle lattice
    SparseMatrix lx;             // change of basis aligning im(d_in) with diag_full
    std::vector<Int> diag_full;  // invariant factors per kernel column (0 = free)

    // order of the class of a cocycle z: 0 = infinite, 1 = trivial, else n
    // with n*cls(z) = 0 minimal.
    Int class_order(const Vec& z) const;
};

IntegralCohomology integral_cohomology(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace dgc
