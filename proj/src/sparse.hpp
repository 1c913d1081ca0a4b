#pragma once

#include "ring.hpp"

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace dgc {

using Vec = std::vector<Int>;

bool vec_is_zero(const Vec& v);

/* Exact sparse matrix over a RingTag.  Entries are kept normalized and
   nonzero; values are immutable in spirit: build, then share. */
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    RingTag ring;
    std::map<std::pair<int, int>, Int> entries;

    SparseMatrix() = default;
    SparseMatrix(int r, int c, RingTag rg) : rows(r), cols(c), ring(rg) {}

    static SparseMatrix identity(int n, RingTag rg);
    static SparseMatrix from_columns(int rows, const std::vector<Vec>& cols, RingTag rg);

    void set(int r, int c, const Int& v);
    void add_to(int r, int c, const Int& v);
    Int get(int r, int c) const;
    bool is_zero() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }

    Vec column(int j) const;
    Vec apply(const Vec& x) const;           // this * x
    Vec apply_transpose(const Vec& x) const; // this^T * x
    SparseMatrix times(const SparseMatrix& o) const;
    SparseMatrix transpose() const;
    SparseMatrix scaled(const Int& c) const;
    SparseMatrix plus(const SparseMatrix& o) const;
    SparseMatrix reduced(RingTag target) const;  // entry-wise base change

    bool operator==(const SparseMatrix& o) const;
};

struct RankKernelImage {
    int rank = 0;
    std::vector<Vec> kernel;  // basis of ker(m) in the source
    std::vector<Vec> image;   // echelon basis of the column space
};

// Field-only column elimination; deterministic pivots (lowest row index).
RankKernelImage rank_kernel_image(const SparseMatrix& m);

struct SolveResult {
    bool solvable = false;
    Vec solution;                 // m * solution == b when solvable
    Vec obstruction;              // canonical residual of b modulo im(m)
    Vec functional;               // field case: f^T m == 0, <f, b> != 0
    std::vector<Int> snf_residues;  // integer case: cokernel coordinates of b
};

// Works over F_p (elimination), Z (Smith form), and Z/p^eps (lift to Z).
SolveResult solve(const SparseMatrix& m, const Vec& b);

struct SubquotientBasis {
    int ambient = 0;
    std::vector<Vec> cycles;
    std::vector<Vec> boundaries;
    std::vector<Vec> representatives;  // independent modulo boundaries
    int dimension() const { return static_cast<int>(representatives.size()); }
};

// Homology of  src --d_in--> mid --d_out--> dst  at mid; field coefficients.
// Requires d_out * d_in == 0 exactly (reports the offending entry otherwise).
SubquotientBasis homology(const SparseMatrix& d_in, const SparseMatrix& d_out);

/* Incremental column echelon over a field: supports membership tests and
   deterministic coset representatives. */
class ColumnEchelon {
  public:
    explicit ColumnEchelon(RingTag rg) : ring_(rg) {}
    // Reduces v against the stored columns; returns the residual.
    Vec reduce(Vec v) const;
    // Reduce, and if the residual is nonzero normalize and keep it.
    // Returns true when the column enlarged the span.
    bool insert(Vec v);
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
    int rank() const { return static_cast<int>(pivots_.size()); }

  private:
    RingTag ring_;
    std::map<int, Vec> pivots_;  // pivot row -> column normalized to 1 there
};

// Text interchange: header "rows cols ring", then one "row col value" per line.
void write_matrix(std::ostream& os, const SparseMatrix& m);
SparseMatrix read_matrix(std::istream& is);

}  // namespace dgc
