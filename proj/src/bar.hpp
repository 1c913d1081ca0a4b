#pragma once

#include "dga.hpp"

namespace dgc {

/* Degree-truncated reduced bar construction of a connected DGAlgebra with
   vanishing degree-1 part.  Words are lists of positive-degree basis indices
   of the source; the degree of [a1|...|ak] is sum(deg ai - 1).  All words of
   degree <= truncation are enumerated, ordered by (length, letter indices),
   so every matrix and basis is reproducible.

   The differential is delta' + delta'' of the Adams bar construction:
     delta'[..|ai|..]  = -sum_i (-1)^{eps_i} [..|d ai|..]
     delta''[..|ai|..] =  sum_i (-1)^{eps_i} [..|a_{i-1} ai|..]
   with eps_i the sum of the suspended degrees of the letters before i.

   Homology in degree n is unaffected by the truncation whenever n+1 <= N
   (all words of the neighboring degrees are present), so the safe window is
   N - 1. */
class BarComplex {
  public:
    BarComplex(const DGAlgebra& source, int truncation);

    const DGAlgebra& source() const { return src_; }
    int truncation() const { return trunc_; }
    int safe_window() const { return trunc_ - 1; }

    int dim(int degree) const;
    const std::vector<std::vector<int>>& words(int degree) const;
    int word_index(int degree, const std::vector<int>& w) const;  // -1 absent
    int word_degree(const std::vector<int>& w) const;
    std::string word_name(const std::vector<int>& w) const;

    const SparseMatrix& delta(int degree) const;  // degree -> degree+1
    CochainComplex complex() const;

    Elem zero_elem(int degree) const;
    Elem single_word(const std::vector<int>& w, const Int& coeff = 1) const;
    Elem apply_delta(const Elem& e) const;

    // Reduced coproduct of a homogeneous element, as a sparse map
    // (degree1, idx1, degree2, idx2) -> coeff.
    using TensorElem = std::map<std::tuple<int, int, int, int>, Int>;
    TensorElem reduced_coproduct(const Elem& e) const;

    // Signed shuffle product; requires a graded-commutative source.
    Elem shuffle(const Elem& a, const Elem& b) const;

    // Is the class of a delta-cocycle nonzero?  Exact rank test against the
    // image of delta from the previous degree.
    bool class_nonzero(const Elem& cocycle) const;

    DGCoalgebra as_coalgebra() const;  // truncated bar as a DG coalgebra

  private:
    DGAlgebra src_;
    int trunc_;
    std::vector<int> letters_;                          // global indices, degree >= 2
    std::vector<std::vector<std::vector<int>>> words_;  // per degree
    std::vector<std::map<std::vector<int>, int>> index_;
    std::vector<SparseMatrix> delta_;

    int suspended(int letter) const { return src_.degree_of(letter) - 1; }
    void enumerate_words();
    void build_delta();
};

struct SuspensionResult {
    Elem bar_class;  // representative [a] in the bar complex
    bool nonzero = false;
    bool primitive = false;
};

// Cohomology loop suspension of a class with chosen representative cocycle.
SuspensionResult loop_suspension(const BarComplex& bar, const Elem& representative);

// Loop-space Betti table H^n(Bbar A) for n <= window (degrees above the safe
// window raise a window error).
BettiTable loop_betti(const DGAlgebra& a, int truncation, int degree_hi = -1);

// Shared precondition gate for bar-type constructions.
void require_bar_input(const DGAlgebra& a);

}  // namespace dgc
