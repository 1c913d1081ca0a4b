#pragma once

#include "bar.hpp"

namespace dgc {

/* Grading variance of the cobar construction.  The desuspension shifts letter
   degrees by -1 on chain-type (homology) coalgebras and by +1 on cochain-type
   coalgebras such as a bar construction; one fixed shift cannot serve both
   (the splitting differential would be inhomogeneous), so the caller picks
   the variance of its input.
     cochain: letter degree = deg c + 1, differential degree +1
     chain:   letter degree = deg c - 1, differential degree -1,
              zero-differential input only (homology coalgebras) */
enum class CobarVariance { cochain, chain };

class CobarComplex {
  public:
    CobarComplex(const DGCoalgebra& c, int truncation, CobarVariance variance);

    const DGCoalgebra& source() const { return src_; }
    int truncation() const { return trunc_; }
    int safe_window() const { return trunc_ - 1; }
    CobarVariance variance() const { return variance_; }
    int direction() const { return variance_ == CobarVariance::cochain ? +1 : -1; }

    int dim(int degree) const;
    const std::vector<std::vector<int>>& words(int degree) const;
    int word_index(int degree, const std::vector<int>& w) const;
    int letter_degree(int g) const;  // cobar degree of one letter
    int word_degree(const std::vector<int>& w) const;

    // differential in degree n maps to degree n + direction()
    const SparseMatrix& diff(int degree) const;
    void check_d_squared() const;

    SubquotientBasis homology_at(int degree) const;
    BettiTable betti(int lo, int hi, const std::string& source_label) const;
    CochainComplex complex() const;  // cochain variance only

  private:
    DGCoalgebra src_;
    int trunc_;
    CobarVariance variance_;
    std::vector<int> letters_;
    std::vector<std::vector<std::vector<int>>> words_;
    std::vector<std::map<std::vector<int>, int>> index_;
    std::vector<SparseMatrix> diff_;

    void enumerate_words();
    void build_diff();
};

/* The adjunction counit of bar -| cobar on the truncated complexes:
   <[a]> -> a, <[a1|...|an]> -> 0 for n != 1, extended multiplicatively.
   Built as one matrix per degree; chain-map and algebra-map facts are
   checkable (and tested) exactly. */
struct CounitAlpha {
    std::vector<SparseMatrix> per_degree;  // cobar degree n -> A^n
    // rank of the induced map on cohomology per degree, filled by verify
    bool is_chain_map = false;
};

CounitAlpha counit_alpha(const CobarComplex& cobar_of_bar, const BarComplex& bar);

}  // namespace dgc
