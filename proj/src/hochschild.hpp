#pragma once

#include "bar.hpp"

namespace dgc {

/* Degree-truncated Hochschild complex of a DGAlgebra with coefficients in
   itself: words a0 (x) [a1|...|ak] with head a0 any basis element and tail a
   reduced bar word.  Total degree = deg a0 + sum(deg ai - 1); the
   differential is D = (d0 - d1) + (d_A (x) delta):
     d0(a0 (x) [a1|..]) = (-1)^{deg a0} (a0 a1) (x) [a2|..]
     d1(a0 (x) [..|ak]) = (-1)^{(deg ak + 1)(deg a0 +..+ deg a_{k-1} + k - 1)}
                          (ak a0) (x) [..|a_{k-1}]
     (d_A (x) delta)(a0 (x) w) = d a0 (x) w + (-1)^{deg a0} a0 (x) delta w
   Safe window: N - 1, as for the bar complex. */
class HochschildComplex {
  public:
    struct HWord {
        int head;               // global index in the source
        std::vector<int> tail;  // bar letters
        bool operator<(const HWord& o) const {
            if (head != o.head) return head < o.head;
            if (tail.size() != o.tail.size()) return tail.size() < o.tail.size();
            return tail < o.tail;
        }
        bool operator==(const HWord& o) const { return head == o.head && tail == o.tail; }
    };

    HochschildComplex(const DGAlgebra& source, int truncation);

    const DGAlgebra& source() const { return src_; }
    const BarComplex& bar() const { return bar_; }
    int truncation() const { return trunc_; }
    int safe_window() const { return trunc_ - 1; }

    int dim(int degree) const;
    const std::vector<HWord>& words(int degree) const;
    int word_index(int degree, const HWord& w) const;
    int word_degree(const HWord& w) const;
    std::string word_name(const HWord& w) const;

    const SparseMatrix& D(int degree) const;
    CochainComplex complex() const;

    Elem zero_elem(int degree) const { return Elem{degree, Vec(dim(degree), 0)}; }
    Elem single_word(const HWord& w, const Int& coeff = 1) const;
    Elem apply_D(const Elem& e) const;

    // the maps of the DG algebra sequence A -> C(A) -> bar(A)
    Elem include_algebra(const Elem& a) const;   // I: a -> a (x) []
    Elem include_bar(const Elem& bar_elem) const;  // 1 (x) w
    Elem psi(const Elem& e) const;               // head augmentation, lands in bar
    SparseMatrix psi_matrix(int degree) const;
    SparseMatrix include_matrix(int degree) const;

    // shuffle product on Hochschild words; commutative sources only
    Elem shuffle(const Elem& a, const Elem& b) const;

  private:
    DGAlgebra src_;
    BarComplex bar_;
    int trunc_;
    std::vector<std::vector<HWord>> words_;
    std::vector<std::map<HWord, int>> index_;
    std::vector<SparseMatrix> d_;

    void enumerate_words();
    void build_D();
};

BettiTable free_loop_betti(const DGAlgebra& a, int truncation, int degree_hi = -1);

}  // namespace dgc
