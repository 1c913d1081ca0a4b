#pragma once

#include "smith.hpp"

#include <string>

namespace dgc {

struct GradedBasis {
    std::vector<std::vector<std::string>> names;  // index = degree

    int top_degree() const { return static_cast<int>(names.size()) - 1; }
    int dim(int degree) const {
        if (degree < 0 || degree > top_degree()) return 0;
        return static_cast<int>(names[degree].size());
    }
    // Returns the ordinal of the new element within its degree.
    int add(int degree, const std::string& name);
    int find(int degree, const std::string& name) const;  // -1 when absent
};

struct BettiTable {
    RingTag ring;
    int truncation = 0;
    int safe_window = 0;  // dimensions are exact for degrees <= safe_window
    std::string source;
    std::vector<int> dims;  // index = degree, 0..safe_window

    int dim(int degree) const {
        return degree >= 0 && degree < static_cast<int>(dims.size()) ? dims[degree] : 0;
    }
    bool operator==(const BettiTable& o) const { return ring == o.ring && dims == o.dims; }
};

// Convolution (Kunneth) of two tables over a common field.
BettiTable convolve(const BettiTable& a, const BettiTable& b);

/* A finite cochain complex: dims per degree and differentials
   d[n] : C^n -> C^{n+1}.  Degrees outside [0, top] are zero. */
struct CochainComplex {
    RingTag ring;
    std::vector<int> dims;
    std::vector<SparseMatrix> d;  // d.size() == dims.size(); top one maps to 0

    int top() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int n) const { return n >= 0 && n <= top() ? dims[n] : 0; }
    const SparseMatrix& diff(int n) const;
    SparseMatrix incoming(int n) const;  // d[n-1], shaped correctly at the edges

    void validate_shapes() const;
    void check_d_squared() const;  // exact; reports the offending entry

    SubquotientBasis cohomology_at(int n) const;  // field coefficients
    BettiTable betti(int lo, int hi, const std::string& source) const;
    CochainComplex reduced(RingTag target) const;
    IntegralCohomology integral_at(int n) const;  // Integer coefficients
};

/* Universal-coefficient splitting H^n(F_p) = H0^n + H1^n of the reduction of
   an integral complex, with bounding witnesses d bhat = p^eps ahat for every
   H1 generator. */
struct UCTWitness {
    Vec bhat;  // degree n over Z
    Vec ahat;  // degree n+1 over Z
    int eps = 1;
};

struct UCTSplitDegree {
    int degree = 0;
    std::vector<Vec> h0_reps;  // mod-p cocycles
    std::vector<Vec> h1_reps;  // red_p(bhat)
    std::vector<UCTWitness> witnesses;
};

struct UCTSplit {
    long p = 0;
    std::vector<UCTSplitDegree> degrees;
    const UCTSplitDegree& at(int n) const;
};

UCTSplit uct_split(const CochainComplex& integral, long p, int lo, int hi);

/* Bockstein of the short exact sequence 0 -> Z/p^e -> Z/p^2e -> Z/p^e -> 0:
   lift a degree-n cocycle over Z/p^eps through the integral differential,
   divide by p^eps, reduce.  Returns a degree n+1 cocycle over Z/p^eps. */
Vec bockstein(const CochainComplex& integral, long p, int eps, int degree, const Vec& z);

// Class-vanishing test over any supported ring: is z a coboundary in degree n?
bool is_coboundary(const CochainComplex& c, int degree, const Vec& z);

// Cocycle test in degree n over the complex's own ring.
bool is_cocycle(const CochainComplex& c, int degree, const Vec& z);

}  // namespace dgc
