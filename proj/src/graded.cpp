#include "graded.hpp"

namespace dgc {

int GradedBasis::add(int degree, const std::string& name) {
    require(degree >= 0, errc::input, "basis degrees must be nonnegative");
    if (degree >= static_cast<int>(names.size())) names.resize(degree + 1);
    require(find(degree, name) < 0, errc::input,
            "duplicate basis name '" + name + "' in degree " + std::to_string(degree));
    names[degree].push_back(name);
    return static_cast<int>(names[degree].size()) - 1;
}

int GradedBasis::find(int degree, const std::string& name) const {
    if (degree < 0 || degree > top_degree()) return -1;
    for (int i = 0; i < dim(degree); ++i)
        if (names[degree][i] == name) return i;
    return -1;
}

BettiTable convolve(const BettiTable& a, const BettiTable& b) {
    require(a.ring == b.ring, errc::input, "convolve: ring mismatch");
    BettiTable out;
    out.ring = a.ring;
    out.truncation = std::min(a.truncation, b.truncation);
    out.safe_window = std::min(a.safe_window, b.safe_window);
    out.source = a.source + "*" + b.source;
    out.dims.assign(out.safe_window + 1, 0);
    for (int n = 0; n <= out.safe_window; ++n)
        for (int i = 0; i <= n; ++i) out.dims[n] += a.dim(i) * b.dim(n - i);
    return out;
}

const SparseMatrix& CochainComplex::diff(int n) const {
    static const SparseMatrix empty;
    if (n < 0 || n > top()) {
        // zero map with conventional shape; callers use incoming()/diff with
        // in-range n for anything shape-sensitive
        return empty;
    }
    return d[n];
}

SparseMatrix CochainComplex::incoming(int n) const {
    if (n >= 1 && n <= top()) return d[n - 1];
    return SparseMatrix(dim(n), 0, ring);
}

void CochainComplex::validate_shapes() const {
    require(dims.size() == d.size(), errc::input, "complex: dims/differential length mismatch");
    for (int n = 0; n <= top(); ++n) {
        require(d[n].cols == dims[n], errc::input, "complex: differential source mismatch");
        int target = n + 1 <= top() ? dims[n + 1] : 0;
        require(d[n].rows == target, errc::input, "complex: differential target mismatch");
        require(d[n].ring == ring, errc::input, "complex: ring mismatch");
    }
}

void CochainComplex::check_d_squared() const {
    for (int n = 0; n + 1 <= top(); ++n) {
        SparseMatrix sq = d[n + 1].times(d[n]);
        if (!sq.is_zero()) {
            auto [rc, val] = *sq.entries.begin();
            throw error(errc::invariant, "d^2 != 0 in degree " + std::to_string(n) + ": entry [" +
                                             std::to_string(rc.first) + "][" +
                                             std::to_string(rc.second) + "] = " + val.get_str());
        }
    }
}

SubquotientBasis CochainComplex::cohomology_at(int n) const {
    require(ring.is_field(), errc::input, "cohomology dimensions require field coefficients");
    if (n < 0 || n > top()) return SubquotientBasis{};
    SparseMatrix dout = n <= top() ? d[n] : SparseMatrix(0, dim(n), ring);
    return homology(incoming(n), dout);
}

BettiTable CochainComplex::betti(int lo, int hi, const std::string& source) const {
    require(lo >= 0 && hi >= lo, errc::input, "betti: bad degree range");
    BettiTable t;
    t.ring = ring;
    t.truncation = top();
    t.safe_window = hi;
    t.source = source;
    t.dims.assign(hi + 1, 0);
    for (int n = lo; n <= hi; ++n) t.dims[n] = cohomology_at(n).dimension();
    return t;
}

CochainComplex CochainComplex::reduced(RingTag target) const {
    CochainComplex out;
    out.ring = target;
    out.dims = dims;
    out.d.reserve(d.size());
    for (const auto& m : d) out.d.push_back(m.reduced(target));
    return out;
}

IntegralCohomology CochainComplex::integral_at(int n) const {
    require(ring.is_integers(), errc::input, "integral_at requires Integer coefficients");
    if (n < 0 || n > top()) return IntegralCohomology{};
    SparseMatrix dout = d[n];
    return integral_cohomology(incoming(n), dout);
}

const UCTSplitDegree& UCTSplit::at(int n) const {
    for (const auto& deg : degrees)
        if (deg.degree == n) return deg;
    throw error(errc::input, "uct_split: degree " + std::to_string(n) + " not computed");
}

UCTSplit uct_split(const CochainComplex& integral, long p, int lo, int hi) {
    require(integral.ring.is_integers(), errc::input, "uct_split requires an integral complex");
    require(is_prime(p), errc::input, "uct_split requires a prime");
    UCTSplit out;
    out.p = p;
    RingTag fp = RingTag::prime_field(p);
    CochainComplex modp = integral.reduced(fp);
    for (int n = lo; n <= hi; ++n) {
        UCTSplitDegree deg;
        deg.degree = n;
        IntegralCohomology here = integral.integral_at(n);
        // H0 = red_p of a minimal integral generating set (free part plus the
        // p-torsion generators of this degree)
        for (const auto& f : here.free_reps) {
            Vec r(f);
            for (auto& x : r) x = fp.normalize(x);
            deg.h0_reps.push_back(std::move(r));
        }
        for (std::size_t t = 0; t < here.torsion_orders.size(); ++t) {
            if (!mpz_divisible_ui_p(here.torsion_orders[t].get_mpz_t(),
                                    static_cast<unsigned long>(p)))
                continue;
            Vec r(here.torsion_reps[t]);
            for (auto& x : r) x = fp.normalize(x);
            deg.h0_reps.push_back(std::move(r));
        }
        // H1 = suspended p-torsion of degree n+1, with SNF witnesses
        if (n + 1 <= integral.top()) {
            IntegralCohomology up = integral.integral_at(n + 1);
            for (std::size_t t = 0; t < up.torsion_orders.size(); ++t) {
                int eps = p_valuation(up.torsion_orders[t], p);
                if (eps == 0) continue;
                Int pe;
                mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(eps));
                Int m = up.torsion_orders[t] / pe;
                UCTWitness w;
                w.eps = eps;
                w.bhat = up.bounding[t];
                w.ahat = up.torsion_reps[t];
                for (auto& x : w.ahat) x *= m;
                // replay: d bhat == p^eps * ahat
                Vec lhs = integral.diff(n).apply(w.bhat);
                Vec rhs = w.ahat;
                for (auto& x : rhs) x *= pe;
                require(lhs == rhs, errc::invariant, "uct_split witness replay failed");
                Vec r(w.bhat);
                for (auto& x : r) x = fp.normalize(x);
                deg.h1_reps.push_back(std::move(r));
                deg.witnesses.push_back(std::move(w));
            }
        }
        // consistency: dim H^n(F_p) == |H0| + |H1|, and the chosen
        // representatives are independent modulo coboundaries
        int direct = modp.cohomology_at(n).dimension();
        require(direct == static_cast<int>(deg.h0_reps.size() + deg.h1_reps.size()),
                errc::invariant,
                "uct_split dimension mismatch in degree " + std::to_string(n) + ": direct " +
                    std::to_string(direct) + " vs split " +
                    std::to_string(deg.h0_reps.size() + deg.h1_reps.size()));
        {
            ColumnEchelon ech(fp);
            SparseMatrix din = modp.incoming(n);
            for (int j = 0; j < din.cols; ++j) ech.insert(din.column(j));
            for (const auto& r : deg.h0_reps)
                require(ech.insert(r), errc::invariant,
                        "uct_split: H0 representatives dependent in degree " + std::to_string(n));
            for (const auto& r : deg.h1_reps)
                require(ech.insert(r), errc::invariant,
                        "uct_split: H1 representatives dependent in degree " + std::to_string(n));
        }
        out.degrees.push_back(std::move(deg));
    }
    return out;
}

Vec bockstein(const CochainComplex& integral, long p, int eps, int degree, const Vec& z) {
    require(integral.ring.is_integers(), errc::input, "bockstein requires the integral complex");
    require(eps >= 1, errc::input, "bockstein requires eps >= 1");
    RingTag re = RingTag::cyclic(p, eps);
    Int pe = re.modulus();
    require(static_cast<int>(z.size()) == integral.dim(degree), errc::input,
            "bockstein: dimension mismatch");
    if (degree >= integral.top()) return Vec(integral.dim(degree + 1), 0);
    Vec w = integral.diff(degree).apply(z);  // integer lift of the representative
    Vec out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        require(mpz_divisible_p(w[i].get_mpz_t(), pe.get_mpz_t()), errc::input,
                "bockstein input is not a cocycle mod p^eps");
        out[i] = re.normalize(w[i] / pe);
    }
    return out;
}

bool is_coboundary(const CochainComplex& c, int degree, const Vec& z) {
    if (vec_is_zero(z)) return true;
    SparseMatrix din = c.incoming(degree);
    return solve(din, z).solvable;
}

bool is_cocycle(const CochainComplex& c, int degree, const Vec& z) {
    if (degree >= c.top()) return true;
    return vec_is_zero(c.diff(degree).apply(z));
}

}  // namespace dgc
