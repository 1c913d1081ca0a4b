#include "doctest.h"
#include "graded.hpp"
#include "simplicial.hpp"

#include <random>

using namespace dgc;

TEST_CASE("cohomology of zero-differential and two-term complexes") {
    auto f5 = RingTag::prime_field(5);

    // exterior algebra on one degree-3 generator, d = 0: Betti 1,0,0,1
    auto lam = preset("exterior(3)").base_change(f5);
    auto betti = lam.complex().betti(0, 3, "space");
    CHECK(betti.dims == std::vector<int>{1, 0, 0, 1});

    // integral two-term complex Z u2 --(*p)--> Z v3 reduced mod p
    auto moore = preset("moore(5,2)").base_change(f5);
    auto mb = moore.complex().betti(0, 3, "space");
    CHECK(mb.dims == std::vector<int>{1, 0, 1, 1});

    // not reduced: over F_7 the differential is invertible in degree 2
    auto m7 = preset("moore(5,2)").base_change(RingTag::prime_field(7));
    auto mb7 = m7.complex().betti(0, 3, "space");
    CHECK(mb7.dims == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("cohomology rejects inconsistent differentials") {
    CochainComplex c;
    c.ring = RingTag::prime_field(3);
    c.dims = {1, 1, 1};
    c.d.resize(3);
    c.d[0] = SparseMatrix(1, 1, c.ring);
    c.d[0].set(0, 0, 1);
    c.d[1] = SparseMatrix(1, 1, c.ring);
    c.d[1].set(0, 0, 1);
    c.d[2] = SparseMatrix(0, 1, c.ring);
    c.validate_shapes();
    CHECK_THROWS_AS(c.check_d_squared(), error);
    CHECK_THROWS_AS(c.cohomology_at(1), error);
}

TEST_CASE("uct_split on the stated examples") {
    // torsion-free: H1 = 0 everywhere
    auto lam = preset("exterior(3)");
    auto split = uct_split(lam.complex(), 3, 0, 3);
    for (const auto& deg : split.degrees) CHECK(deg.h1_reps.empty());

    // Moore model du2 = p v3: H1^2 is one-dimensional with witness (u, v, 1)
    auto moore = preset("moore(3,2)");
    auto ms = uct_split(moore.complex(), 3, 0, 3);
    const auto& d2 = ms.at(2);
    REQUIRE(d2.h1_reps.size() == 1);
    CHECK(d2.h0_reps.empty());
    REQUIRE(d2.witnesses.size() == 1);
    CHECK(d2.witnesses[0].eps == 1);
    CHECK(d2.witnesses[0].bhat == Vec{1});  // u
    CHECK(d2.witnesses[0].ahat == Vec{1});  // v
    const auto& d3 = ms.at(3);
    CHECK(d3.h0_reps.size() == 1);  // red_p of the torsion class of H^3(Z)
    CHECK(d3.h1_reps.empty());

    // a prime q not dividing any torsion order: H1 = 0
    auto qs = uct_split(moore.complex(), 5, 0, 3);
    for (const auto& deg : qs.degrees) CHECK(deg.h1_reps.empty());
}

TEST_CASE("uct dimension consistency on simplicial complexes") {
    for (const char* name : {"rp2", "moore(2,2)", "boundary_delta(3)"}) {
        auto A = cochain_algebra(builtin_complex(name), RingTag::integers());
        for (long p : {2L, 3L}) {
            // uct_split internally requires dim H^n(F_p) == |H0| + |H1|
            CHECK_NOTHROW(uct_split(A.complex(), p, 0, A.top_degree()));
        }
    }
}

TEST_CASE("bockstein on the Moore model") {
    auto moore = preset("moore(3,2)");
    auto cx = moore.complex();
    // beta_1(cls red_p u) = cls red_p v
    Vec u{1};
    Vec b = bockstein(cx, 3, 1, 2, u);
    CHECK(b == Vec{1});  // v

    // beta_eps of a cocycle on a torsion-free algebra is zero
    auto lam = preset("exterior(3)").complex();
    Vec x{1};
    CHECK(vec_is_zero(bockstein(lam, 3, 1, 3, x)));

    // beta_1 of a non-cocycle is rejected
    CHECK_THROWS_AS(bockstein(cx, 3, 2, 2, u), error);  // du = 3v != 0 mod 9
}

TEST_CASE("uct witnesses satisfy the Bockstein equivalence") {
    // for each H1 witness (bhat, ahat, eps): beta_eps(cls red_{p^eps} bhat)
    // equals cls red_{p^eps} ahat
    struct Case {
        DGAlgebra az;
        long p;
    };
    std::vector<Case> cases;
    cases.push_back({preset("moore(3,2)"), 3});
    cases.push_back({preset("moore(2,2)"), 2});
    cases.push_back({cochain_algebra(builtin_complex("moore(2,2)"), RingTag::integers()), 2});
    for (auto& c : cases) {
        auto cx = c.az.complex();
        auto split = uct_split(cx, c.p, 0, c.az.top_degree());
        int checked = 0;
        for (const auto& deg : split.degrees)
            for (const auto& w : deg.witnesses) {
                RingTag re = RingTag::cyclic(c.p, w.eps);
                Vec b(w.bhat);
                for (auto& x : b) x = re.normalize(x);
                Vec beta = bockstein(cx, c.p, w.eps, deg.degree, b);
                // class equality over Z/p^eps: the difference bounds
                Vec diff(beta.size());
                for (std::size_t i = 0; i < beta.size(); ++i)
                    diff[i] = re.normalize(beta[i] - w.ahat[i]);
                auto reduced = cx.reduced(re);
                CHECK(is_coboundary(reduced, deg.degree + 1, diff));
                ++checked;
            }
        CHECK(checked > 0);
    }
}

TEST_CASE("bockstein squares to zero") {
    // direct sums of chains d u = p^a v over random a, eps; every cocycle
    // class has beta(beta) = 0
    std::mt19937 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        long p = 3;
        int eps = 1 + static_cast<int>(rng() % 2);
        int chains = 1 + static_cast<int>(rng() % 3);
        CochainComplex c;
        c.ring = RingTag::integers();
        c.dims = {chains, chains, chains};
        c.d.resize(3);
        c.d[0] = SparseMatrix(chains, chains, c.ring);
        c.d[1] = SparseMatrix(chains, chains, c.ring);
        c.d[2] = SparseMatrix(0, chains, c.ring);
        Int pe = 1;
        for (int i = 0; i < eps; ++i) pe *= p;
        for (int i = 0; i < chains; ++i) {
            int a = eps + static_cast<int>(rng() % 2);  // valuation >= eps
            Int coeff = 1;
            for (int j = 0; j < a; ++j) coeff *= p;
            c.d[0].set(i, i, coeff);
        }
        c.validate_shapes();
        for (int i = 0; i < chains; ++i) {
            Vec z(chains, 0);
            z[i] = 1;
            Vec b1 = bockstein(c, p, eps, 0, z);
            Vec b2 = bockstein(c, p, eps, 1, b1);
            CHECK(vec_is_zero(b2));
        }
    }
}

TEST_CASE("base_change reduces tables compatibly") {
    auto moore = preset("moore(3,2)");
    auto f3 = RingTag::prime_field(3);
    auto red = moore.base_change(f3);
    CHECK(red.reduction_kind == "red_p");
    REQUIRE(red.integral_parent != nullptr);

    // differential becomes zero mod p
    CHECK(red.diffs[2].is_zero());
    // mod p^2 the entry p survives
    auto red9 = moore.base_change(RingTag::cyclic(3, 2));
    CHECK(red9.reduction_kind == "red_p^eps");
    CHECK(red9.diffs[2].get(0, 0) == 3);

    // red_p(xy) == red_p(x) red_p(y) on all basis pairs, for a preset with
    // nontrivial products
    auto tp = preset("truncated_poly(2,3)");
    auto tpr = tp.base_change(f3);
    for (int ga = 0; ga < tp.total_dim; ++ga)
        for (int gb = 0; gb < tp.total_dim; ++gb) {
            Elem prod = tp.mul(tp.basis_elem(ga), tp.basis_elem(gb));
            Elem lhs{prod.degree, prod.coeffs};
            for (auto& x : lhs.coeffs) x = f3.normalize(x);
            Elem rhs = tpr.mul(tpr.basis_elem(ga), tpr.basis_elem(gb));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("betti table convolution") {
    BettiTable a, b;
    a.ring = b.ring = RingTag::prime_field(2);
    a.truncation = b.truncation = 10;
    a.safe_window = b.safe_window = 4;
    a.dims = {1, 0, 1, 0, 1};
    b.dims = {1, 0, 0, 1, 0};
    auto c = convolve(a, b);
    CHECK(c.dims == std::vector<int>{1, 0, 1, 1, 1});
}
