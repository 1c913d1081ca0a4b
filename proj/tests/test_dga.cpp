#include "doctest.h"
#include "simplicial.hpp"

using namespace dgc;

TEST_CASE("presets pass the full invariant suite") {
    for (const char* name :
         {"sphere(2)", "sphere(3)", "exterior(5)", "moore(2,2)", "moore(3,2)", "moore(5,3)",
          "truncated_poly(2,2)", "truncated_poly(2,4)", "wedge_of_spheres(2,3)",
          "tensor(truncated_poly(2,2),exterior(3))",
          "tensor(moore(3,2),sphere(4))"}) {
        auto A = preset(name);
        CAPTURE(name);
        CHECK_NOTHROW(A.check_invariants());
        CHECK(A.is_connected());
        CHECK(A.graded_commutative());
        auto Ap = A.base_change(RingTag::prime_field(3));
        CHECK_NOTHROW(Ap.check_invariants());
    }
    CHECK_THROWS_AS(preset("banana(2)"), error);
    CHECK_THROWS_AS(preset("sphere(1)"), error);
}

TEST_CASE("preset shapes match their contracts") {
    auto s3 = preset("sphere(3)").base_change(RingTag::prime_field(5));
    CHECK(s3.dim(0) == 1);
    CHECK(s3.dim(3) == 1);
    CHECK(s3.total_dim == 2);
    // all positive-degree products vanish
    int x = s3.global(3, 0);
    CHECK(s3.mul(s3.basis_elem(x), s3.basis_elem(x)).zero());

    auto moore = preset("moore(3,2)").base_change(RingTag::prime_field(3));
    CHECK(moore.diffs[2].is_zero());  // p == 0 mod p
    auto betti = moore.complex().betti(0, 3, "space");
    CHECK(betti.dims == std::vector<int>{1, 0, 1, 1});
}

TEST_CASE("tensor product satisfies Kunneth") {
    auto f5 = RingTag::prime_field(5);
    // model of S^2 x S^3: Betti (1,0,1,1,0,1) in degrees 0..5
    auto t = preset("tensor(truncated_poly(2,2),sphere(3))").base_change(f5);
    auto betti = t.complex().betti(0, 5, "space");
    CHECK(betti.dims == std::vector<int>{1, 0, 1, 1, 0, 1});

    // Kunneth as convolution, for a pair with torsion at p
    auto f3 = RingTag::prime_field(3);
    auto a = preset("moore(3,2)").base_change(f3);
    auto b = preset("sphere(4)").base_change(f3);
    auto tab = preset("tensor(moore(3,2),sphere(4))").base_change(f3);
    auto conv = convolve(a.complex().betti(0, 7, "a"), b.complex().betti(0, 7, "b"));
    auto direct = tab.complex().betti(0, 7, "ab");
    CHECK(conv.dims == direct.dims);
}

TEST_CASE("tensor presets carry no cup-one") {
    auto t = preset("tensor(sphere(2),sphere(3))");
    CHECK_FALSE(t.has_cup1);
    CHECK_THROWS_AS(t.cup1(t.basis_elem(1), t.basis_elem(1)), error);
}

TEST_CASE("dual coalgebras pass their invariant suite") {
    for (const char* name : {"sphere(3)", "truncated_poly(2,4)", "moore(3,2)",
                             "tensor(truncated_poly(2,2),sphere(3))"}) {
        CAPTURE(name);
        auto A = preset(name);
        if (name == std::string("moore(3,2)")) {
            // dual of the mod-p reduction (zero differential)
            auto C = dual_coalgebra(A.base_change(RingTag::prime_field(3)));
            CHECK_NOTHROW(C.check_invariants());
        } else {
            auto C = dual_coalgebra(A);
            CHECK_NOTHROW(C.check_invariants());
            auto Cp = dual_coalgebra(A.base_change(RingTag::prime_field(2)));
            CHECK_NOTHROW(Cp.check_invariants());
        }
    }
    // duals need a zero differential
    CHECK_THROWS_AS(dual_coalgebra(preset("moore(3,2)")), error);
}

TEST_CASE("reduced coproduct of a dual separates trivial parts") {
    auto A = preset("truncated_poly(2,3)");
    auto C = dual_coalgebra(A);
    // Delta-bar of the dual of x^2 is exactly phi_x tensor phi_x
    int gx2 = C.global(4, 0);
    auto red = C.reduced_coproduct(gx2);
    REQUIRE(red.size() == 1);
    auto [g1, g2, c] = red[0];
    CHECK(g1 == C.global(2, 0));
    CHECK(g2 == C.global(2, 0));
    CHECK(c == 1);
}
