#include "doctest.h"
#include "cobar.hpp"
#include "simplicial.hpp"

using namespace dgc;

TEST_CASE("cobar of a sphere homology coalgebra is a free word algebra") {
    for (int n1 : {2, 3, 4}) {
        auto A = preset("sphere(" + std::to_string(n1) + ")")
                     .base_change(RingTag::prime_field(3));
        auto C = dual_coalgebra(A);
        CobarComplex cobar(C, 10, CobarVariance::chain);
        cobar.check_d_squared();
        auto t = cobar.betti(0, cobar.safe_window(), "cobar");
        for (int d = 0; d <= cobar.safe_window(); ++d)
            CHECK(t.dim(d) == (d % (n1 - 1) == 0 ? 1 : 0));
    }
}

TEST_CASE("cobar d^2 = 0 on duals and bar coalgebras") {
    for (const char* name :
         {"truncated_poly(2,4)", "moore(3,2)", "tensor(truncated_poly(2,2),exterior(3))",
          "wedge_of_spheres(2,2,3)"}) {
        CAPTURE(name);
        auto A = preset(name).base_change(RingTag::prime_field(3));
        CobarComplex chaincobar(dual_coalgebra(A), 10, CobarVariance::chain);
        CHECK_NOTHROW(chaincobar.check_d_squared());
        BarComplex bar(A, 8);
        CobarComplex cochaincobar(bar.as_coalgebra(), 7, CobarVariance::cochain);
        CHECK_NOTHROW(cochaincobar.check_d_squared());
    }
    // nonzero differential input
    auto m9 = preset("moore(3,2)").base_change(RingTag::cyclic(3, 2));
    BarComplex bar9(m9, 8);
    CHECK_NOTHROW(CobarComplex(bar9.as_coalgebra(), 7, CobarVariance::cochain).check_d_squared());
}

TEST_CASE("cobar gates its preconditions") {
    // the bar coalgebra of sphere(2) has a degree-1 line: chain variance
    // rejects it as not 1-reduced
    auto A = preset("sphere(2)").base_change(RingTag::prime_field(2));
    BarComplex bar(A, 6);
    CHECK_THROWS_WITH_AS(CobarComplex(bar.as_coalgebra(), 5, CobarVariance::chain),
                         doctest::Contains("1-reduced"), error);
    // nonzero-differential sources are rejected in chain variance
    auto m9 = preset("moore(3,2)").base_change(RingTag::cyclic(3, 2));
    BarComplex bar9(m9, 6);
    CHECK_THROWS_WITH_AS(CobarComplex(bar9.as_coalgebra(), 5, CobarVariance::chain),
                         doctest::Contains("zero-differential"), error);
}

TEST_CASE("counit alpha: values, chain map, quasi-isomorphism ranks") {
    for (const char* name : {"sphere(2)", "sphere(3)", "moore(3,2)"}) {
        CAPTURE(name);
        auto A = preset(name).base_change(RingTag::prime_field(3));
        BarComplex bar(A, 9);
        CobarComplex cobar(bar.as_coalgebra(), 8, CobarVariance::cochain);
        auto alpha = counit_alpha(cobar, bar);
        CHECK(alpha.is_chain_map);

        // <[a]> -> a and longer bar letters die
        for (int g = 0; g < A.total_dim; ++g) {
            int adeg = A.degree_of(g);
            if (adeg < 2) continue;
            int bidx = bar.word_index(adeg - 1, {g});
            int cidx = cobar.word_index(adeg, {cobar.source().global(adeg - 1, bidx)});
            REQUIRE(cidx >= 0);
            CHECK(alpha.per_degree[adeg].get(A.local(g).second, cidx) == 1);
        }

        // induced map on cohomology is an isomorphism in the shared window:
        // rank equality per degree plus injectivity on representatives
        auto cx = cobar.complex();
        for (int n = 0; n <= std::min(6, A.top_degree()); ++n) {
            auto h_cobar = cx.cohomology_at(n);
            auto h_a = A.complex().cohomology_at(n);
            CHECK(h_cobar.dimension() == h_a.dimension());
        }
    }
}

TEST_CASE("counit alpha is a surjective algebra map") {
    auto A = preset("truncated_poly(2,4)").base_change(RingTag::prime_field(5));
    BarComplex bar(A, 9);
    CobarComplex cobar(bar.as_coalgebra(), 8, CobarVariance::cochain);
    auto alpha = counit_alpha(cobar, bar);
    REQUIRE(alpha.is_chain_map);

    // surjective degree-wise onto A (it maps onto the whole algebra)
    for (int n = 0; n <= std::min<int>(alpha.per_degree.size() - 1, A.top_degree()); ++n) {
        if (A.dim(n) == 0) continue;
        CHECK(rank_kernel_image(alpha.per_degree[n]).rank == A.dim(n));
    }

    // multiplicative on concatenation: alpha(w1.w2) = alpha(w1) alpha(w2)
    const auto& C = cobar.source();
    int gx = A.global(2, 0);
    int letter = C.global(1, bar.word_index(1, {gx}));  // the bar word [x]
    // w1 = <[x]>, w2 = <[x]|[x]>, concatenation = <[x]|[x]|[x]>
    auto value = [&](const std::vector<int>& w) {
        int deg = cobar.word_degree(w);
        Vec col(A.dim(deg), 0);
        int idx = cobar.word_index(deg, w);
        REQUIRE(idx >= 0);
        for (int r = 0; r < A.dim(deg); ++r) col[r] = alpha.per_degree[deg].get(r, idx);
        return Elem{deg, col};
    };
    Elem a1 = value({letter});
    Elem a2 = value({letter, letter});
    Elem a3 = value({letter, letter, letter});
    CHECK(A.mul(a1, a2) == a3);
    CHECK(A.mul(a1, A.mul(a1, a1)) == a3);
}

TEST_CASE("bar/cobar duality on formal presets") {
    // Betti of bar(A) equals Betti of cobar(dual A) in the shared window
    for (const char* name :
         {"moore(2,2)", "truncated_poly(2,3)", "tensor(truncated_poly(2,2),exterior(3))"}) {
        CAPTURE(name);
        auto A = preset(name).base_change(RingTag::prime_field(2));
        BarComplex bar(A, 9);
        auto tb = bar.complex().betti(0, 8, "bar");
        CobarComplex cobar(dual_coalgebra(A), 9, CobarVariance::chain);
        auto tc = cobar.betti(0, 8, "cobar");
        CHECK(tb.dims == tc.dims);
    }
}
