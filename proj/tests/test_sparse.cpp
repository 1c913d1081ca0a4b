#include "doctest.h"
#include "sparse.hpp"

#include <random>
#include <sstream>

using namespace dgc;

namespace {

SparseMatrix from_rows(const std::vector<std::vector<long>>& rows, RingTag ring) {
    SparseMatrix m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()), ring);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
    return m;
}

bool in_image(const SparseMatrix& m, const Vec& v) {
    ColumnEchelon ech(m.ring);
    for (int j = 0; j < m.cols; ++j) ech.insert(m.column(j));
    return ech.contains(v);
}

}  // namespace

TEST_CASE("rank_kernel_image on the stated examples") {
    auto f5 = RingTag::prime_field(5);
    auto f2 = RingTag::prime_field(2);

    // identity: full rank, empty kernel, standard image
    auto id = SparseMatrix::identity(3, f5);
    auto rki = rank_kernel_image(id);
    CHECK(rki.rank == 3);
    CHECK(rki.kernel.empty());
    REQUIRE(rki.image.size() == 3);
    for (int j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) CHECK(rki.image[j][i] == (i == j ? 1 : 0));
    }

    // zero 2x4 over F_2
    SparseMatrix zero(2, 4, f2);
    auto rkz = rank_kernel_image(zero);
    CHECK(rkz.rank == 0);
    CHECK(rkz.kernel.size() == 4);

    // [[1,2],[2,4]] over F_5: rank 1 (row reduction oracle)
    auto m = from_rows({{1, 2}, {2, 4}}, f5);
    CHECK(rank_kernel_image(m).rank == 1);
}

TEST_CASE("rank + nullity == cols on random matrices over F_p") {
    std::mt19937 rng(12345);
    for (long p : {2L, 3L, 5L, 7L}) {
        auto ring = RingTag::prime_field(p);
        for (int trial = 0; trial < 25; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6), cols = 1 + static_cast<int>(rng() % 6);
            SparseMatrix m(rows, cols, ring);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    if (rng() % 3 == 0) m.set(i, j, static_cast<long>(rng() % p));
            auto rki = rank_kernel_image(m);
            CHECK(rki.rank + static_cast<int>(rki.kernel.size()) == cols);
            for (const auto& k : rki.kernel) CHECK(vec_is_zero(m.apply(k)));
            for (const auto& im : rki.image) CHECK(in_image(m, im));
        }
    }
}

TEST_CASE("solve over a field: examples and certificates") {
    auto f5 = RingTag::prime_field(5);
    auto id = SparseMatrix::identity(3, f5);
    Vec b = {1, 4, 2};
    auto r = solve(id, b);
    REQUIRE(r.solvable);
    CHECK(r.solution == b);

    SparseMatrix zero(2, 3, f5);
    auto r2 = solve(zero, Vec{1, 0});
    CHECK_FALSE(r2.solvable);
    CHECK_FALSE(vec_is_zero(r2.obstruction));
    // certificate functional pairs nonzero against b and kills the image
    REQUIRE_FALSE(r2.functional.empty());
    Int pair = 0;
    for (int i = 0; i < 2; ++i) pair += r2.functional[i] * Vec{1, 0}[i];
    CHECK(f5.normalize(pair) != 0);
}

TEST_CASE("solve residual is exactly zero on random solvable systems") {
    std::mt19937 rng(777);
    auto ring = RingTag::prime_field(3);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
        SparseMatrix m(rows, cols, ring);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() % 2 == 0) m.set(i, j, static_cast<long>(rng() % 3));
        Vec x(cols);
        for (auto& v : x) v = static_cast<long>(rng() % 3);
        Vec b = m.apply(x);
        auto r = solve(m, b);
        REQUIRE(r.solvable);
        CHECK(m.apply(r.solution) == b);
    }
}

TEST_CASE("homology dimension formula") {
    auto f3 = RingTag::prime_field(3);

    // zero differentials on F_p^n
    SparseMatrix din(4, 0, f3), dout(0, 4, f3);
    auto h = homology(din, dout);
    CHECK(h.dimension() == 4);

    // two-term complex Z --(*p)--> Z reduced mod p: both maps zero of rank 1
    SparseMatrix a(1, 1, f3), b(1, 1, f3);
    // d_in: degree -1 to here is zero; d_out multiplies by p == 0 mod p
    auto h2 = homology(SparseMatrix(1, 0, f3), b);
    CHECK(h2.dimension() == 1);
    (void)a;

    // exact pair: d_in surjective onto ker d_out
    auto dinc = from_rows({{1}, {0}}, f3);     // image = span(e0)
    auto doutc = from_rows({{0, 1}}, f3);      // kernel = span(e0)
    auto h3 = homology(dinc, doutc);
    CHECK(h3.dimension() == 0);

    // inconsistent pair must be rejected with the offending entry
    auto dinb = from_rows({{1}, {0}}, f3);
    auto doutb = from_rows({{1, 0}}, f3);
    CHECK_THROWS_WITH_AS(homology(dinb, doutb), "complex inconsistency: (d_out*d_in)[0][0] = 1",
                         error);
}

TEST_CASE("homology agrees with the rank formula on random d^2 = 0 pairs") {
    std::mt19937 rng(99);
    auto ring = RingTag::prime_field(5);
    int done = 0;
    while (done < 100) {
        int mid = 2 + static_cast<int>(rng() % 5);
        int top = 1 + static_cast<int>(rng() % 4);
        SparseMatrix dout(top, mid, ring);
        for (int i = 0; i < top; ++i)
            for (int j = 0; j < mid; ++j)
                if (rng() % 3 == 0) dout.set(i, j, static_cast<long>(rng() % 5));
        auto k = rank_kernel_image(dout);
        // build d_in whose image lies inside ker(d_out)
        int src = 1 + static_cast<int>(rng() % 4);
        SparseMatrix din(mid, src, ring);
        for (int j = 0; j < src; ++j) {
            Vec col(mid, 0);
            for (const auto& kv : k.kernel)
                if (rng() % 2 == 0) {
                    long c = static_cast<long>(rng() % 5);
                    for (int i = 0; i < mid; ++i) col[i] = ring.normalize(col[i] + c * kv[i]);
                }
            for (int i = 0; i < mid; ++i)
                if (col[i] != 0) din.set(i, j, col[i]);
        }
        auto h = homology(din, dout);
        int expect = static_cast<int>(k.kernel.size()) - rank_kernel_image(din).rank;
        CHECK(h.dimension() == expect);
        ++done;
    }
}

TEST_CASE("elimination stays exact over a large prime") {
    auto ring = RingTag::prime_field(1000003);
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        SparseMatrix m(n, n, ring);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rng() % 2 == 0) m.set(i, j, static_cast<long>(rng() % 1000003));
        auto rki = rank_kernel_image(m);
        CHECK(rki.rank + static_cast<int>(rki.kernel.size()) == n);
        for (const auto& k : rki.kernel) CHECK(vec_is_zero(m.apply(k)));
        Vec x(n);
        for (auto& v : x) v = static_cast<long>(rng() % 1000003);
        Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.solvable);
        CHECK(m.apply(sol.solution) == b);
    }
}

TEST_CASE("matrix text interchange round-trips") {
    auto z9 = RingTag::cyclic(3, 2);
    SparseMatrix m(3, 4, z9);
    m.set(0, 1, 5);
    m.set(2, 3, 8);
    m.set(1, 0, 1);
    std::stringstream ss;
    write_matrix(ss, m);
    auto m2 = read_matrix(ss);
    CHECK(m == m2);
    CHECK(m2.ring == z9);

    std::stringstream bad("2 2\n");
    CHECK_THROWS_AS(read_matrix(bad), error);
}
