#include "doctest.h"
#include "ring.hpp"

using namespace dgc;

TEST_CASE("ring tags normalize and canonicalize") {
    auto f5 = RingTag::prime_field(5);
    CHECK(f5.normalize(7) == 2);
    CHECK(f5.normalize(-1) == 4);
    CHECK(f5.is_field());

    // CyclicRing(p,1) == PrimeField(p)
    CHECK(RingTag::cyclic(5, 1) == f5);

    auto z9 = RingTag::cyclic(3, 2);
    CHECK(z9.modulus() == 9);
    CHECK(z9.normalize(10) == 1);
    CHECK_FALSE(z9.is_field());

    auto z = RingTag::integers();
    CHECK(z.normalize(Int("-123456789012345678901234567890")) ==
          Int("-123456789012345678901234567890"));
}

TEST_CASE("ring inverse") {
    auto f7 = RingTag::prime_field(7);
    for (long a = 1; a < 7; ++a) {
        auto inv = f7.inverse(a);
        REQUIRE(inv.has_value());
        CHECK(f7.mul(a, *inv) == 1);
    }
    auto z9 = RingTag::cyclic(3, 2);
    CHECK_FALSE(z9.inverse(3).has_value());
    CHECK(z9.mul(*z9.inverse(2), 2) == 1);
    CHECK_FALSE(RingTag::integers().inverse(2).has_value());
    CHECK(RingTag::integers().inverse(-1).value() == -1);
}

TEST_CASE("ring parse round-trip and validation") {
    for (const char* s : {"Z", "F2", "F5", "Z/3^2", "Z/2^4"}) {
        auto t = RingTag::parse(s);
        CHECK(t.to_string() == s);
    }
    CHECK(RingTag::parse("Z/5^1").to_string() == "F5");
    CHECK_THROWS_AS(RingTag::parse("F4"), error);
    CHECK_THROWS_AS(RingTag::parse("Q"), error);
    CHECK_THROWS_AS(RingTag::cyclic(6, 2), error);
}

TEST_CASE("p-adic valuation") {
    CHECK(p_valuation(Int(12), 2) == 2);
    CHECK(p_valuation(Int(-27), 3) == 3);
    CHECK(p_valuation(Int(7), 5) == 0);
    CHECK_THROWS_AS(p_valuation(Int(0), 3), error);
}
