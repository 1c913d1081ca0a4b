#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace dgc {

using Int = mpz_class;

enum class errc { input = 2, invariant = 3, window = 4 };

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline void require(bool cond, errc c, const std::string& msg) {
    if (!cond) throw error(c, msg);
}

bool is_prime(long p);

/* Coefficient ring: Z, F_p, or Z/p^eps.  CyclicRing(p,1) canonicalizes to
   PrimeField(p).  Scalars are always mpz_class; a ring normalizes them into
   [0, p^eps) (no-op over Z). */
struct RingTag {
    enum class Kind { integers, prime_field, cyclic };
    Kind kind = Kind::integers;
    long p = 0;
    int eps = 1;

    static RingTag integers() { return RingTag{}; }
    static RingTag prime_field(long p);
    static RingTag cyclic(long p, int eps);
    static RingTag parse(const std::string& s);

    bool is_field() const { return kind == Kind::prime_field; }
    bool is_integers() const { return kind == Kind::integers; }
    Int modulus() const;  // 0 over Z

    Int normalize(const Int& v) const;
    Int add(const Int& a, const Int& b) const { return normalize(a + b); }
    Int sub(const Int& a, const Int& b) const { return normalize(a - b); }
    Int mul(const Int& a, const Int& b) const { return normalize(a * b); }
    Int neg(const Int& a) const { return normalize(-a); }
    // Multiplicative inverse where it exists (fields: all nonzero; cyclic:
    // units only; Z: +-1 only).
    std::optional<Int> inverse(const Int& a) const;

    std::string to_string() const;
    bool operator==(const RingTag& o) const {
        return kind == o.kind && p == o.p && eps == o.eps;
    }
};

// Exact p-adic valuation of a nonzero integer; throws on zero input.
int p_valuation(const Int& v, long p);

}  // namespace dgc
