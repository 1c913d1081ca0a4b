#include "ring.hpp"

namespace dgc {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingTag RingTag::prime_field(long p) {
    require(is_prime(p), errc::input, "PrimeField requires a prime, got " + std::to_string(p));
    RingTag t;
    t.kind = Kind::prime_field;
    t.p = p;
    t.eps = 1;
    return t;
}

RingTag RingTag::cyclic(long p, int eps) {
    require(is_prime(p), errc::input, "CyclicRing requires a prime, got " + std::to_string(p));
    require(eps >= 1, errc::input, "CyclicRing requires eps >= 1");
    if (eps == 1) return prime_field(p);
    RingTag t;
    t.kind = Kind::cyclic;
    t.p = p;
    t.eps = eps;
    return t;
}

Int RingTag::modulus() const {
    if (kind == Kind::integers) return 0;
    Int m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(eps));
    return m;
}

Int RingTag::normalize(const Int& v) const {
    if (kind == Kind::integers) return v;
    Int m = modulus();
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

std::optional<Int> RingTag::inverse(const Int& a) const {
    Int x = normalize(a);
    if (kind == Kind::integers) {
        if (x == 1 || x == -1) return x;
        return std::nullopt;
    }
    Int m = modulus(), g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (g != 1) return std::nullopt;
    return normalize(s);
}

std::string RingTag::to_string() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::prime_field: return "F" + std::to_string(p);
        case Kind::cyclic: return "Z/" + std::to_string(p) + "^" + std::to_string(eps);
    }
    return "?";
}

RingTag RingTag::parse(const std::string& s) {
    if (s == "Z") return integers();
    if (s.size() > 1 && s[0] == 'F') {
        try {
            return prime_field(std::stol(s.substr(1)));
        } catch (const std::invalid_argument&) {
            throw error(errc::input, "bad ring string: " + s);
        }
    }
    if (s.rfind("Z/", 0) == 0) {
        auto caret = s.find('^');
        require(caret != std::string::npos, errc::input, "bad ring string: " + s);
        try {
            long p = std::stol(s.substr(2, caret - 2));
            int eps = std::stoi(s.substr(caret + 1));
            return cyclic(p, eps);
        } catch (const std::invalid_argument&) {
            throw error(errc::input, "bad ring string: " + s);
        }
    }
    throw error(errc::input, "bad ring string: " + s);
}

int p_valuation(const Int& v, long p) {
    require(v != 0, errc::input, "p-adic valuation of zero");
    Int x = v < 0 ? Int(-v) : v;
    int k = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
        x /= p;
        ++k;
    }
    return k;
}

}  // namespace dgc
