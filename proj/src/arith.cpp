#include "gk/arith.hpp"

#include <cmath>
#include <stdexcept>

#include "gk/errors.hpp"

namespace gk {

BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt binomial_any(const BigInt& n, uint64_t k) {
    // falling factorial n (n-1) ... (n-k+1) over k!
    BigInt num = 1;
    BigInt term = n;
    for (uint64_t i = 0; i < k; ++i) {
        num *= term;
        term -= 1;
    }
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return q;
}

namespace {
struct BinTable {
    uint64_t c[65][65];
    BinTable() {
        for (unsigned n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (unsigned k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
            for (unsigned k = n + 1; k <= 64; ++k) c[n][k] = 0;
        }
    }
};
const BinTable bin_table;
} // namespace

uint64_t binomial_u64(unsigned n, unsigned k) {
    if (n > 64) throw BadParameter("binomial_u64: n > 64");
    if (k > 64) return 0;
    return bin_table.c[n][k];
}

BigInt binomial_prefix_sum(uint64_t d, uint64_t upto) {
    BigInt s = 0;
    for (uint64_t i = 0; i <= upto && i <= d; ++i) s += binomial(d, i);
    return s;
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for 64-bit integers
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw BadParameter("inv_mod: zero");
    return pow_mod(a, p - 2, p);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw BadParameter("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            BigInt n(s);
            return Rational(n);
        }
        BigInt n(s.substr(0, slash));
        BigInt d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + s);
    }
}

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw BadParameter("ceil_div: nonpositive divisor");
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

double log2_mpz(const BigInt& v) {
    if (v <= 0) throw BadParameter("log2_mpz: nonpositive");
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log2(m) + static_cast<double>(exp2);
}

} // namespace gk
