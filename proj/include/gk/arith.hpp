#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gk {

using BigInt = mpz_class;
using Rational = mpq_class;

// C(n, k) for n, k >= 0.
BigInt binomial(uint64_t n, uint64_t k);

// C(n, k) where n may be negative: C(n,k) = n(n-1)...(n-k+1) / k!.
BigInt binomial_any(const BigInt& n, uint64_t k);

// Word-sized C(n, k) for n <= 64 (largest value C(64,32) fits in 63 bits).
uint64_t binomial_u64(unsigned n, unsigned k);

// sum_{i=0..upto} C(d, i)
BigInt binomial_prefix_sum(uint64_t d, uint64_t upto);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t m);
uint64_t inv_mod(uint64_t a, uint64_t p); // p prime, a != 0 mod p

Rational make_rational(const BigInt& num, const BigInt& den);
Rational rational_from_string(const std::string& s); // "a" or "a/b"
std::string rational_to_string(const Rational& r);   // always "a/b", canonical

// ceil(a/b) for b > 0
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Display-only base-2 logarithm of a positive integer.
double log2_mpz(const BigInt& v);

} // namespace gk
