#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace birat::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return u64(u128(a) * b % p); }
inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

// Primes p = 1 (mod 4) just below 2^62, together with a square root of -1.
struct GaussPrime {
    u64 p;
    u64 sqrt_m1;
};
const GaussPrime& gauss_prime(std::size_t index);

u64 mpz_mod(const mpz_class& z, u64 p);
// Residue of an integer a + b*i under i -> s.
inline u64 gauss_mod(const mpz_class& re, const mpz_class* im, u64 s, u64 p) {
    u64 r = mpz_mod(re, p);
    if (im) r = addmod(r, mulmod(mpz_mod(*im, p), s, p), p);
    return r;
}

// Dense univariate polynomials over F_p, index = degree, no trailing zeros.
using UPolyP = std::vector<u64>;

void trim(UPolyP& a);
inline int deg(const UPolyP& a) { return int(a.size()) - 1; }
u64 eval(const UPolyP& a, u64 x, u64 p);
UPolyP mul(const UPolyP& a, const UPolyP& b, u64 p);
UPolyP monic(UPolyP a, u64 p);
// Quotient of exact division; remainder is discarded.
UPolyP div_exact(const UPolyP& a, const UPolyP& b, u64 p);
void divmod(const UPolyP& a, const UPolyP& b, u64 p, UPolyP& q, UPolyP& r);
UPolyP gcd(UPolyP a, UPolyP b, u64 p);

// Symmetric residue of a modulo m.
mpz_class symmetric(const mpz_class& a, const mpz_class& m);

} // namespace birat::detail
