#ifndef LACB_MODPOLY_HPP
#define LACB_MODPOLY_HPP

// Dense polynomial arithmetic over F_p for p < 2^63, with 128-bit
// intermediate products. This is the low-level workhorse behind both the
// public FpPoly type and the modular-image integer gcd.

#include <cstdint>
#include <vector>

namespace lacb::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 base, u64 exp, u64 p);

// Inverse of a mod prime p (a not divisible by p).
u64 invmod(u64 a, u64 p);

// Coefficient vectors are little-endian (index = exponent) and trimmed:
// the zero polynomial is the empty vector.
using Vec = std::vector<u64>;

void trim(Vec& v);
int deg(const Vec& v);  // -1 for zero

Vec add(const Vec& a, const Vec& b, u64 p);
Vec sub(const Vec& a, const Vec& b, u64 p);
Vec mul(const Vec& a, const Vec& b, u64 p);
void make_monic(Vec& a, u64 p);

// a <- a mod b, b nonzero.
void rem_inplace(Vec& a, const Vec& b, u64 p);

// Monic gcd; gcd(0, 0) = 0.
Vec gcd(Vec a, Vec b, u64 p);

// a / b, throws if the division leaves a remainder.
Vec divexact(const Vec& a, const Vec& b, u64 p);

// x^e mod m, deg m >= 1.
Vec pow_x_mod(u64 e, const Vec& m, u64 p);

// base^e mod m, deg m >= 1.
Vec powmod_poly(const Vec& base, u64 e, const Vec& m, u64 p);

// Derivative over F_p.
Vec derivative(const Vec& a, u64 p);

// Deterministic sequence of ~62-bit primes used for modular images.
const std::vector<u64>& gcd_primes();

}  // namespace lacb::modp

#endif
