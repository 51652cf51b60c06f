#ifndef LACB_NEWFORM_HPP
#define LACB_NEWFORM_HPP

// Closed-form N_p machinery for the small trinomials: Legendre/Jacobi
// symbols, the mod-5 q-series for n = 2, the constraint classes for n = 3
// and n = 4, binary-quadratic-form representation tests, and the transcribed
// weight-1 level-283 coefficient table with its N_p identity.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace lacb {

// Legendre symbol (a/p) by Euler's criterion; p an odd prime.
int legendre(const mpz_class& a, std::uint64_t p);

// Jacobi symbol via the reciprocity recursion; n odd positive. Equals the
// Legendre symbol when n is prime (the independent cross-check path).
int jacobi(mpz_class a, mpz_class n);

// N_p(-1+x+x^2): 1 at p = 5, else 2 iff p = +-1 (mod 5), 0 otherwise.
int np_formula_n2(std::uint64_t p);

// a_m of the q-series (q - q^2 - q^3 + q^4)/(1 - q^5): the strongly
// multiplicative mod-5 pattern, index m >= 0.
int qseries_n2_coeff(std::uint64_t m);

// What a closed form pins down: either an exact value or a small set of
// admissible values.
struct NpConstraint {
    std::vector<int> allowed;  // ascending
    bool is_exact() const { return allowed.size() == 1; }
    bool contains(int v) const;
    std::string to_string() const;
};

// n = 3: 2 at p = 31; {1} when (p/31) = -1; {0,3} when (p/31) = +1.
NpConstraint np_formula_n3(std::uint64_t p);

// n = 4: 3 at p = 283; {0,4} when p = x^2+xy+71y^2; {1} when
// p = 7x^2+5xy+11y^2; {0,2} when (p/283) = -1.
NpConstraint np_formula_n4(std::uint64_t p);

// Does ax^2 + bxy + cy^2 represent p? Positive-definite forms only
// (b^2 - 4ac < 0, a > 0); bounded exact enumeration.
bool qform_represents(long a, long b, long c, std::uint64_t p);

// Coefficient r + s*i*sqrt(2) of the level-283 weight-1 form.
struct QCoeff283 {
    long r = 0;
    long s = 0;
    // exact square (r + s i sqrt2)^2 = r^2 - 2 s^2 + 2 r s i sqrt2; the
    // identity below only ever needs the real part, which is total here
    long square_real() const { return r * r - 2 * s * s; }
    bool is_real() const { return s == 0; }
};

// Transcribed expansion through q^42 (index 0 unused, a_1 = 1).
const std::vector<QCoeff283>& newform283_coeffs();

// The identity N_p(-1+x+x^4) = 1 + a_p^2 - (p/283) for primes p <= 41,
// checked against the gcd-based count. Returns true when they agree.
bool newform283_check(std::uint64_t p);

// Primes p <= x with N_p(-1+x+x^7) = 7.
std::vector<std::uint64_t> n7_max_sweep(std::uint64_t x);

}  // namespace lacb

#endif
