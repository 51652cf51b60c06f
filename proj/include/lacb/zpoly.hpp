#ifndef LACB_ZPOLY_HPP
#define LACB_ZPOLY_HPP

// Number-theoretic operations on exact integer polynomials: cyclotomics,
// gcd over Z, resultants and discriminants, Sturm counting, squarefree parts.

#include <gmpxx.h>

#include <vector>

#include "lacb/intpoly.hpp"

namespace lacb {

// k-th cyclotomic polynomial, k >= 1. Generated by exact division of
// x^k - 1 by the proper-divisor cyclotomics; memoized behind a shared lock.
IntPoly cyclotomic(long k);

// Euler phi, by trial-division factorization. Fine for k up to ~10^9.
long euler_phi(long k);

// Primitive gcd over Q, normalized to positive leading coefficient.
// Computed from modular images: monic gcds over F_p for ~62-bit primes,
// minimal-degree consensus, symmetric-CRT lift of lc-scaled images,
// then verification by exact trial division.
IntPoly gcd_z(const IntPoly& f, const IntPoly& g);

// Res(f, g) by modular images (Euclidean resultant over F_p + CRT under a
// Hadamard bound). Res with the zero polynomial is 0.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f), degree >= 1.
mpz_class discriminant(const IntPoly& f);

// Sturm chain of f (negated primitive pseudo-remainders with positive
// scaling). Exposes exact sign-variation counting.
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& f);
    // distinct real roots in (lo, hi]
    int count_interval(const mpq_class& lo, const mpq_class& hi) const;
    // distinct real roots on all of R (requires squarefree input to be
    // meaningful; the chain itself is computed for any nonzero f)
    int count_all() const;
    bool input_squarefree() const { return squarefree_; }

  private:
    int variations_at(const mpq_class& x) const;
    int variations_at_inf(int sign) const;
    std::vector<IntPoly> chain_;
    bool squarefree_ = true;
};

// Number of distinct real roots of a squarefree f.
int sturm_real_roots(const IntPoly& f);

// f / gcd(f, f'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

}  // namespace lacb

#endif
