#ifndef LACB_FPPOLY_HPP
#define LACB_FPPOLY_HPP

// Polynomials over F_p and the root-counting kernel N_p(f) =
// deg gcd(x^p - x, f mod p), i.e. the number of distinct roots of f in F_p.

#include <cstdint>
#include <vector>

#include "lacb/intpoly.hpp"
#include "lacb/modpoly.hpp"

namespace lacb {

struct FpPoly {
    std::uint64_t p = 2;
    modp::Vec c;  // residues in [0, p), trimmed

    long degree() const { return (long)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
};

// Coefficientwise reduction. p must be prime (not checked here; the CLI and
// the sweep layer only feed sieved primes).
FpPoly reduce(const IntPoly& f, std::uint64_t p);

// x^p mod f over F_p; requires deg f >= 1.
FpPoly powmod_x(std::uint64_t p, const FpPoly& f);

// Number of distinct roots of f in F_p. Throws if f reduces to the zero
// polynomial mod p (invalid query).
int np_count(const IntPoly& f, std::uint64_t p);

// Degrees of the irreducible factors of the squarefree radical of f mod p,
// in ascending order with multiplicity (distinct-degree factorization; the
// sum equals the degree of the radical).
std::vector<int> degree_pattern(const IntPoly& f, std::uint64_t p);

}  // namespace lacb

#endif
