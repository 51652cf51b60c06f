#ifndef LACB_FACTORSPLIT_HPP
#define LACB_FACTORSPLIT_HPP

// The A*B*C decomposition of an integer polynomial: A the cyclotomic part,
// B the reciprocal non-cyclotomic part, C the non-reciprocal part.
// For class-B inputs C is the interesting factor; "B trivial" is the
// conjecture the sweep layer tests at scale.

#include <string>
#include <vector>

#include "lacb/classb.hpp"
#include "lacb/intpoly.hpp"

namespace lacb {

struct CycFactor {
    long k = 1;
    int mult = 1;
    friend bool operator==(const CycFactor&, const CycFactor&) = default;
};

struct FactorSplit {
    IntPoly A;  // product of the cyclotomic factors below
    IntPoly B;  // reciprocal, no cyclotomic factor
    IntPoly C;  // non-reciprocal
    std::vector<CycFactor> cyclotomic;  // (k, multiplicity), ascending k
    bool conjecture_b_holds = true;     // deg B == 0
};

// All k with Phi_k | f, with multiplicities, ascending. Requires f != 0 and
// f(0) != 0. The search space is cut down first: every cyclotomic factor of
// f divides gcd_z(f, f*), so only k with phi(k) <= deg gcd need be tried.
std::vector<CycFactor> cyclotomic_indices(const IntPoly& f);

// Splits f (f(0) != 0, lc(f) != 0) into A*B*C. Works on the primitive part;
// reconstruction A*B*C == +-primitive(f) is asserted internally.
FactorSplit split_abc(const IntPoly& f);

enum class SelmerVerdict { irreducible, splits_phi6 };

// Selmer's rule for -1 + x + x^n: reducible exactly when n = 5 (mod 6), in
// which case Phi_6 splits off.
SelmerVerdict selmer_rule(long n);

// Finch-Jones irreducibility criterion for the quadrinomial
// -1 + x + x^n + x^{m1}: irreducible iff m1 != 0 (mod 2 e1) and
// n != 0 (mod 2 e2), where e1 = gcd(m1, n-1), e2 = gcd(n, m1-1).
bool finch_jones(long n, long m1);

// Irreducibility of a class-B polynomial: f is irreducible iff
// gcd_z(f, f*) is constant (the non-reciprocal part is always irreducible).
bool classb_irreducible(const ClassBSpec& spec);

// {"A":[{"k":4,"mult":1}],"B":"1","C":"<poly text>","conjB":true}
std::string split_to_json(const FactorSplit& s);

}  // namespace lacb

#endif
