#ifndef LACB_SCHINZEL_HPP
#define LACB_SCHINZEL_HPP

// Critical-bound calculator for the lacunary families g_N = x^N c(1/x) + d
// (four bounds N1..N4), Capellian screening, and the Conjecture-B
// verification sweep over whole pentanomial families.

#include <gmpxx.h>

#include <set>
#include <vector>

#include "lacb/classb.hpp"
#include "lacb/intpoly.hpp"

namespace lacb {

struct GNFamily {
    IntPoly c, d;  // c(0) != 0, d(0) != 0

    // g_N(x) = x^N c(1/x) + d(x) = d(x) + x^{N - deg c} c*(x); N >= deg c.
    IntPoly member(long N) const;
};

// Writes a class-B polynomial as d(x) + x^{m_j} c*(x) at its j-th hole
// (1 <= j <= s): d keeps the monomials below x^{m_j}, c* the rest shifted
// down. member(m_s) reproduces the polynomial itself.
GNFamily gn_family(const ClassBSpec& spec, int j);

struct SchinzelBounds {
    long n1 = 0;                 // ceiled
    long double n2_log10 = 0;    // N2 itself is astronomically large
    mpz_class n3;                // family-invariant variant (norms only)
    mpz_class n3_terms;          // term-count variant
    mpz_class n4;
    long T = 0;                  // max(deg c, deg d)
    long t = 0;                  // #terms(c) + #terms(d)
    mpz_class norm_sum;          // ||c|| + ||d||
    bool n4_le_n3 = true;        // observed ordering, flagged if violated
};

// Evaluates the four bounds for a fixed pair (c, d); rejects zero constant
// terms. Real-valued bounds are rounded up; N2 is handled purely in log10.
SchinzelBounds compute_bounds(const IntPoly& c, const IntPoly& d);

enum class Capellian { not_capellian, possibly_capellian };

// Conservative screen: decides via the squarefree-decomposition exponents of
// -d(x) x^{deg c} / c*(x) whether the pair can possibly be a prime power (or
// 4 times a fourth power) in Q(x). Never returns not_capellian falsely.
Capellian capellian_check(const IntPoly& c, const IntPoly& d);

struct Table1Row {
    int exp_num = 0;  // 0 when the pair is not one of the catalogued rows
    long n = 0, m1 = 0;
    bool quad_irred = false;   // Finch-Jones verdict for d
    long n4 = 0;
    std::set<long> phi_set;    // union of cyclotomic indices over the sweep
    bool conj_b = true;        // B trivial for every N in [m1+n-1, N4]
};

// Runs split_abc over the pentanomials -1+x+x^n+x^{m1}+x^N for every N in
// [m1+n-1, N4]. parallel=true uses the OpenMP kernel; results are identical
// either way.
Table1Row conjecture_b_sweep(long n, long m1, bool parallel = true);

}  // namespace lacb

#endif
