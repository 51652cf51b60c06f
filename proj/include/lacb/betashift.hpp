#ifndef LACB_BETASHIFT_HPP
#define LACB_BETASHIFT_HPP

// Exact real-algebraic machinery: isolated roots with refinable intervals,
// greedy beta-transformation orbits, Renyi expansions of 1, their polynomial
// sections, and gap ratios.
//
// Orbit values T_beta^k(1) are exact elements of Q(beta), held as residue
// polynomials modulo the defining polynomial; every digit of the expansion
// is decided by a certified interval sign test, with an exact algebraic
// fallback when the orbit value sits on a decision boundary.

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lacb/intpoly.hpp"

namespace lacb {

class AlgebraicReal {
  public:
    // poly must change sign across (lo, hi) and have exactly one root there
    // (Sturm-verified; throws std::invalid_argument otherwise).
    AlgebraicReal(IntPoly poly, mpq_class lo, mpq_class hi);

    const IntPoly& poly() const { return poly_; }

    // Snapshot of the current isolating interval.
    std::pair<mpq_class, mpq_class> interval() const;

    // Shrinks the cached interval below 2^-bits (bisection; never loses the
    // root) and returns the refined snapshot. Thread-safe.
    std::pair<mpq_class, mpq_class> refine(unsigned bits) const;

    // The root 1/alpha; requires the interval to exclude 0.
    AlgebraicReal inverse() const;

    double approx() const;

  private:
    IntPoly poly_;
    struct State {
        mpq_class lo, hi;
        std::mutex mu;
    };
    std::shared_ptr<State> st_;
};

// -1 if a < b, 0 if equal, +1 if a > b. Exact: interval refinement with a
// gcd-based equality test when the intervals refuse to separate.
int compare(const AlgebraicReal& a, const AlgebraicReal& b);
int compare(const AlgebraicReal& a, const mpq_class& b);

// theta_n: the unique root of -1 + x + x^n in (0, 1), n >= 2.
AlgebraicReal theta_root(long n);

// Lehmer's number tau = 1.176280..., the root > 1 of
// x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1.
AlgebraicReal lehmer_root();
const IntPoly& lehmer_polynomial();

AlgebraicReal golden_ratio();

struct BetaExpansion {
    std::vector<int> digits;       // t_1, t_2, ... in {0, 1}
    std::vector<long> exponents;   // positions i with t_i = 1
    bool terminated = false;       // orbit hit 0 exactly (finite expansion)
    std::vector<unsigned> precision_bits;  // certificate per digit
};

// First k digits of d_beta(1) for 1 < beta <= golden ratio (alphabet {0,1}).
// Stops early iff the expansion is finite (terminated flag set).
BetaExpansion renyi_expansion(const AlgebraicReal& beta, long k);

// Parry's lexicographic admissibility for a finite {0,1} word: every proper
// shifted tail is strictly smaller than the word in dictionary order.
bool parry_admissible(const std::vector<int>& digits);

// j-th polynomial section of the expansion's power series: -1 plus the
// first j+2 one-digit monomials. Extends the expansion as needed.
IntPoly section(const AlgebraicReal& beta, int j);

// Consecutive ratios e_{i+1}/e_i of an exponent list (needs >= 2 entries).
std::vector<mpq_class> gap_ratios(const std::vector<long>& exponents);

}  // namespace lacb

#endif
