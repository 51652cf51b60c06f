#ifndef LACB_TESTS_ORACLES_HPP
#define LACB_TESTS_ORACLES_HPP

// Independent reference implementations used to freeze expected values.
// These deliberately avoid the library's computation paths: root counting is
// plain evaluation, real-root counting is sign changes on a bisection grid.

#include <cstdint>
#include <random>
#include <vector>

#include "lacb/intpoly.hpp"

namespace oracle {

// #{a in [0,p) : f(a) = 0 mod p} by direct evaluation.
inline int np_brute(const lacb::IntPoly& f, std::uint64_t p) {
    int count = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
        mpz_class acc = 0;
        for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
            acc = acc * a + *it;
            mpz_fdiv_r_ui(acc.get_mpz_t(), acc.get_mpz_t(), p);
        }
        if (acc == 0) ++count;
    }
    return count;
}

// Distinct real roots counted by sign changes of f on a dyadic grid over
// [-B, B], B the Cauchy-style root bound. Exact rational evaluation; only
// reliable when roots are farther apart than the grid step, which holds for
// the small random polynomials the properties use.
inline int real_roots_grid(const lacb::IntPoly& f, unsigned grid_pow = 12) {
    mpz_class maxc = 0;
    for (const auto& a : f.coeffs()) {
        mpz_class m = abs(a);
        if (m > maxc) maxc = m;
    }
    mpz_class lc_abs = abs(f.lc()), ratio;
    mpz_cdiv_q(ratio.get_mpz_t(), maxc.get_mpz_t(), lc_abs.get_mpz_t());
    mpz_class bound_num = 1 + ratio;  // covers the Cauchy root bound
    const long steps = 1L << grid_pow;
    mpq_class step = mpq_class(2 * bound_num) / steps;
    int count = 0;
    int prev = 0;
    for (long i = 0; i <= steps; ++i) {
        mpq_class x = -mpq_class(bound_num) + i * step;
        int s = lacb::sign_at(f, x);
        if (s == 0) {  // grid point is a root
            ++count;
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

inline lacb::IntPoly random_poly(std::mt19937_64& rng, int max_deg, int coeff_bound,
                                 bool force_nonzero = true) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<long> dc(-coeff_bound, coeff_bound);
    for (;;) {
        int d = dd(rng);
        std::vector<mpz_class> c(d + 1);
        for (auto& v : c) v = dc(rng);
        lacb::IntPoly f{std::move(c)};
        if (!force_nonzero || !f.is_zero()) return f;
    }
}

}  // namespace oracle

#endif
