#include "lacb/schinzel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lacb/betashift.hpp"
#include "lacb/factorsplit.hpp"
#include "lacb/reftables.hpp"
#include "lacb/sweep.hpp"
#include "lacb/zpoly.hpp"

namespace lacb {

IntPoly GNFamily::member(long N) const {
    if (N < c.degree()) throw std::domain_error("GNFamily::member: N below deg c");
    // x^N c(1/x) = x^{N - deg c} c*(x)
    return d + IntPoly::monomial(1, N - c.degree()) * reciprocal(c);
}

GNFamily gn_family(const ClassBSpec& spec, int j) {
    if (j < 1 || j > spec.s()) throw std::domain_error("gn_family: hole index out of range");
    GNFamily fam;
    fam.d = IntPoly{-1, 1} + IntPoly::monomial(1, spec.n);
    for (int q = 0; q + 1 < j; ++q) fam.d = fam.d + IntPoly::monomial(1, spec.m[q]);
    const long ms = spec.m.back();
    fam.c = IntPoly{1};
    for (int q = j - 1; q + 1 < (int)spec.m.size(); ++q)
        fam.c = fam.c + IntPoly::monomial(1, ms - spec.m[q]);
    return fam;
}

namespace {

long double log_tau() {
    static const long double value = [] {
        auto [lo, hi] = lehmer_root().refine(80);
        mpq_class mid = (lo + hi) / 2;
        return logl((long double)mid.get_d());
    }();
    return value;
}

// 5^e as an exact rational (e may be negative)
mpq_class pow5(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 5, (unsigned long)(e < 0 ? -e : e));
    return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

mpz_class ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace

SchinzelBounds compute_bounds(const IntPoly& c, const IntPoly& d) {
    if (c.is_zero() || c.coeff(0) == 0 || d.is_zero() || d.coeff(0) == 0)
        throw std::domain_error("compute_bounds: c(0) and d(0) must be nonzero");

    SchinzelBounds b;
    const long dc = c.degree(), dd = d.degree();
    b.T = std::max(dc, dd);
    b.t = term_count(c) + term_count(d);
    b.norm_sum = sq_norm(c) + sq_norm(d);
    if (!b.norm_sum.fits_slong_p())
        throw std::domain_error("compute_bounds: coefficient norms out of range");
    const long S = b.norm_sum.get_si();

    // N1
    const long double logS = logl((long double)S);
    long double n1 = (long double)(dc + dd);
    if (b.T <= 27) {
        n1 += (2.0L * b.T / log_tau()) * logS;
    } else {
        long double l6t = logl(6.0L * b.T);
        n1 += b.T * l6t * l6t * l6t * logS;
    }
    b.n1 = (long)ceill(n1);

    // N2, in log10 only: deg c + exp((5/16) 2^(S^2)) (2 + max{2, dc^2, dd^2})^S;
    // the additive deg c sits far below log-space resolution
    if (S >= 120) throw std::domain_error("compute_bounds: N2 exponent overflows even in log space");
    const long double a = (5.0L / 16.0L) * exp2l((long double)S * S);
    const long double m2 = std::max<long double>(2.0L, std::max((long double)dc * dc, (long double)dd * dd));
    b.n2_log10 = a * 0.43429448190325182765L + S * log10l(2.0L + m2);

    // N3, both variants, exact with ceiling
    {
        mpq_class first = pow5(8 * S - 15);
        mpq_class second = mpq_class(b.T) * (pow5(4 * S - 8) + mpq_class(1, 4));
        b.n3 = ceil_q(mpq_class(dc) + 2 * std::max(first, second));

        mpq_class firstt = pow5(4 * (S + b.t) - 15);
        mpq_class secondt = mpq_class(b.T) * (pow5(2 * (S + b.t) - 8) + mpq_class(1, 4));
        b.n3_terms = ceil_q(mpq_class(dc) + 2 * std::max(firstt, secondt));
    }

    // N4 = (1 + deg c + deg d) 2^(||c|| + ||d||)
    b.n4 = mpz_class(1 + dc + dd) << (unsigned long)S;

    b.n4_le_n3 = b.n4 <= b.n3;
    return b;
}

namespace {

// Multiplicity exponents of the nonconstant squarefree-decomposition layers
// of P over Q (Yun's algorithm on the primitive part).
std::vector<long> squarefree_exponents(const IntPoly& P) {
    std::vector<long> exps;
    if (P.degree() < 1) return exps;
    IntPoly g = gcd_z(P, derivative(P));
    if (g.degree() == 0) return {1};
    IntPoly w = *div_exact(primitive_part(P), g);
    long i = 1;
    while (w.degree() > 0) {
        IntPoly y = gcd_z(w, g);
        IntPoly slice = *div_exact(w, y);
        if (slice.degree() > 0) exps.push_back(i);
        w = y;
        if (g.degree() > 0 && y.degree() > 0)
            g = *div_exact(g, y);
        ++i;
        if (i > P.degree() + 1) throw std::logic_error("squarefree_exponents: no convergence");
    }
    return exps;
}

}  // namespace

Capellian capellian_check(const IntPoly& c, const IntPoly& d) {
    if (c.is_zero() || d.is_zero()) throw std::domain_error("capellian_check: zero polynomial");
    // the function under test is -d(x)/c(1/x) = -d(x) x^{deg c} / c*(x)
    IntPoly num = -(IntPoly::monomial(1, c.degree()) * d);
    IntPoly den = reciprocal(c);

    // reduce the fraction so exponents reflect the actual rational function
    while (true) {
        IntPoly g = gcd_z(num, den);
        if (g.degree() == 0) break;
        num = *div_exact(primitive_part(num), g);
        den = *div_exact(primitive_part(den), g);
    }

    std::vector<long> exps = squarefree_exponents(num);
    std::vector<long> de = squarefree_exponents(den);
    exps.insert(exps.end(), de.begin(), de.end());

    if (exps.empty()) return Capellian::possibly_capellian;  // constant function
    long g = 0;
    for (long e : exps) g = std::gcd(g, e);
    return g == 1 ? Capellian::not_capellian : Capellian::possibly_capellian;
}

Table1Row conjecture_b_sweep(long n, long m1, bool parallel) {
    ClassBSpec quad(n, {m1});  // validates the distanciation

    Table1Row row;
    row.n = n;
    row.m1 = m1;
    row.quad_irred = finch_jones(n, m1);
    for (const auto& ref : ref::kFamilyRows)
        if (ref.n == n && ref.m1 == m1) row.exp_num = ref.exp_num;

    SchinzelBounds b = compute_bounds(IntPoly{1}, quad.to_poly());
    if (!b.n4.fits_slong_p()) throw std::domain_error("conjecture_b_sweep: N4 out of range");
    row.n4 = b.n4.get_si();

    const long lo = m1 + n - 1, hi = row.n4;
    sweep::ConjBResult scan =
        parallel ? sweep::conjb_scan(n, m1, lo, hi) : sweep::conjb_scan_serial(n, m1, lo, hi);
    row.phi_set = scan.phi_set;
    row.conj_b = scan.b_trivial_all;
    return row;
}

}  // namespace lacb
