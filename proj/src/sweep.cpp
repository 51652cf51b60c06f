#include "lacb/sweep.hpp"

#include <omp.h>

#include <stdexcept>

#include "lacb/classb.hpp"
#include "lacb/factorsplit.hpp"
#include "lacb/fppoly.hpp"

namespace lacb::sweep {

namespace {
int g_jobs = 0;

int np_or_excluded(const IntPoly& f, std::uint64_t p) {
    FpPoly fp = reduce(f, p);
    if (fp.is_zero()) return -2;
    if (fp.degree() == 0) return 0;
    modp::Vec h = modp::pow_x_mod(p, fp.c, p);
    if (h.size() < 2) h.resize(2, 0);
    h[1] = modp::submod(h[1], 1, p);
    modp::trim(h);
    modp::Vec g = modp::gcd(fp.c, h, p);
    return std::max(0, modp::deg(g));
}

IntPoly pentanomial(long n, long m1, long N) {
    return ClassBSpec(n, {m1, N}).to_poly();
}
}  // namespace

void set_jobs(int jobs) {
    g_jobs = jobs;
    if (jobs > 0) omp_set_num_threads(jobs);
}

std::vector<int> np_over_primes_serial(const IntPoly& f,
                                       const std::vector<std::uint64_t>& primes) {
    std::vector<int> out(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) out[i] = np_or_excluded(f, primes[i]);
    return out;
}

std::vector<int> np_over_primes(const IntPoly& f, const std::vector<std::uint64_t>& primes) {
    std::vector<int> out(primes.size());
    const long long n = (long long)primes.size();
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < n; ++i) out[i] = np_or_excluded(f, primes[i]);
    return out;
}

ConjBResult conjb_scan_serial(long n, long m1, long n_lo, long n_hi) {
    ConjBResult r;
    for (long N = n_lo; N <= n_hi; ++N) {
        FactorSplit s = split_abc(pentanomial(n, m1, N));
        for (const auto& cf : s.cyclotomic) r.phi_set.insert(cf.k);
        if (!s.conjecture_b_holds && (r.first_violation < 0 || N < r.first_violation)) {
            r.b_trivial_all = false;
            r.first_violation = N;
        }
    }
    return r;
}

ConjBResult conjb_scan(long n, long m1, long n_lo, long n_hi) {
    ConjBResult r;
    if (n_hi < n_lo) return r;
    long violation = -1;
#pragma omp parallel
    {
        std::set<long> local_phi;
        long local_violation = -1;
#pragma omp for schedule(dynamic, 8) nowait
        for (long N = n_lo; N <= n_hi; ++N) {
            FactorSplit s = split_abc(pentanomial(n, m1, N));
            for (const auto& cf : s.cyclotomic) local_phi.insert(cf.k);
            if (!s.conjecture_b_holds && (local_violation < 0 || N < local_violation))
                local_violation = N;
        }
#pragma omp critical
        {
            r.phi_set.insert(local_phi.begin(), local_phi.end());
            if (local_violation >= 0 && (violation < 0 || local_violation < violation))
                violation = local_violation;
        }
    }
    if (violation >= 0) {
        r.b_trivial_all = false;
        r.first_violation = violation;
    }
    return r;
}

}  // namespace lacb::sweep
