#include "lacb/stats.hpp"

#include <omp.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lacb/betashift.hpp"
#include "lacb/fppoly.hpp"
#include "lacb/sweep.hpp"
#include "lacb/zpoly.hpp"

namespace lacb {

std::vector<std::uint64_t> sieve_primes(std::uint64_t x) {
    if (x < 2) throw std::domain_error("sieve_primes: x >= 2 required");
    std::vector<bool> composite(x + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= x; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
    }
    return primes;
}

PrimeSweepReport prime_sweep(const IntPoly& f, std::uint64_t x, bool parallel) {
    if (f.is_zero()) throw std::domain_error("prime_sweep: zero polynomial");
    PrimeSweepReport rep;
    rep.poly_id = to_string(f);
    rep.x_max = x;
    std::vector<std::uint64_t> primes = sieve_primes(x);
    std::vector<int> counts =
        parallel ? sweep::np_over_primes(f, primes) : sweep::np_over_primes_serial(f, primes);
    rep.pi_x = primes.size();
    mpz_class total = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (counts[i] == -2) {
            rep.excluded.push_back(primes[i]);
            continue;
        }
        rep.entries.emplace_back(primes[i], counts[i]);
        rep.count_by_value[counts[i]]++;
        total += counts[i];
    }
    rep.mean = mpq_class(total, mpz_class(rep.pi_x));
    rep.mean.canonicalize();
    return rep;
}

mpq_class kronecker_average(const IntPoly& f, std::uint64_t x) {
    if (content(f) != 1) throw std::domain_error("kronecker_average: content-1 polynomial required");
    return prime_sweep(f, x).mean;
}

mpq_class density_p0(const IntPoly& f, std::uint64_t x) {
    PrimeSweepReport rep = prime_sweep(f, x);
    std::uint64_t zeros = rep.count_by_value.count(0) ? rep.count_by_value.at(0) : 0;
    mpq_class d(mpz_class(zeros), mpz_class(rep.pi_x));
    d.canonicalize();
    return d;
}

std::pair<mpq_class, std::vector<std::uint64_t>> density_pmax(const IntPoly& f, std::uint64_t x) {
    PrimeSweepReport rep = prime_sweep(f, x);
    const int degree = (int)f.degree();
    std::vector<std::uint64_t> witnesses;
    for (const auto& [p, np] : rep.entries)
        if (np == degree) witnesses.push_back(p);
    mpq_class d(mpz_class(witnesses.size()), mpz_class(rep.pi_x));
    d.canonicalize();
    return {d, witnesses};
}

std::vector<BiasRow> chebyshev_bias(const IntPoly& f,
                                    const std::vector<std::uint64_t>& checkpoints) {
    if (checkpoints.empty()) return {};
    std::uint64_t xmax = *std::max_element(checkpoints.begin(), checkpoints.end());
    PrimeSweepReport rep = prime_sweep(f, xmax);

    std::vector<BiasRow> rows;
    for (std::uint64_t x : checkpoints) {
        BiasRow row;
        row.x = x;
        std::uint64_t included = 0;
        for (const auto& [p, np] : rep.entries) {
            if (p > x) break;
            row.histogram[np]++;
            ++included;
            if (np == 0) ++row.count0;
            if (np == 2) ++row.count2;
        }
        std::uint64_t excluded = 0;
        for (std::uint64_t p : rep.excluded)
            if (p <= x) ++excluded;
        row.pi_x = included + excluded;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::map<long, std::uint64_t> residue_histogram(const IntPoly& f, long q, std::uint64_t x,
                                                const IntPoly* baseline) {
    if (q < 1) throw std::domain_error("residue_histogram: q >= 1 required");
    std::vector<std::uint64_t> primes = sieve_primes(x);
    std::vector<int> a = sweep::np_over_primes(f, primes);
    std::vector<int> b;
    if (baseline) b = sweep::np_over_primes(*baseline, primes);

    std::map<long, std::uint64_t> hist;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (a[i] == -2) continue;
        long v = a[i];
        if (baseline) {
            if (b[i] == -2) continue;
            v -= b[i];
        }
        long g = ((v % q) + q) % q;
        hist[g]++;
    }
    return hist;
}

std::pair<long, long> euler_characteristics(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("euler_characteristics: zero polynomial");
    IntPoly sf = squarefree_part(f);
    return {sf.degree(), sf.degree() == 0 ? 0 : sturm_real_roots(sf)};
}

// ---------------------------------------------------------------------------
// irreducibility proportion over the class
// ---------------------------------------------------------------------------

namespace {

void enumerate_specs(long n, long last, long N, std::vector<long>& m,
                     std::uint64_t& total, std::uint64_t& irred) {
    {
        ClassBSpec spec(n, m);
        ++total;
        if (classb_irreducible(spec)) ++irred;
    }
    for (long next = last + (n - 1); next <= N; ++next) {
        m.push_back(next);
        enumerate_specs(n, next, N, m, total, irred);
        m.pop_back();
    }
}

}  // namespace

ArcResult arc_proportion(int N, std::optional<std::uint64_t> sample_budget, std::uint64_t seed) {
    if (N < 2) throw std::domain_error("arc_proportion: N >= 2 required");
    ArcResult res;

    const bool exhaustive = N <= 30 && !sample_budget;
    if (exhaustive) {
        res.exhaustive = true;
        res.convention = "exhaustive enumeration, lexicographic in (n, m)";
        for (long n = 2; n <= N; ++n) {
            std::uint64_t total = 0, irred = 0;
            {
                ClassBSpec trinomial(n, {});
                ++total;
                if (classb_irreducible(trinomial)) ++irred;
            }
            // independent subtrees per first exponent m1 >= 2n-1
#pragma omp parallel for schedule(dynamic) reduction(+ : total, irred)
            for (long m1 = 2 * n - 1; m1 <= N; ++m1) {
                std::vector<long> m{m1};
                std::uint64_t sub_total = 0, sub_irred = 0;
                enumerate_specs(n, m1, N, m, sub_total, sub_irred);
                total += sub_total;
                irred += sub_irred;
            }
            res.total += total;
            res.irreducible += irred;
        }
    } else {
        res.exhaustive = false;
        res.convention =
            "uniform n in [2,N]; gap increments uniform in [n-1, 4n] until the degree cap";
        std::uint64_t budget = sample_budget.value_or(20000);
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < budget; ++i) {
            std::uniform_int_distribution<long> pick_n(2, N);
            long n = pick_n(rng);
            std::vector<long> m;
            long last = n;
            std::uniform_int_distribution<long> gap(n - 1, 4 * n);
            while (true) {
                long next = last + gap(rng);
                if (next > N) break;
                m.push_back(next);
                last = next;
            }
            ClassBSpec spec(n, std::move(m));
            ++res.total;
            if (classb_irreducible(spec)) ++res.irreducible;
        }
    }
    res.proportion = mpq_class(mpz_class(res.irreducible), mpz_class(res.total));
    res.proportion.canonicalize();
    return res;
}

// ---------------------------------------------------------------------------
// section table
// ---------------------------------------------------------------------------

SectionTable table2_report(std::uint64_t x) {
    SectionTable tab;
    tab.primes = sieve_primes(x);

    AlgebraicReal tau = lehmer_root();
    for (int j = 0; j <= 6; ++j) {
        IntPoly sj = section(tau, j);
        FactorSplit s = split_abc(sj);
        const IntPoly& counted = s.C;
        tab.row_is_nonreciprocal_part.push_back(s.C != sj);
        std::vector<int> row = sweep::np_over_primes(counted, tab.primes);
        tab.np_rows.push_back(std::move(row));
        tab.splits.push_back(std::move(s));
    }
    for (long k : {3L, 4L, 12L})
        tab.cyclotomic_rows.push_back(sweep::np_over_primes(cyclotomic(k), tab.primes));
    return tab;
}

}  // namespace lacb
