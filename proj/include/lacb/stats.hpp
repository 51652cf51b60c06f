#ifndef LACB_STATS_HPP
#define LACB_STATS_HPP

// Prime sieve and the density/average experiments: Kronecker averages,
// zero/maximal densities, Chebyshev bias checkpoints, residue histograms,
// Euler characteristics, the irreducibility proportion scan, and the
// section-table reproducer.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lacb/factorsplit.hpp"
#include "lacb/intpoly.hpp"

namespace lacb {

// All primes <= x, ascending. x >= 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t x);

struct PrimeSweepReport {
    std::string poly_id;
    std::uint64_t x_max = 0;
    std::vector<std::pair<std::uint64_t, int>> entries;  // (p, N_p), sorted by p
    std::vector<std::uint64_t> excluded;  // primes with f = 0 mod p
    std::uint64_t pi_x = 0;               // entries + excluded
    mpq_class mean;                       // sum N_p / pi(x), exact
    std::map<int, std::uint64_t> count_by_value;
};

PrimeSweepReport prime_sweep(const IntPoly& f, std::uint64_t x, bool parallel = true);

// (sum_{p<=x} N_p(f)) / pi(x) as an exact rational; f must have content 1.
mpq_class kronecker_average(const IntPoly& f, std::uint64_t x);

// Fraction of primes <= x with N_p(f) = 0.
mpq_class density_p0(const IntPoly& f, std::uint64_t x);

// Fraction of primes <= x with N_p(f) = deg f, plus the witnesses.
std::pair<mpq_class, std::vector<std::uint64_t>> density_pmax(const IntPoly& f,
                                                              std::uint64_t x);

struct BiasRow {
    std::uint64_t x = 0;
    std::uint64_t count0 = 0;  // N_p = 0
    std::uint64_t count2 = 0;  // N_p = 2
    std::uint64_t pi_x = 0;
    std::map<int, std::uint64_t> histogram;  // full value histogram
};

std::vector<BiasRow> chebyshev_bias(const IntPoly& f,
                                    const std::vector<std::uint64_t>& checkpoints);

// Histogram over residues of N_f(p) mod q, or of N_f(p) - N_baseline(p) mod q
// when a baseline is supplied. Primes where either polynomial vanishes mod p
// are excluded from the mass.
std::map<long, std::uint64_t> residue_histogram(const IntPoly& f, long q,
                                                std::uint64_t x,
                                                const IntPoly* baseline = nullptr);

// (chi_C, chi_R): degree of the squarefree part, and its count of distinct
// real roots.
std::pair<long, long> euler_characteristics(const IntPoly& f);

struct ArcResult {
    mpq_class proportion;
    std::uint64_t total = 0;
    std::uint64_t irreducible = 0;
    bool exhaustive = true;
    std::string convention;  // sampling convention, recorded in every output
};

// Fraction of class-B polynomials of degree <= N that are irreducible.
// Exhaustive for N <= 30; above that, draws sample_budget polynomials with
// gap increments uniform in [n-1, 4n] (declared in `convention`).
ArcResult arc_proportion(int N, std::optional<std::uint64_t> sample_budget = {},
                         std::uint64_t seed = 1);

struct SectionTable {
    std::vector<std::uint64_t> primes;          // the prime columns used
    std::vector<std::vector<int>> np_rows;      // j = 0..6: N_p of S_j or C_j
    std::vector<bool> row_is_nonreciprocal_part;  // true when C_j was used
    std::vector<FactorSplit> splits;            // split of each S_j
    std::vector<std::vector<int>> cyclotomic_rows;  // Phi_3, Phi_4, Phi_12
    bool header_27_flagged = true;  // non-prime column label replaced by 29
};

// N_p rows of the sections S_0..S_6 of the Lehmer-number expansion (via the
// non-reciprocal part when a section is reducible) for all primes <= x.
SectionTable table2_report(std::uint64_t x = 43);

}  // namespace lacb

#endif
