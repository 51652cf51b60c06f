#ifndef LACB_SWEEP_HPP
#define LACB_SWEEP_HPP

// Data-parallel kernels (OpenMP) with serial reference implementations kept
// for testing. Both sides produce bitwise-identical, canonically ordered
// results; the bench tool compares their throughput.

#include <cstdint>
#include <set>
#include <vector>

#include "lacb/intpoly.hpp"

namespace lacb::sweep {

// -2 marks primes where f vanishes identically mod p (excluded upstream).
std::vector<int> np_over_primes_serial(const IntPoly& f,
                                       const std::vector<std::uint64_t>& primes);
std::vector<int> np_over_primes(const IntPoly& f,
                                const std::vector<std::uint64_t>& primes);

struct ConjBResult {
    std::set<long> phi_set;
    bool b_trivial_all = true;
    long first_violation = -1;  // N of the first non-trivial B, if any
};

// split_abc over -1+x+x^n+x^{m1}+x^N for N in [n_lo, n_hi].
ConjBResult conjb_scan_serial(long n, long m1, long n_lo, long n_hi);
ConjBResult conjb_scan(long n, long m1, long n_lo, long n_hi);

// Thread-count override for the OpenMP kernels; 0 keeps the runtime default.
void set_jobs(int jobs);

}  // namespace lacb::sweep

#endif
