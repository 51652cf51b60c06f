// Micro-benchmark: OpenMP sweep kernels against their serial references.
// Results must match bit for bit; the table reports wall time and speedup.
//
//   lacb_bench [--jobs N] [--heavy]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "lacb/classb.hpp"
#include "lacb/stats.hpp"
#include "lacb/sweep.hpp"

using namespace lacb;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-34s %10.1f ms %10.1f ms   x%-5.2f %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    bool heavy = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc)
            sweep::set_jobs(std::atoi(argv[++i]));
        else if (!std::strcmp(argv[i], "--heavy"))
            heavy = true;
        else {
            std::fprintf(stderr, "usage: %s [--jobs N] [--heavy]\n", argv[0]);
            return 2;
        }
    }

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %13s %13s assessment\n", "workload", "serial", "parallel");

    {
        IntPoly f = ClassBSpec(7, {}).to_poly();
        auto primes = sieve_primes(heavy ? 1000000 : 100000);
        auto t0 = std::chrono::steady_clock::now();
        auto a = sweep::np_over_primes_serial(f, primes);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto b = sweep::np_over_primes(f, primes);
        double tp = ms_since(t0);
        report("np sweep, trinomial n=7", ts, tp, a == b);
    }

    {
        IntPoly f = ClassBSpec(12, {31, 44, 63}).to_poly();
        auto primes = sieve_primes(heavy ? 200000 : 50000);
        auto t0 = std::chrono::steady_clock::now();
        auto a = sweep::np_over_primes_serial(f, primes);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto b = sweep::np_over_primes(f, primes);
        double tp = ms_since(t0);
        report("np sweep, degree-63 section", ts, tp, a == b);
    }

    {
        long n = 3, m1 = heavy ? 17 : 5;
        long n4 = 32 * (m1 + 1);
        auto t0 = std::chrono::steady_clock::now();
        auto a = sweep::conjb_scan_serial(n, m1, m1 + n - 1, n4);
        double ts = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto b = sweep::conjb_scan(n, m1, m1 + n - 1, n4);
        double tp = ms_since(t0);
        report("family scan (splits per N)", ts, tp,
               a.phi_set == b.phi_set && a.b_trivial_all == b.b_trivial_all);
    }

    return 0;
}
