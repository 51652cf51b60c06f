#include <doctest.h>

#include "lacb/stats.hpp"
#include "lacb/sweep.hpp"

using namespace lacb;

TEST_CASE("parallel np sweep equals the serial reference") {
    auto primes = sieve_primes(3000);
    for (const char* s : {"-1+x+x^2", "-1+x+x^7", "-1+x+x^12+x^31", "6x^2+3x"}) {
        IntPoly f = parse_poly(s);
        CHECK(sweep::np_over_primes(f, primes) == sweep::np_over_primes_serial(f, primes));
    }
    // excluded marker: 6x^2+3x vanishes mod 3
    IntPoly g = parse_poly("3x+6x^2");
    auto v = sweep::np_over_primes(g, primes);
    CHECK(v[1] == -2);  // p = 3
}

TEST_CASE("parallel family scan equals the serial reference") {
    auto par = sweep::conjb_scan(3, 5, 7, 96);
    auto ser = sweep::conjb_scan_serial(3, 5, 7, 96);
    CHECK(par.phi_set == ser.phi_set);
    CHECK(par.b_trivial_all == ser.b_trivial_all);
    CHECK(par.first_violation == ser.first_violation);
    CHECK(par.phi_set == std::set<long>{3, 6});
}

TEST_CASE("results are independent of the thread count") {
    auto primes = sieve_primes(2000);
    IntPoly f = parse_poly("-1+x+x^5+x^14");
    sweep::set_jobs(1);
    auto one = sweep::np_over_primes(f, primes);
    auto scan_one = sweep::conjb_scan(4, 8, 11, 60);
    sweep::set_jobs(4);
    auto four = sweep::np_over_primes(f, primes);
    auto scan_four = sweep::conjb_scan(4, 8, 11, 60);
    sweep::set_jobs(0);
    CHECK(one == four);
    CHECK(scan_one.phi_set == scan_four.phi_set);
    CHECK(scan_one.b_trivial_all == scan_four.b_trivial_all);
}
