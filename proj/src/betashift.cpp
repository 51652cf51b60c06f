#include "lacb/betashift.hpp"

#include <algorithm>
#include <stdexcept>

#include "lacb/zpoly.hpp"

namespace lacb {

namespace {
constexpr unsigned kMaxBits = 4096;
}

AlgebraicReal::AlgebraicReal(IntPoly poly, mpq_class lo, mpq_class hi)
    : poly_(std::move(poly)), st_(std::make_shared<State>()) {
    if (poly_.degree() < 1) throw std::invalid_argument("AlgebraicReal: nonconstant polynomial required");
    if (!(lo < hi)) throw std::invalid_argument("AlgebraicReal: empty interval");
    int slo = sign_at(poly_, lo), shi = sign_at(poly_, hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("AlgebraicReal: no sign change across the interval");
    SturmChain chain(poly_);
    if (chain.count_interval(lo, hi) != 1)
        throw std::invalid_argument("AlgebraicReal: interval does not isolate a single root");
    st_->lo = std::move(lo);
    st_->hi = std::move(hi);
}

std::pair<mpq_class, mpq_class> AlgebraicReal::interval() const {
    std::lock_guard lk(st_->mu);
    return {st_->lo, st_->hi};
}

std::pair<mpq_class, mpq_class> AlgebraicReal::refine(unsigned bits) const {
    std::lock_guard lk(st_->mu);
    mpq_class target(mpz_class(1), mpz_class(1) << std::min(bits, kMaxBits));
    if (st_->lo == st_->hi) return {st_->lo, st_->hi};
    int slo = sign_at(poly_, st_->lo);
    while (st_->hi - st_->lo > target) {
        mpq_class mid = (st_->lo + st_->hi) / 2;
        int sm = sign_at(poly_, mid);
        if (sm == 0) {  // landed exactly on a rational root
            st_->lo = mid;
            st_->hi = mid;
            break;
        }
        if (sm == slo)
            st_->lo = mid;
        else
            st_->hi = mid;
    }
    return {st_->lo, st_->hi};
}

AlgebraicReal AlgebraicReal::inverse() const {
    auto [lo, hi] = interval();
    unsigned bits = 8;
    while (lo <= 0 && 0 <= hi) {
        if (sign_at(poly_, mpq_class(0)) == 0 && lo == hi)
            throw std::domain_error("AlgebraicReal::inverse: the root is 0");
        if (bits > kMaxBits)
            throw std::runtime_error("AlgebraicReal::inverse: cannot separate the interval from 0");
        std::tie(lo, hi) = refine(bits);
        bits *= 2;
    }
    IntPoly q = reciprocal(poly_);
    if (q.lc() < 0) q = -q;
    return AlgebraicReal(std::move(q), 1 / hi, 1 / lo);
}

double AlgebraicReal::approx() const {
    auto [lo, hi] = refine(64);
    return mpq_class((lo + hi) / 2).get_d();
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
    bool equality_checked = false;
    for (unsigned bits = 16; bits <= kMaxBits; bits *= 2) {
        auto [alo, ahi] = a.refine(bits);
        auto [blo, bhi] = b.refine(bits);
        if (ahi < blo) return -1;
        if (bhi < alo) return +1;
        if (!equality_checked && bits >= 128) {
            equality_checked = true;
            IntPoly g = gcd_z(a.poly(), b.poly());
            if (g.degree() > 0) {
                mpq_class lo = std::max(alo, blo), hi = std::min(ahi, bhi);
                // a common root inside both isolating intervals means a = b
                if (lo == hi) {
                    if (sign_at(g, lo) == 0) return 0;
                } else if (sign_at(g, lo) == 0 || SturmChain(g).count_interval(lo, hi) > 0) {
                    return 0;
                }
            }
        }
    }
    throw std::runtime_error("compare: could not separate algebraic numbers");
}

int compare(const AlgebraicReal& a, const mpq_class& q) {
    const int sq = sign_at(a.poly(), q);
    for (unsigned bits = 16; bits <= kMaxBits; bits *= 2) {
        auto [lo, hi] = a.refine(bits);
        if (hi < q) return -1;
        if (q < lo) return +1;
        if (sq == 0) return 0;  // q inside the isolating interval and a root
    }
    throw std::runtime_error("compare: could not separate algebraic number from rational");
}

AlgebraicReal theta_root(long n) {
    if (n < 2) throw std::domain_error("theta_root: n >= 2 required");
    IntPoly f = IntPoly{-1, 1} + IntPoly::monomial(1, n);
    return AlgebraicReal(std::move(f), mpq_class(0), mpq_class(1));
}

const IntPoly& lehmer_polynomial() {
    static const IntPoly L({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    return L;
}

AlgebraicReal lehmer_root() { return AlgebraicReal(lehmer_polynomial(), mpq_class(1), mpq_class(2)); }

AlgebraicReal golden_ratio() { return AlgebraicReal(IntPoly{-1, -1, 1}, mpq_class(1), mpq_class(2)); }

// ---------------------------------------------------------------------------
// Renyi expansion of 1
// ---------------------------------------------------------------------------

namespace {

// residue polynomials modulo the defining polynomial, rational coefficients
using Residue = std::vector<mpq_class>;

Residue shift_reduce(const Residue& r, const IntPoly& q) {
    Residue h(r.size() + 1);
    for (std::size_t i = 0; i < r.size(); ++i) h[i + 1] = r[i];
    const long dq = q.degree();
    while ((long)h.size() - 1 >= dq) {
        while (!h.empty() && h.back() == 0) h.pop_back();
        if ((long)h.size() - 1 < dq) break;
        mpq_class c = h.back() / mpq_class(q.lc());
        long shift = (long)h.size() - 1 - dq;
        for (long i = 0; i <= dq; ++i) h[shift + i] -= c * mpq_class(q.coeffs()[i]);
        h.pop_back();
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
}

// rigorous enclosure of h(x) for x in [lo, hi], interval Horner
std::pair<mpq_class, mpq_class> enclose(const Residue& h, const mpq_class& lo, const mpq_class& hi) {
    mpq_class alo = 0, ahi = 0;
    for (std::size_t i = h.size(); i-- > 0;) {
        mpq_class p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        mpq_class nlo = std::min(std::min(p1, p2), std::min(p3, p4));
        mpq_class nhi = std::max(std::max(p1, p2), std::max(p3, p4));
        alo = nlo + h[i];
        ahi = nhi + h[i];
    }
    return {alo, ahi};
}

// exact test "h(beta) == c" via a gcd with the defining polynomial
bool value_equals(const Residue& h, const mpq_class& c, const AlgebraicReal& beta) {
    Residue d = h;
    if (d.empty()) d.resize(1, mpq_class(0));
    d[0] -= c;
    bool all_zero = true;
    mpz_class denom_lcm = 1;
    for (const auto& v : d) {
        if (v != 0) all_zero = false;
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    if (all_zero) return true;
    std::vector<mpz_class> zc(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        mpq_class scaled = d[i] * denom_lcm;
        zc[i] = scaled.get_num();  // denominator is 1 by construction
    }
    IntPoly hz{std::move(zc)};
    IntPoly g = gcd_z(hz, beta.poly());
    if (g.degree() < 1) return false;
    auto [lo, hi] = beta.interval();
    if (lo == hi) return sign_at(g, lo) == 0;
    // g divides the defining polynomial, so a root of g inside the isolating
    // interval can only be beta itself (and the endpoints are never roots)
    return SturmChain(squarefree_part(g)).count_interval(lo, hi) > 0;
}

}  // namespace

BetaExpansion renyi_expansion(const AlgebraicReal& beta, long k) {
    if (k < 1) throw std::domain_error("renyi_expansion: k >= 1 required");
    if (compare(beta, mpq_class(1)) <= 0)
        throw std::domain_error("renyi_expansion: beta must exceed 1");
    if (compare(beta, golden_ratio()) > 0)
        throw std::domain_error("renyi_expansion: beta above the golden ratio (alphabet {0,1} only)");

    const IntPoly& q = beta.poly();
    BetaExpansion out;
    Residue r{mpq_class(1)};  // T^0(1) = 1

    for (long i = 1; i <= k; ++i) {
        Residue h = shift_reduce(r, q);  // value beta * T^{i-1}(1) in [0, beta)
        int digit = -1;
        unsigned used_bits = 0;
        for (unsigned bits = 64; bits <= kMaxBits && digit < 0; bits *= 2) {
            auto [lo, hi] = beta.refine(bits);
            auto [vlo, vhi] = enclose(h, lo, hi);
            used_bits = bits;
            if (vhi < 1)
                digit = 0;
            else if (vlo > 1)
                digit = 1;
            else if (vlo == vhi)  // the orbit value is an exact rational
                digit = (vlo >= 1) ? 1 : 0;
        }
        if (digit < 0) {
            // decision boundary: the value may be exactly 1
            if (value_equals(h, mpq_class(1), beta))
                digit = 1;
            else
                throw std::runtime_error("renyi_expansion: digit undecided at precision cap");
        }
        out.digits.push_back(digit);
        out.precision_bits.push_back(used_bits);
        if (digit == 1) out.exponents.push_back(i);

        r = h;
        if (digit == 1) {
            if (r.empty()) r.resize(1, mpq_class(0));
            r[0] -= 1;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();

        if (r.empty()) {  // orbit hit 0 exactly: finite expansion
            out.terminated = true;
            break;
        }
        // the residue may still represent 0 when the defining polynomial is
        // reducible; only test when the enclosure cannot rule it out
        auto [lo, hi] = beta.interval();
        auto [vlo, vhi] = enclose(r, lo, hi);
        if (vlo <= 0) {
            if (value_equals(r, mpq_class(0), beta)) {
                out.terminated = true;
                break;
            }
        }
    }
    return out;
}

bool parry_admissible(const std::vector<int>& digits) {
    const std::size_t n = digits.size();
    for (std::size_t shift = 1; shift < n; ++shift) {
        // tail digits[shift..] must be < digits in dictionary order; a tail
        // that runs out while still equal is a proper prefix, hence smaller
        for (std::size_t j = 0; shift + j < n; ++j) {
            if (digits[shift + j] < digits[j]) break;
            if (digits[shift + j] > digits[j]) return false;
        }
    }
    return true;
}

IntPoly section(const AlgebraicReal& beta, int j) {
    if (j < 0) throw std::domain_error("section: j >= 0 required");
    const long need = j + 2;
    for (long k = 128; k <= 1 << 20; k *= 2) {
        BetaExpansion e = renyi_expansion(beta, k);
        if ((long)e.exponents.size() >= need) {
            IntPoly f{-1};
            for (long i = 0; i < need; ++i) f = f + IntPoly::monomial(1, e.exponents[i]);
            return f;
        }
        if (e.terminated)
            throw std::domain_error("section: expansion is finite with too few 1-digits");
    }
    throw std::runtime_error("section: exponent budget exhausted");
}

std::vector<mpq_class> gap_ratios(const std::vector<long>& exponents) {
    if (exponents.size() < 2) throw std::domain_error("gap_ratios: need at least two exponents");
    std::vector<mpq_class> out;
    out.reserve(exponents.size() - 1);
    for (std::size_t i = 0; i + 1 < exponents.size(); ++i) {
        if (exponents[i] == 0) throw std::domain_error("gap_ratios: zero exponent");
        mpq_class r(exponents[i + 1], exponents[i]);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

}  // namespace lacb
