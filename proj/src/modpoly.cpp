#include "lacb/modpoly.hpp"

#include <gmpxx.h>

#include <mutex>
#include <stdexcept>

namespace lacb::modp {

u64 powmod(u64 base, u64 exp, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("invmod: zero");
    return powmod(a, p - 2, p);
}

void trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

int deg(const Vec& v) { return (int)v.size() - 1; }

Vec add(const Vec& a, const Vec& b, u64 p) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = addmod(x, y, p);
    }
    trim(r);
    return r;
}

Vec sub(const Vec& a, const Vec& b, u64 p) {
    Vec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = submod(x, y, p);
    }
    trim(r);
    return r;
}

Vec mul(const Vec& a, const Vec& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

void make_monic(Vec& a, u64 p) {
    if (a.empty() || a.back() == 1) return;
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
}

void rem_inplace(Vec& a, const Vec& b, u64 p) {
    if (b.empty()) throw std::domain_error("rem: division by zero polynomial");
    const int db = deg(b);
    u64 inv_lb = invmod(b.back(), p);
    while (deg(a) >= db) {
        const int da = deg(a);
        u64 q = mulmod(a.back(), inv_lb, p);
        if (q != 0) {
            for (int i = 0; i <= db; ++i)
                a[da - db + i] = submod(a[da - db + i], mulmod(q, b[i], p), p);
        }
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
}

Vec gcd(Vec a, Vec b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        rem_inplace(a, b, p);
        std::swap(a, b);
    }
    make_monic(a, p);
    return a;
}

Vec divexact(const Vec& a, const Vec& b, u64 p) {
    if (b.empty()) throw std::domain_error("divexact: division by zero polynomial");
    if (a.empty()) return {};
    if (deg(a) < deg(b)) throw std::domain_error("divexact: not divisible");
    Vec q(deg(a) - deg(b) + 1, 0);
    Vec rem = a;
    u64 inv_lb = invmod(b.back(), p);
    while (deg(rem) >= deg(b)) {
        int shift = deg(rem) - deg(b);
        u64 qc = mulmod(rem.back(), inv_lb, p);
        q[shift] = qc;
        for (int i = 0; i <= deg(b); ++i)
            rem[shift + i] = submod(rem[shift + i], mulmod(qc, b[i], p), p);
        trim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) throw std::domain_error("divexact: not divisible");
    return q;
}

Vec pow_x_mod(u64 e, const Vec& m, u64 p) {
    if (deg(m) < 1) throw std::domain_error("pow_x_mod: constant modulus");
    // repeated squaring over the bits of e, high to low
    Vec r{1};
    int hi = 63;
    while (hi > 0 && !((e >> hi) & 1)) --hi;
    for (int i = hi; i >= 0; --i) {
        r = mul(r, r, p);
        rem_inplace(r, m, p);
        if ((e >> i) & 1) {
            r.insert(r.begin(), 0);  // multiply by x
            trim(r);
            rem_inplace(r, m, p);
        }
    }
    return r;
}

Vec powmod_poly(const Vec& base, u64 e, const Vec& m, u64 p) {
    if (deg(m) < 1) throw std::domain_error("powmod_poly: constant modulus");
    Vec r{1};
    Vec b = base;
    rem_inplace(b, m, p);
    while (e) {
        if (e & 1) {
            r = mul(r, b, p);
            rem_inplace(r, m, p);
        }
        e >>= 1;
        if (e) {
            b = mul(b, b, p);
            rem_inplace(b, m, p);
        }
    }
    return r;
}

Vec derivative(const Vec& a, u64 p) {
    if (a.size() <= 1) return {};
    Vec r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
    trim(r);
    return r;
}

const std::vector<u64>& gcd_primes() {
    static std::vector<u64> primes;
    static std::once_flag once;
    std::call_once(once, [] {
        mpz_class q = (mpz_class(1) << 62) + 1;
        for (int i = 0; i < 64; ++i) {
            mpz_class next;
            mpz_nextprime(next.get_mpz_t(), q.get_mpz_t());
            primes.push_back(mpz_get_ui(next.get_mpz_t()));
            q = next;
        }
    });
    return primes;
}

}  // namespace lacb::modp
