#include "lacb/zpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "lacb/modpoly.hpp"

namespace lacb {

long euler_phi(long k) {
    if (k < 1) throw std::domain_error("euler_phi: k must be >= 1");
    long result = k;
    long n = k;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic(long k) {
    if (k < 1) throw std::domain_error("cyclotomic: k must be >= 1");
    static std::map<long, IntPoly> memo;
    static std::shared_mutex mu;
    {
        std::shared_lock lk(mu);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
    }
    // Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d
    IntPoly num = IntPoly::monomial(1, k) - IntPoly{1};
    for (long d = 1; d * d <= k; ++d) {
        if (k % d) continue;
        if (d < k) {
            auto q = div_exact(num, cyclotomic(d));
            num = std::move(*q);
        }
        long e = k / d;
        if (e != d && e < k) {
            auto q = div_exact(num, cyclotomic(e));
            num = std::move(*q);
        }
    }
    {
        std::unique_lock lk(mu);
        memo.emplace(k, num);
    }
    return num;
}

// ---------------------------------------------------------------------------
// gcd over Z by modular images
// ---------------------------------------------------------------------------

namespace {

IntPoly lift_symmetric(const std::vector<mpz_class>& residues, const mpz_class& modulus) {
    mpz_class half = modulus / 2;
    std::vector<mpz_class> c(residues.size());
    for (std::size_t i = 0; i < residues.size(); ++i)
        c[i] = residues[i] > half ? residues[i] - modulus : residues[i];
    return IntPoly(std::move(c));
}

IntPoly normalize_sign(IntPoly f) {
    if (!f.is_zero() && f.lc() < 0) return -f;
    return f;
}

}  // namespace

IntPoly gcd_z(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd_z(0, 0)");
    if (f.is_zero()) return normalize_sign(primitive_part(g));
    if (g.is_zero()) return normalize_sign(primitive_part(f));

    const IntPoly F = primitive_part(f);
    const IntPoly G = primitive_part(g);

    mpz_class L;
    mpz_gcd(L.get_mpz_t(), F.lc().get_mpz_t(), G.lc().get_mpz_t());

    int min_deg = std::min(F.degree(), G.degree()) + 1;
    std::vector<mpz_class> acc;   // residues of L * monic gcd, CRT-combined
    mpz_class acc_mod = 1;
    int failed_lifts = 0;

    for (modp::u64 p : modp::gcd_primes()) {
        if (mpz_fdiv_ui(F.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(G.lc().get_mpz_t(), p) == 0)
            continue;

        modp::Vec fp(F.degree() + 1), gp(G.degree() + 1);
        for (long i = 0; i <= F.degree(); ++i) fp[i] = mpz_fdiv_ui(F.coeffs()[i].get_mpz_t(), p);
        for (long i = 0; i <= G.degree(); ++i) gp[i] = mpz_fdiv_ui(G.coeffs()[i].get_mpz_t(), p);
        modp::trim(fp);
        modp::trim(gp);

        modp::Vec h = modp::gcd(std::move(fp), std::move(gp), p);
        int dh = modp::deg(h);
        if (dh == 0) return IntPoly{1};
        if (dh > min_deg) continue;  // unlucky prime
        if (dh < min_deg) {          // strictly better degree: restart consensus
            min_deg = dh;
            acc.assign(dh + 1, mpz_class(0));
            acc_mod = 1;
        }

        // scale the monic image by L so the true coefficients are integers
        modp::u64 lp = mpz_fdiv_ui(L.get_mpz_t(), p);
        std::vector<mpz_class> img(dh + 1);
        for (int i = 0; i <= dh; ++i) img[i] = mpz_class(modp::mulmod(h[i], lp, p));

        if (acc_mod == 1) {
            acc = img;
            acc_mod = p;
        } else {
            // pairwise CRT
            mpz_class pz = p, newmod = acc_mod * pz, inv;
            mpz_invert(inv.get_mpz_t(), acc_mod.get_mpz_t(), pz.get_mpz_t());
            for (int i = 0; i <= dh; ++i) {
                mpz_class diff = (img[i] - acc[i]) % pz;
                if (diff < 0) diff += pz;
                acc[i] = acc[i] + acc_mod * ((diff * inv) % pz);
            }
            acc_mod = newmod;
        }

        IntPoly cand = lift_symmetric(acc, acc_mod);
        if (cand.is_zero() || cand.degree() != min_deg) continue;
        cand = normalize_sign(primitive_part(cand));
        if (div_exact(F, cand) && div_exact(G, cand)) return cand;
        // a same-degree unlucky prime may have polluted the lift
        if (++failed_lifts >= 8) {
            acc.clear();
            acc_mod = 1;
            min_deg = std::min(F.degree(), G.degree()) + 1;
            failed_lifts = 0;
        }
    }
    throw std::runtime_error("gcd_z: modular images exhausted without verified lift");
}

// ---------------------------------------------------------------------------
// resultant / discriminant by modular images
// ---------------------------------------------------------------------------

namespace {

// Euclidean resultant over F_p.
modp::u64 resultant_fp(modp::Vec a, modp::Vec b, modp::u64 p) {
    using namespace modp;
    if (a.empty() || b.empty()) return 0;
    u64 res = 1;
    while (true) {
        int da = deg(a), db = deg(b);
        if (db == 0) {
            res = mulmod(res, powmod(b[0], da, p), p);
            return res;
        }
        Vec r = a;
        rem_inplace(r, b, p);
        int dr = deg(r);
        if (r.empty()) return 0;
        // Res(a,b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        if ((da & 1) && (db & 1)) res = p - res;
        res = mulmod(res, powmod(b.back(), da - dr, p), p);
        a = std::move(b);
        b = std::move(r);
    }
}

// log2 of the Hadamard-style bound on |Res(f, g)|
double resultant_bound_log2(const IntPoly& f, const IntPoly& g) {
    auto row_log2 = [](const IntPoly& h) {
        std::size_t max_bits = 1;
        for (const auto& a : h.coeffs())
            if (a != 0) max_bits = std::max(max_bits, mpz_sizeinbase(a.get_mpz_t(), 2));
        return (double)max_bits + 0.5 * std::log2((double)h.coeffs().size());
    };
    return g.degree() * row_log2(f) + f.degree() * row_log2(g) + 2;
}

}  // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    if (f.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.coeffs()[0].get_mpz_t(), g.degree());
        return r;
    }
    if (g.degree() == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.coeffs()[0].get_mpz_t(), f.degree());
        return r;
    }

    const double need_bits = resultant_bound_log2(f, g) + 1;
    mpz_class acc = 0, acc_mod = 1;
    double have_bits = 0;

    for (modp::u64 p : modp::gcd_primes()) {
        if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(g.lc().get_mpz_t(), p) == 0)
            continue;
        modp::Vec fp(f.degree() + 1), gp(g.degree() + 1);
        for (long i = 0; i <= f.degree(); ++i) fp[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
        for (long i = 0; i <= g.degree(); ++i) gp[i] = mpz_fdiv_ui(g.coeffs()[i].get_mpz_t(), p);
        modp::u64 rp = resultant_fp(std::move(fp), std::move(gp), p);

        mpz_class pz = p;
        if (acc_mod == 1) {
            acc = rp;
            acc_mod = pz;
        } else {
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), acc_mod.get_mpz_t(), pz.get_mpz_t());
            mpz_class diff = (mpz_class(rp) - acc) % pz;
            if (diff < 0) diff += pz;
            acc += acc_mod * ((diff * inv) % pz);
            acc_mod *= pz;
        }
        have_bits += 62;
        if (have_bits >= need_bits) break;
    }
    if (have_bits < need_bits) throw std::runtime_error("resultant: prime pool exhausted");
    mpz_class half = acc_mod / 2;
    if (acc > half) acc -= acc_mod;
    return acc;
}

mpz_class discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant: degree >= 1 required");
    mpz_class res = resultant(f, derivative(f));
    long d = f.degree();
    if (((d * (d - 1)) / 2) % 2) res = -res;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    if (r != 0) throw std::logic_error("discriminant: lc does not divide resultant");
    return q;
}

// ---------------------------------------------------------------------------
// Sturm chains
// ---------------------------------------------------------------------------

namespace {

// Remainder of a by b scaled by a positive power of lc(b), primitive part
// taken with sign preserved. Sign-safe for Sturm purposes.
IntPoly pos_scaled_rem(const IntPoly& a, const IntPoly& b) {
    long delta = a.degree() - b.degree();
    if (delta < 0) throw std::logic_error("pos_scaled_rem: degree order");
    // even power of lc(b) is positive
    long e = delta + 1;
    if (e % 2) ++e;
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), b.lc().get_mpz_t(), e);
    IntPoly rem = scale * a;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        long shift = rem.degree() - b.degree();
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.lc().get_mpz_t(), b.lc().get_mpz_t());
        if (r != 0) throw std::logic_error("pos_scaled_rem: scale insufficient");
        rem = rem - q * IntPoly::monomial(1, shift) * b;
    }
    if (rem.is_zero()) return rem;
    IntPoly pp = primitive_part(rem);
    return pp;
}

int sign_at_inf(const IntPoly& f, int side) {
    // side = +1 for +infinity, -1 for -infinity
    if (f.is_zero()) return 0;
    int s = sgn(f.lc());
    if (side < 0 && f.degree() % 2) s = -s;
    return s;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    chain_.push_back(primitive_part(f));
    IntPoly d = derivative(f);
    if (!d.is_zero()) chain_.push_back(primitive_part(d));
    while (chain_.size() >= 2 && chain_.back().degree() > 0) {
        IntPoly r = pos_scaled_rem(chain_[chain_.size() - 2], chain_.back());
        if (r.is_zero()) break;
        chain_.push_back(-r);
    }
    // the chain ends in gcd(f, f'); a nonconstant tail means repeated roots
    squarefree_ = chain_.size() < 2 || chain_.back().degree() == 0;
}

int SturmChain::variations_at(const mpq_class& x) const {
    int var = 0, prev = 0;
    for (const auto& s : chain_) {
        int sg = sign_at(s, x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

int SturmChain::variations_at_inf(int side) const {
    int var = 0, prev = 0;
    for (const auto& s : chain_) {
        int sg = sign_at_inf(s, side);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

int SturmChain::count_interval(const mpq_class& lo, const mpq_class& hi) const {
    if (!(lo < hi)) return 0;
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return variations_at_inf(-1) - variations_at_inf(+1); }

int sturm_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("sturm_real_roots: zero polynomial");
    if (f.degree() == 0) return 0;
    SturmChain chain(f);
    if (!chain.input_squarefree())
        throw std::invalid_argument("sturm_real_roots: input has repeated roots; take squarefree_part first");
    return chain.count_all();
}

IntPoly squarefree_part(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (f.degree() == 0) return IntPoly{1};
    IntPoly g = gcd_z(f, derivative(f));
    if (g.degree() == 0) return normalize_sign(primitive_part(f));
    // g is primitive and divides the primitive part of f (Gauss)
    auto q = div_exact(primitive_part(f), g);
    if (!q) throw std::logic_error("squarefree_part: gcd does not divide");
    return normalize_sign(primitive_part(*q));
}

}  // namespace lacb
