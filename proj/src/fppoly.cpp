#include "lacb/fppoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lacb {

FpPoly reduce(const IntPoly& f, std::uint64_t p) {
    FpPoly r;
    r.p = p;
    r.c.resize(f.coeffs().size());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        r.c[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
    modp::trim(r.c);
    return r;
}

FpPoly powmod_x(std::uint64_t p, const FpPoly& f) {
    if (f.degree() < 1) throw std::domain_error("powmod_x: constant modulus");
    FpPoly r;
    r.p = f.p;
    r.c = modp::pow_x_mod(p, f.c, f.p);
    return r;
}

int np_count(const IntPoly& f, std::uint64_t p) {
    FpPoly fp = reduce(f, p);
    if (fp.is_zero()) throw std::domain_error("np_count: f vanishes identically mod p");
    if (fp.degree() == 0) return 0;
    // gcd(x^p - x, f mod p) is the product of the distinct linear factors
    modp::Vec h = modp::pow_x_mod(p, fp.c, p);
    if (h.size() < 2) h.resize(2, 0);
    h[1] = modp::submod(h[1], 1, p);
    modp::trim(h);
    modp::Vec g = modp::gcd(fp.c, h, p);
    return std::max(0, modp::deg(g));
}

namespace {

// Radical over F_p: product of the distinct irreducible factors, monic.
// Peels gcd(v, v') layers; a vanishing derivative means v = w(x)^p.
modp::Vec radical_fp(modp::Vec v, std::uint64_t p) {
    using namespace modp;
    make_monic(v, p);
    Vec result{1};
    while (deg(v) > 0) {
        Vec d = derivative(v, p);
        if (d.empty()) {
            Vec w((v.size() - 1) / p + 1);
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[i * p];
            v = std::move(w);
            continue;
        }
        Vec g = gcd(v, d, p);
        Vec fresh = divexact(v, g, p);  // squarefree slice
        Vec overlap = gcd(result, fresh, p);
        if (deg(overlap) > 0) fresh = divexact(fresh, overlap, p);
        result = mul(result, fresh, p);
        v = std::move(g);
    }
    make_monic(result, p);
    return result;
}

}  // namespace

std::vector<int> degree_pattern(const IntPoly& f, std::uint64_t p) {
    FpPoly fp = reduce(f, p);
    if (fp.is_zero()) throw std::domain_error("degree_pattern: f vanishes identically mod p");
    if (fp.degree() == 0) return {};
    using namespace modp;
    Vec v = radical_fp(fp.c, p);

    // distinct-degree factorization of the radical
    std::vector<int> pattern;
    Vec h{0, 1};
    int d = 0;
    while (deg(v) > 0 && 2 * (d + 1) <= deg(v)) {
        ++d;
        h = powmod_poly(h, p, v, p);
        Vec hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = submod(hx[1], 1, p);
        trim(hx);
        Vec g = gcd(v, hx, p);
        if (deg(g) > 0) {
            for (int i = 0; i < deg(g) / d; ++i) pattern.push_back(d);
            v = divexact(v, g, p);
            if (deg(v) > 0) rem_inplace(h, v, p);
        }
    }
    if (deg(v) > 0) pattern.push_back(deg(v));
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

}  // namespace lacb
