#include "lacb/factorsplit.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lacb/zpoly.hpp"

namespace lacb {

namespace {


// All k with Phi_k dividing r, where r already is (a divisor of) the
// reciprocal part of the polynomial of interest. multiplicities against
// full_poly.
std::vector<CycFactor> indices_against(const IntPoly& r, const IntPoly& full_poly) {
    std::vector<CycFactor> out;
    long dr = r.degree();
    if (dr <= 0) return out;
    // phi(k) <= dr forces k <= 2 dr^2 (phi(k) >= sqrt(k/2))
    long kmax = 2 * dr * dr + 1;
    for (long k = 1; k <= kmax; ++k) {
        if (euler_phi(k) > dr) continue;
        IntPoly phi = cyclotomic(k);
        if (!div_exact(r, phi)) continue;
        int mult = 0;
        IntPoly rest = full_poly;
        while (auto q = div_exact(rest, phi)) {
            ++mult;
            rest = std::move(*q);
        }
        out.push_back({k, mult});
    }
    return out;
}

}  // namespace

std::vector<CycFactor> cyclotomic_indices(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("cyclotomic_indices: zero polynomial");
    if (f.coeff(0) == 0) throw std::domain_error("cyclotomic_indices: f(0) = 0");
    // every cyclotomic factor is reciprocal up to sign, so divides gcd(f, f*)
    IntPoly r = gcd_z(f, reciprocal(f));
    return indices_against(r, f);
}

FactorSplit split_abc(const IntPoly& f) {
    if (f.is_zero() || f.coeff(0) == 0)
        throw std::domain_error("split_abc: need f != 0 with f(0) != 0");
    const IntPoly fprim = primitive_part(f);

    FactorSplit s;
    s.A = IntPoly{1};
    IntPoly r0 = gcd_z(fprim, reciprocal(fprim));
    s.cyclotomic = indices_against(r0, fprim);
    IntPoly rest = fprim;
    for (const auto& [k, mult] : s.cyclotomic) {
        IntPoly phi = cyclotomic(k);
        for (int i = 0; i < mult; ++i) {
            s.A = s.A * phi;
            rest = *div_exact(rest, phi);
        }
    }

    // remaining reciprocal content of f/A; when no cyclotomic factor was
    // removed this is r0 itself
    IntPoly r = s.cyclotomic.empty() ? r0 : gcd_z(rest, reciprocal(rest));
    if (r.degree() > 0) {
        // must be cyclotomic-free, since the cyclotomic search was exhaustive
        auto residual = indices_against(r, r);
        if (!residual.empty())
            throw std::logic_error("split_abc: cyclotomic factor escaped the index scan");
    }
    s.B = r;
    s.C = *div_exact(rest, s.B);
    s.conjecture_b_holds = s.B.degree() == 0;

    IntPoly recon = s.A * s.B * s.C;
    if (recon != fprim && recon != -fprim)
        throw std::logic_error("split_abc: reconstruction mismatch");
    return s;
}

SelmerVerdict selmer_rule(long n) {
    if (n < 2) throw std::domain_error("selmer_rule: n >= 2 required");
    return n % 6 == 5 ? SelmerVerdict::splits_phi6 : SelmerVerdict::irreducible;
}

bool finch_jones(long n, long m1) {
    ClassBSpec spec(n, {m1});  // validates the quadrinomial
    long e1 = std::gcd(m1, n - 1);
    long e2 = std::gcd(n, m1 - 1);
    return m1 % (2 * e1) != 0 && n % (2 * e2) != 0;
}

bool classb_irreducible(const ClassBSpec& spec) {
    IntPoly f = spec.to_poly();
    return gcd_z(f, reciprocal(f)).degree() == 0;
}

std::string split_to_json(const FactorSplit& s) {
    std::ostringstream os;
    os << "{\"A\":[";
    for (std::size_t i = 0; i < s.cyclotomic.size(); ++i) {
        if (i) os << ',';
        os << "{\"k\":" << s.cyclotomic[i].k << ",\"mult\":" << s.cyclotomic[i].mult << '}';
    }
    os << "],\"B\":\"" << to_string(s.B) << "\",\"C\":\"" << to_string(s.C)
       << "\",\"conjB\":" << (s.conjecture_b_holds ? "true" : "false") << '}';
    return os.str();
}

}  // namespace lacb
