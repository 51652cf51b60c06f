#include "lacb/newform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lacb/fppoly.hpp"
#include "lacb/stats.hpp"

namespace lacb {

int legendre(const mpz_class& a, std::uint64_t p) {
    if (p == 2 || p < 2) throw std::domain_error("legendre: odd prime required");
    std::uint64_t r = mpz_fdiv_ui(a.get_mpz_t(), p);
    if (r == 0) return 0;
    std::uint64_t e = modp::powmod(r, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::domain_error("legendre: modulus is not prime");
}

int jacobi(mpz_class a, mpz_class n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::domain_error("jacobi: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            std::uint64_t r8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (r8 == 3 || r8 == 5) t = -t;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

int np_formula_n2(std::uint64_t p) {
    if (p == 5) return 1;
    std::uint64_t r = p % 5;
    return (r == 1 || r == 4) ? 2 : 0;
}

int qseries_n2_coeff(std::uint64_t m) {
    // (q - q^2 - q^3 + q^4)/(1 - q^5): period-5 pattern 0, 1, -1, -1, 1
    static const int pattern[5] = {0, 1, -1, -1, 1};
    return pattern[m % 5];
}

bool NpConstraint::contains(int v) const {
    return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
}

std::string NpConstraint::to_string() const {
    if (is_exact()) return std::to_string(allowed[0]);
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < allowed.size(); ++i) {
        if (i) os << '|';
        os << allowed[i];
    }
    os << '}';
    return os.str();
}

NpConstraint np_formula_n3(std::uint64_t p) {
    if (p == 31) return {{2}};
    return legendre(p, 31) == 1 ? NpConstraint{{0, 3}} : NpConstraint{{1}};
}

bool qform_represents(long a, long b, long c, std::uint64_t p) {
    const long disc = b * b - 4 * a * c;
    if (a <= 0 || disc >= 0) throw std::domain_error("qform_represents: positive definite form required");
    // (2ax + by)^2 + |disc| y^2 = 4ap
    const mpz_class target = mpz_class(4) * a * mpz_class(p);
    const long absd = -disc;
    for (long y = 0;; ++y) {
        mpz_class rest = target - mpz_class(absd) * y * y;
        if (rest < 0) break;
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class u;
            mpz_sqrt(u.get_mpz_t(), rest.get_mpz_t());
            for (int sign : {1, -1}) {
                mpz_class num = sign * u - mpz_class(b) * y;
                if (num % (2 * a) == 0) return true;
                if (y == 0) break;  // u and -u coincide up to (x,y) -> (-x,-y)
            }
        }
    }
    return false;
}

NpConstraint np_formula_n4(std::uint64_t p) {
    if (p == 283) return {{3}};
    if (qform_represents(1, 1, 71, p)) return {{0, 4}};
    if (qform_represents(7, 5, 11, p)) return {{1}};
    if (legendre(p, 283) == -1) return {{0, 2}};
    throw std::logic_error("np_formula_n4: prime escaped the class partition");
}

const std::vector<QCoeff283>& newform283_coeffs() {
    static const std::vector<QCoeff283> coeffs = [] {
        std::vector<QCoeff283> a(43);
        auto re = [&](int m, long r) { a[m] = {r, 0}; };
        auto im = [&](int m, long s) { a[m] = {0, s}; };
        re(1, 1);
        im(2, 1);
        im(3, -1);
        re(4, -1);
        im(5, -1);
        re(6, 2);
        re(7, -1);
        re(9, -1);
        re(10, 2);
        re(11, 1);
        im(12, 1);
        re(13, 1);
        im(14, -1);
        re(15, -2);
        re(16, -1);
        im(18, -1);
        im(19, 1);
        im(20, 1);
        im(21, 1);
        im(22, 1);
        re(23, -1);
        re(25, -1);
        im(26, 1);
        re(28, 1);
        re(29, -1);
        im(30, -2);
        im(31, 1);
        im(32, -1);
        im(33, -1);
        im(35, 1);
        re(36, 1);
        re(38, -2);
        im(39, -1);
        re(41, 1);
        re(42, -2);
        return a;
    }();
    return coeffs;
}

bool newform283_check(std::uint64_t p) {
    const auto& a = newform283_coeffs();
    if (p >= a.size()) throw std::domain_error("newform283_check: p beyond the transcribed expansion");
    long lhs = 1 + a[p].square_real() - legendre(p, 283);
    IntPoly f{-1, 1, 0, 0, 1};
    return lhs == np_count(f, p);
}

std::vector<std::uint64_t> n7_max_sweep(std::uint64_t x) {
    IntPoly f = IntPoly{-1, 1} + IntPoly::monomial(1, 7);
    return density_pmax(f, x).second;
}

}  // namespace lacb
