#include "lacb/intpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lacb {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& v) {
    IntPoly r;
    if (v != 0) r.c_.push_back(v);
    return r;
}

IntPoly IntPoly::monomial(const mpz_class& coeff, std::size_t exp) {
    IntPoly r;
    if (coeff != 0) {
        r.c_.assign(exp + 1, mpz_class(0));
        r.c_[exp] = coeff;
    }
    return r;
}

IntPoly IntPoly::x() { return monomial(1, 1); }

const mpz_class& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& IntPoly::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

IntPoly operator-(const IntPoly& f) {
    std::vector<mpz_class> c = f.coeffs();
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    std::vector<mpz_class> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) + g.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    std::vector<mpz_class> c(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i) - g.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<mpz_class> c(f.coeffs().size() + g.coeffs().size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < g.coeffs().size(); ++j)
            c[i + j] += f.coeffs()[i] * g.coeffs()[j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator*(const mpz_class& a, const IntPoly& f) {
    if (a == 0) return {};
    std::vector<mpz_class> c = f.coeffs();
    for (auto& v : c) v *= a;
    return IntPoly(std::move(c));
}

IntPoly reciprocal(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("reciprocal of zero polynomial");
    std::vector<mpz_class> c(f.coeffs().rbegin(), f.coeffs().rend());
    return IntPoly(std::move(c));
}

bool is_reciprocal(const IntPoly& f) { return !f.is_zero() && reciprocal(f) == f; }

mpz_class sq_norm(const IntPoly& f) {
    mpz_class s = 0;
    for (const auto& a : f.coeffs()) s += a * a;
    return s;
}

long term_count(const IntPoly& f) {
    long n = 0;
    for (const auto& a : f.coeffs())
        if (a != 0) ++n;
    return n;
}

mpz_class content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& a : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero()) return {};
    mpz_class ct = content(f);
    std::vector<mpz_class> c = f.coeffs();
    for (auto& v : c) v /= ct;
    return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& f) {
    if (f.coeffs().size() <= 1) return {};
    std::vector<mpz_class> c(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) c[i - 1] = mpz_class(i) * f.coeffs()[i];
    return IntPoly(std::move(c));
}

mpz_class eval(const IntPoly& f, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) r = r * x + *it;
    return r;
}

mpq_class eval(const IntPoly& f, const mpq_class& x) {
    mpq_class r = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) r = r * x + *it;
    return r;
}

int sign_at(const IntPoly& f, const mpq_class& x) {
    if (f.is_zero()) return 0;
    // sign of q^deg * f(p/q) = sum_i a_i p^i q^(deg-i), q > 0
    const mpz_class& p = x.get_num();
    const mpz_class& q = x.get_den();
    mpz_class acc = 0, ppow = 1;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        acc = acc * q + f.coeffs()[i] * ppow;
        ppow *= p;
    }
    return sgn(acc);
}

std::optional<IntPoly> div_exact(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (f.is_zero()) return IntPoly{};
    if (f.degree() < g.degree()) return std::nullopt;
    std::vector<mpz_class> rem = f.coeffs();
    std::vector<mpz_class> quot(f.degree() - g.degree() + 1, mpz_class(0));
    const auto& gc = g.coeffs();
    for (long i = f.degree() - g.degree(); i >= 0; --i) {
        mpz_class& top = rem[i + g.degree()];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), g.lc().get_mpz_t());
        if (r != 0) return std::nullopt;
        quot[i] = q;
        for (std::size_t j = 0; j < gc.size(); ++j) rem[i + j] -= q * gc[j];
    }
    for (const auto& v : rem)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

std::string to_string(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const mpz_class& a = f.coeffs()[i];
        if (a == 0) continue;
        if (a < 0)
            os << '-';
        else if (!first)
            os << '+';
        mpz_class mag = abs(a);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << 'x';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    mpz_class number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start) throw std::invalid_argument("polynomial parse: digit expected at '" + s.substr(start) + "'");
        return mpz_class(s.substr(start, i - start));
    }

    // term := INT | INT? 'x' ('^' INT)?
    std::pair<mpz_class, unsigned long> term() {
        mpz_class coeff = 1;
        bool have_coeff = false;
        if (std::isdigit((unsigned char)peek())) {
            coeff = number();
            have_coeff = true;
        }
        skip_ws();
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            skip_ws();
            unsigned long e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                mpz_class ez = number();
                if (!ez.fits_ulong_p()) throw std::invalid_argument("polynomial parse: exponent too large");
                e = ez.get_ui();
            }
            return {coeff, e};
        }
        if (!have_coeff) throw std::invalid_argument("polynomial parse: term expected in '" + s + "'");
        return {coeff, 0};
    }
};

}  // namespace

IntPoly parse_poly(const std::string& text) {
    Parser p(text);
    if (p.done()) throw std::invalid_argument("polynomial parse: empty input");
    IntPoly acc;
    bool first = true;
    while (!p.done()) {
        int sign = 1;
        char c = p.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++p.i;
        } else if (!first) {
            throw std::invalid_argument("polynomial parse: '+' or '-' expected near '" + text.substr(p.i) + "'");
        }
        if (p.done()) throw std::invalid_argument("polynomial parse: dangling sign");
        auto [coeff, exp] = p.term();
        acc = acc + IntPoly::monomial(sign * coeff, exp);
        first = false;
    }
    return acc;
}

}  // namespace lacb
