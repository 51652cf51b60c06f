#ifndef LACB_INTPOLY_HPP
#define LACB_INTPOLY_HPP

// Exact integer-coefficient univariate polynomials. IntPoly is the universal
// currency of the library: everything downstream (factor splits, bound
// calculators, sweeps, beta-expansions) speaks it.

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace lacb {

class IntPoly {
  public:
    IntPoly() = default;  // zero polynomial
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const mpz_class& v);
    // coeff * x^exp
    static IntPoly monomial(const mpz_class& coeff, std::size_t exp);
    static IntPoly x();

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return (long)c_.size() - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    // coefficient of x^i, 0 beyond the degree
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& lc() const;  // leading coefficient, nonzero poly only
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  private:
    void trim();
    std::vector<mpz_class> c_;
};

IntPoly operator-(const IntPoly& f);
IntPoly operator+(const IntPoly& f, const IntPoly& g);
IntPoly operator-(const IntPoly& f, const IntPoly& g);
IntPoly operator*(const IntPoly& f, const IntPoly& g);
IntPoly operator*(const mpz_class& a, const IntPoly& f);

// f*(x) = x^deg(f) f(1/x); rejects the zero polynomial.
IntPoly reciprocal(const IntPoly& f);
bool is_reciprocal(const IntPoly& f);

// Squared Euclidean length of the coefficient vector.
mpz_class sq_norm(const IntPoly& f);
// Number of nonzero terms.
long term_count(const IntPoly& f);

mpz_class content(const IntPoly& f);          // >= 0, content(0) = 0
IntPoly primitive_part(const IntPoly& f);     // keeps the sign of lc
IntPoly derivative(const IntPoly& f);

mpz_class eval(const IntPoly& f, const mpz_class& x);
mpq_class eval(const IntPoly& f, const mpq_class& x);
// sign of f(x) in {-1, 0, +1}, computed without building the full value
int sign_at(const IntPoly& f, const mpq_class& x);

// Exact quotient f/g when g | f over Z, otherwise nullopt. g nonzero.
std::optional<IntPoly> div_exact(const IntPoly& f, const IntPoly& g);

// Text form: signed monomial sum in ascending powers, e.g. "-1+x+x^12+x^31".
std::string to_string(const IntPoly& f);
// Parses the monomial-sum grammar (and nothing else; class-B shorthand lives
// in classb.hpp). Throws std::invalid_argument on malformed input.
IntPoly parse_poly(const std::string& text);

}  // namespace lacb

#endif
