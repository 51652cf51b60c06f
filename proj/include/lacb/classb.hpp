#ifndef LACB_CLASSB_HPP
#define LACB_CLASSB_HPP

// Exponent data (n; m_1,...,m_s) for the lacunary polynomials
//   -1 + x + x^n + x^{m_1} + ... + x^{m_s}
// with the distanciation constraints m_1 - n >= n-1 and
// m_{q+1} - m_q >= n-1. These are the "class B" inputs everything else
// screens, splits and sweeps.

#include <optional>
#include <string>
#include <vector>

#include "lacb/intpoly.hpp"

namespace lacb {

struct ClassBSpec {
    long n = 2;
    std::vector<long> m;

    // Validates n >= 2 and the distanciation constraints; throws
    // std::invalid_argument otherwise.
    ClassBSpec(long n_, std::vector<long> m_);

    long degree() const { return m.empty() ? n : m.back(); }
    long s() const { return (long)m.size(); }

    IntPoly to_poly() const;

    // Shorthand text form "B:n=12;m=31,44,63" ("B:n=12" when s = 0).
    std::string to_string() const;
    static ClassBSpec parse(const std::string& text);
};

// Accepts either the class-B shorthand or the plain monomial-sum grammar.
IntPoly parse_poly_or_classb(const std::string& text);

}  // namespace lacb

#endif
