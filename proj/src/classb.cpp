#include "lacb/classb.hpp"

#include <sstream>
#include <stdexcept>

namespace lacb {

ClassBSpec::ClassBSpec(long n_, std::vector<long> m_) : n(n_), m(std::move(m_)) {
    if (n < 2) throw std::invalid_argument("class B: n must be >= 2");
    long prev = n;
    for (std::size_t q = 0; q < m.size(); ++q) {
        long gap_min = n - 1;
        if (m[q] - prev < gap_min)
            throw std::invalid_argument("class B: distanciation violated at m_" + std::to_string(q + 1));
        prev = m[q];
    }
}

IntPoly ClassBSpec::to_poly() const {
    IntPoly f = IntPoly{-1, 1} + IntPoly::monomial(1, n);
    for (long e : m) f = f + IntPoly::monomial(1, e);
    return f;
}

std::string ClassBSpec::to_string() const {
    std::ostringstream os;
    os << "B:n=" << n;
    if (!m.empty()) {
        os << ";m=";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) os << ',';
            os << m[i];
        }
    }
    return os.str();
}

ClassBSpec ClassBSpec::parse(const std::string& text) {
    if (text.rfind("B:", 0) != 0) throw std::invalid_argument("class B shorthand must start with 'B:'");
    std::string body = text.substr(2);
    long n = 0;
    std::vector<long> m;
    std::istringstream is(body);
    std::string part;
    bool have_n = false;
    while (std::getline(is, part, ';')) {
        if (part.rfind("n=", 0) == 0) {
            n = std::stol(part.substr(2));
            have_n = true;
        } else if (part.rfind("m=", 0) == 0) {
            std::istringstream ms(part.substr(2));
            std::string tok;
            while (std::getline(ms, tok, ',')) {
                if (!tok.empty()) m.push_back(std::stol(tok));
            }
        } else if (!part.empty()) {
            throw std::invalid_argument("class B shorthand: unknown field '" + part + "'");
        }
    }
    if (!have_n) throw std::invalid_argument("class B shorthand: missing n");
    return ClassBSpec(n, std::move(m));
}

IntPoly parse_poly_or_classb(const std::string& text) {
    if (text.rfind("B:", 0) == 0) return ClassBSpec::parse(text).to_poly();
    return parse_poly(text);
}

}  // namespace lacb
