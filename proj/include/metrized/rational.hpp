#ifndef METRIZED_RATIONAL_HPP
#define METRIZED_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace metrized {

// Exact rational scalar used throughout. mpq_class keeps values in canonical
// reduced form as long as arithmetic goes through its operators.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "p", "p/q" or a plain decimal like "1.25" into an exact rational.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad rational literal: " + s);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    mpz_class den = 1;
    for (std::size_t i = 0; i < s.size() - dot - 1; ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Render as "p" or "p/q".
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace metrized

#endif
