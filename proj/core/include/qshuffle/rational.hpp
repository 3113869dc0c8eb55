#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qshuffle {

/// Arbitrary-precision rational, kept canonical (gcd 1, positive denominator)
/// by GMP itself.
using Rational = mpq_class;

/// Parses "p/q" or "p" (q = 1 implied).
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    return r;
}

/// Formats as "p/q", with "/q" omitted when q = 1.
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

/// Integer power; e may be negative (then r must be nonzero).
inline Rational rational_pow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        return rational_pow(Rational(1) / r, -e);
    }
    Rational acc(1), base(r);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

} // namespace qshuffle
