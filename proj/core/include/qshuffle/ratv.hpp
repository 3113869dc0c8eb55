#pragma once

#include <string>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

/// Element of Q(v), stored as num/den in a unique canonical form:
/// gcd(num, den) = 1 in Q[v], den has lowest exponent 0 and leading
/// coefficient 1.  Equality is structural.
class RatV {
public:
    RatV() : den_(1) {}
    RatV(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatV(long c) : num_(Rational(c)), den_(1) {}   // NOLINT(google-explicit-constructor)
    RatV(const LaurentV& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatV(LaurentV num, LaurentV den);

    static RatV v_pow(long k) { return RatV(LaurentV::v_pow(k)); }

    const LaurentV& num() const { return num_; }
    const LaurentV& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatV operator-() const;
    RatV operator+(const RatV& o) const;
    RatV operator-(const RatV& o) const;
    RatV operator*(const RatV& o) const;
    RatV operator/(const RatV& o) const;
    RatV& operator+=(const RatV& o) { return *this = *this + o; }
    RatV& operator-=(const RatV& o) { return *this = *this - o; }
    RatV& operator*=(const RatV& o) { return *this = *this * o; }
    RatV& operator/=(const RatV& o) { return *this = *this / o; }
    bool operator==(const RatV& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatV& o) const { return !(*this == o); }

    /// Signed power; negative e inverts (x must be nonzero).
    RatV pow(long e) const;

    /// True iff the denominator is a unit, i.e. the value lies in Q[v, v^{-1}].
    bool is_laurent_polynomial() const { return den_.is_one(); }
    /// Pre: is_laurent_polynomial().
    const LaurentV& as_laurent() const;

    std::string str() const;

private:
    LaurentV num_, den_;
};

} // namespace qshuffle
