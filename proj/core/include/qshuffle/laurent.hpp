#pragma once

#include <map>
#include <optional>
#include <string>

#include "qshuffle/rational.hpp"

namespace qshuffle {

/// Sparse Laurent polynomial in the quantum parameter v with rational
/// coefficients.  No zero coefficients are ever stored.
class LaurentV {
public:
    LaurentV() = default;
    LaurentV(const Rational& c) { set(0, c); } // NOLINT(google-explicit-constructor)
    LaurentV(long c) { set(0, Rational(c)); }  // NOLINT(google-explicit-constructor)

    /// c * v^k
    static LaurentV v_pow(long k, const Rational& c = Rational(1));
    static LaurentV v() { return v_pow(1); }
    /// v - v^{-1}
    static LaurentV v_minus_vinv();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True iff c * v^k for some nonzero c.
    bool is_monomial() const { return coeffs_.size() == 1; }

    long min_exp() const; // pre: nonzero
    long max_exp() const; // pre: nonzero

    const std::map<long, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long k) const;

    LaurentV& add_term(long k, const Rational& c);

    LaurentV operator-() const;
    LaurentV operator+(const LaurentV& o) const;
    LaurentV operator-(const LaurentV& o) const;
    LaurentV operator*(const LaurentV& o) const;
    LaurentV& operator+=(const LaurentV& o) { return *this = *this + o; }
    LaurentV& operator-=(const LaurentV& o) { return *this = *this - o; }
    LaurentV& operator*=(const LaurentV& o) { return *this = *this * o; }
    bool operator==(const LaurentV& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentV& o) const { return !(*this == o); }

    LaurentV scaled(const Rational& c) const;
    /// Multiply by v^k.
    LaurentV shifted(long k) const;
    LaurentV pow(unsigned long e) const;
    /// The bar involution v -> v^{-1}.
    LaurentV bar() const;

    /// Exact quotient in Q[v, v^{-1}], or nullopt when b does not divide a.
    static std::optional<LaurentV> exact_div(const LaurentV& a, const LaurentV& b);
    /// Monic gcd in Q[v] after clearing powers of v; gcd(0,0) = 0.
    static LaurentV gcd(const LaurentV& a, const LaurentV& b);

    std::string str() const;

private:
    void set(long k, const Rational& c);
    std::map<long, Rational> coeffs_;
};

/// Symmetric q-integer [k]_v = (v^k - v^{-k}) / (v - v^{-1}); k >= 0.
LaurentV qint(long k);
/// q-factorial [k]_v! = [1]_v [2]_v ... [k]_v; qfact(0) = 1.
LaurentV qfact(long k);
/// True iff (v - v^{-1})^k divides x exactly in Q[v, v^{-1}].
bool divides_power(const LaurentV& x, long k);

} // namespace qshuffle
