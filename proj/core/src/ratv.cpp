#include "qshuffle/ratv.hpp"

#include <stdexcept>

namespace qshuffle {

RatV::RatV(LaurentV num, LaurentV den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatV: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentV(1);
        return;
    }
    LaurentV g = LaurentV::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *LaurentV::exact_div(num_, g);
        den_ = *LaurentV::exact_div(den_, g);
    }
    // den: lowest exponent 0, leading coefficient 1
    long shift = den_.min_exp();
    Rational lead = den_.coeff(den_.max_exp());
    den_ = den_.shifted(-shift).scaled(Rational(1) / lead);
    num_ = num_.shifted(-shift).scaled(Rational(1) / lead);
}

RatV RatV::operator-() const {
    RatV r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatV RatV::operator+(const RatV& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        RatV r;
        r.num_ = num_ + o.num_;
        return r;
    }
    return RatV(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatV RatV::operator-(const RatV& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        RatV r;
        r.num_ = num_ - o.num_;
        return r;
    }
    return RatV(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatV RatV::operator*(const RatV& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        RatV r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return RatV(num_ * o.num_, den_ * o.den_);
}

RatV RatV::operator/(const RatV& o) const {
    if (o.is_zero()) throw std::domain_error("RatV: division by zero");
    return RatV(num_ * o.den_, den_ * o.num_);
}

RatV RatV::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw std::domain_error("RatV::pow: 0 to a negative power");
        return RatV(den_, num_).pow(-e);
    }
    return RatV(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)));
}

const LaurentV& RatV::as_laurent() const {
    if (!is_laurent_polynomial()) throw std::domain_error("RatV: not a Laurent polynomial: " + str());
    return num_;
}

std::string RatV::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace qshuffle
