#include "qshuffle/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qshuffle {

void LaurentV::set(long k, const Rational& c) {
    if (c == 0)
        coeffs_.erase(k);
    else
        coeffs_[k] = c;
}

LaurentV LaurentV::v_pow(long k, const Rational& c) {
    LaurentV p;
    p.set(k, c);
    return p;
}

LaurentV LaurentV::v_minus_vinv() {
    LaurentV p;
    p.set(1, 1);
    p.set(-1, -1);
    return p;
}

bool LaurentV::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long LaurentV::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero");
    return coeffs_.begin()->first;
}

long LaurentV::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero");
    return coeffs_.rbegin()->first;
}

Rational LaurentV::coeff(long k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

LaurentV& LaurentV::add_term(long k, const Rational& c) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end()) {
        if (c != 0) coeffs_[k] = c;
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
}

LaurentV LaurentV::operator-() const {
    LaurentV r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[k] = -c;
    return r;
}

LaurentV LaurentV::operator+(const LaurentV& o) const {
    LaurentV r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, c);
    return r;
}

LaurentV LaurentV::operator-(const LaurentV& o) const {
    LaurentV r = *this;
    for (const auto& [k, c] : o.coeffs_) r.add_term(k, -c);
    return r;
}

LaurentV LaurentV::operator*(const LaurentV& o) const {
    LaurentV r;
    for (const auto& [k1, c1] : coeffs_)
        for (const auto& [k2, c2] : o.coeffs_) r.add_term(k1 + k2, c1 * c2);
    return r;
}

LaurentV LaurentV::scaled(const Rational& c) const {
    LaurentV r;
    if (c == 0) return r;
    for (const auto& [k, x] : coeffs_) r.coeffs_[k] = x * c;
    return r;
}

LaurentV LaurentV::shifted(long k) const {
    LaurentV r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

LaurentV LaurentV::pow(unsigned long e) const {
    LaurentV acc(1), base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

LaurentV LaurentV::bar() const {
    LaurentV r;
    for (const auto& [k, c] : coeffs_) r.coeffs_[-k] = c;
    return r;
}

std::optional<LaurentV> LaurentV::exact_div(const LaurentV& a, const LaurentV& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentV();
    // Long division in Q[v] after shifting both to lowest exponent 0;
    // the v-shift difference is a unit and is restored at the end.
    LaurentV rem = a.shifted(-a.min_exp());
    LaurentV div = b.shifted(-b.min_exp());
    long shift = a.min_exp() - b.min_exp();
    LaurentV quot;
    const long ddeg = div.max_exp();
    const Rational dlead = div.coeff(ddeg);
    while (!rem.is_zero() && rem.max_exp() >= ddeg) {
        long e = rem.max_exp() - ddeg;
        Rational c = rem.coeff(rem.max_exp()) / dlead;
        quot.add_term(e, c);
        rem -= div.shifted(e).scaled(c);
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot.shifted(shift);
}

LaurentV LaurentV::gcd(const LaurentV& a, const LaurentV& b) {
    auto normalize = [](const LaurentV& p) {
        LaurentV q = p.shifted(-p.min_exp());
        return q.scaled(Rational(1) / q.coeff(q.max_exp()));
    };
    if (a.is_zero()) return b.is_zero() ? LaurentV() : normalize(b);
    if (b.is_zero()) return normalize(a);
    LaurentV x = a.shifted(-a.min_exp());
    LaurentV y = b.shifted(-b.min_exp());
    while (!y.is_zero()) {
        // remainder of x by y in Q[v]
        LaurentV rem = x;
        const long ddeg = y.max_exp();
        const Rational dlead = y.coeff(ddeg);
        while (!rem.is_zero() && rem.max_exp() >= ddeg) {
            long e = rem.max_exp() - ddeg;
            Rational c = rem.coeff(rem.max_exp()) / dlead;
            rem -= y.shifted(e).scaled(c);
        }
        x = y;
        y = rem.is_zero() ? rem : rem.shifted(-rem.min_exp());
    }
    return normalize(x);
}

std::string LaurentV::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        Rational c = it->second;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        long k = it->first;
        if (k == 0) {
            os << rational_to_string(c);
        } else {
            if (c == -1)
                os << "-";
            else if (c != 1)
                os << rational_to_string(c) << "*";
            os << "v";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

LaurentV qint(long k) {
    if (k < 0) throw std::domain_error("qint: negative argument");
    LaurentV r;
    for (long e = -k + 1; e <= k - 1; e += 2) r.add_term(e, 1);
    return r;
}

LaurentV qfact(long k) {
    if (k < 0) throw std::domain_error("qfact: negative argument");
    LaurentV r(1);
    for (long j = 1; j <= k; ++j) r *= qint(j);
    return r;
}

bool divides_power(const LaurentV& x, long k) {
    if (k < 0) throw std::domain_error("divides_power: negative power");
    if (k == 0) return true;
    if (x.is_zero()) return true;
    auto q = LaurentV::exact_div(x, LaurentV::v_minus_vinv().pow(static_cast<unsigned long>(k)));
    return q.has_value();
}

} // namespace qshuffle
