#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hookfusion {

using Integer = mpz_class;

// Arbitrary-precision rational. Always stored in lowest terms with a
// positive denominator; every operation preserves that form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int x) : v_(x) {}
    Rational(long x) : v_(static_cast<signed long>(x)) {}
    Rational(const Integer& x) : v_(x) {}
    Rational(const Integer& num, const Integer& den) {
        if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: division by zero");
        Rational r;
        mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "7/3", "-2"; exactly parseable back by GMP.
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

inline Rational pow(Rational base, long e) {
    if (e < 0) {
        base = base.reciprocal();
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Integer factorial_integer(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace hookfusion
