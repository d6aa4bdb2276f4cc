#include "hookfusion/rational_function.hpp"

#include <stdexcept>
#include <utility>

namespace hookfusion {

RationalFunction RationalFunction::reduce(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    RationalFunction r;
    if (num.is_zero()) return r;
    Polynomial n = num;
    Polynomial d = den;
    Polynomial g = Polynomial::gcd(n, d);
    if (g.degree() > 0) {
        n = n.exact_div(g);
        d = d.exact_div(g);
    }
    const Rational scale = d.leading().reciprocal();
    n *= scale;
    d *= scale;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!den.is_monic()) throw std::invalid_argument("from_coprime: denominator not monic");
    RationalFunction r;
    if (num.is_zero()) return r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    *this = reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    *this = reduce(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    *this = reduce(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    *this = reduce(num_ * o.den_, den_ * o.num_);
    return *this;
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("pole at evaluation point");
    return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_.is_constant()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace hookfusion
