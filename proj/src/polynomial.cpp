#include "hookfusion/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hookfusion {

Polynomial Polynomial::variable() {
    Polynomial p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b) {
    Polynomial p;
    p.c_ = {b, a};
    p.prune();
    return p;
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return c_.back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    prune();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    prune();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.prune();
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

void Polynomial::add_mul_linear(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) return;
    std::size_t need = p.c_.size() + (a.is_zero() ? 0 : 1);
    if (need > c_.size()) c_.resize(need);
    if (!b.is_zero())
        for (std::size_t k = 0; k < p.c_.size(); ++k) c_[k] += b * p.c_[k];
    if (!a.is_zero())
        for (std::size_t k = 0; k < p.c_.size(); ++k) c_[k + 1] += a * p.c_[k];
    prune();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    Polynomial rem = a;
    Polynomial quot;
    int db = b.degree();
    if (rem.degree() >= db) quot.c_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rational(0));
    const Rational lead_inv = b.leading().reciprocal();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational q = rem.leading() * lead_inv;
        quot.c_[static_cast<std::size_t>(shift)] = q;
        for (int k = 0; k <= db; ++k)
            rem.c_[static_cast<std::size_t>(k + shift)] -= q * b.c_[static_cast<std::size_t>(k)];
        rem.prune();
    }
    quot.prune();
    return {quot, rem};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.is_zero() ? a : a.monic();
    Polynomial y = b.is_zero() ? b : b.monic();
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? std::move(r) : r.monic();
    }
    return x;
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    auto [q, r] = divmod(*this, d);
    if (!r.is_zero()) throw std::domain_error("Polynomial: inexact division");
    return q;
}

bool Polynomial::try_divide_linear(const Rational& r, Polynomial& quotient) const {
    if (is_zero()) {
        quotient = Polynomial();
        return true;
    }
    if (c_.size() == 1) return false;
    // Synthetic division by eps + r, i.e. Horner evaluation at -r.
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = c_[k] - r * carry;
    }
    if (!carry.is_zero()) return false;
    Polynomial out;
    out.c_ = std::move(q);
    out.prune();
    quotient = std::move(out);
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw std::domain_error("Polynomial: cannot normalize zero polynomial");
    Polynomial r = *this;
    r *= leading().reciprocal();
    return r;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational abs = c.sign() < 0 ? -c : c;
        if (k == 0 || !abs.is_one()) os << abs.str();
        if (k > 0) {
            if (!abs.is_one()) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace hookfusion
