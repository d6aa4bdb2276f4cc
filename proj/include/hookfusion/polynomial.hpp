#pragma once

#include "hookfusion/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hookfusion {

// Dense univariate polynomial over Rational in the formal variable eps.
// Coefficients are stored lowest degree first and the last stored
// coefficient is nonzero; the zero polynomial is the empty sequence and
// reports degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Polynomial(int c) : Polynomial(Rational(c)) {}
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { prune(); }

    static Polynomial variable();
    // a*eps + b
    static Polynomial linear(const Rational& a, const Rational& b);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const Rational& leading() const;
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    bool operator==(const Polynomial&) const = default;

    // *this += (a*eps + b) * p; the inner step of the fusion folds.
    void add_mul_linear(const Polynomial& p, const Rational& a, const Rational& b);

    Rational eval(const Rational& x) const;

    // Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Monic gcd; gcd(0, 0) is 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);
    // Division that must leave no remainder.
    Polynomial exact_div(const Polynomial& d) const;
    // Attempt division by the monic linear eps + r; on success stores the
    // quotient and returns true, otherwise leaves quotient untouched.
    bool try_divide_linear(const Rational& r, Polynomial& quotient) const;

    Polynomial monic() const;

    std::string str(const std::string& var = "eps") const;

private:
    void prune() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace hookfusion
