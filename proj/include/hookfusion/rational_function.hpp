#pragma once

#include "hookfusion/polynomial.hpp"

#include <string>

namespace hookfusion {

// Rational function in eps, kept fully reduced: gcd(num, den) = 1, den monic
// and nonzero. Zero is represented as 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(int c) : RationalFunction(Rational(c)) {}
    explicit RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}

    // Canonicalize an arbitrary num/den pair; den must be nonzero.
    static RationalFunction reduce(const Polynomial& num, const Polynomial& den);
    // Trusted fast path: the caller guarantees gcd(num, den) = 1 and den monic.
    static RationalFunction from_coprime(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    bool operator==(const RationalFunction&) const = default;

    // Exact value at x. Because the fraction is reduced, a vanishing
    // denominator is a genuine pole.
    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "eps") const;

private:
    Polynomial num_;
    Polynomial den_;
};

} // namespace hookfusion
