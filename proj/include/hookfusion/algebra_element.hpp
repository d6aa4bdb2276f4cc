#pragma once

#include "hookfusion/permutation.hpp"
#include "hookfusion/rational.hpp"
#include "hookfusion/rational_function.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hookfusion {

// Element of the group algebra of the degree-n symmetric group with
// coefficients in C (Rational or RationalFunction). Terms are held in a map
// keyed by permutation, so iteration order is the lexicographic one-line
// order; zero coefficients are never stored.
template <class C>
class AlgebraElement {
public:
    explicit AlgebraElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("AlgebraElement: degree must be positive");
    }

    static AlgebraElement zero(int n) { return AlgebraElement(n); }

    static AlgebraElement identity(int n) {
        AlgebraElement e(n);
        e.terms_.emplace(Permutation::identity(n), C(1));
        return e;
    }

    static AlgebraElement of(const Permutation& g, const C& c = C(1)) {
        AlgebraElement e(g.degree());
        e.add_term(g, c);
        return e;
    }

    int degree() const { return n_; }
    const std::map<Permutation, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    C coeff_at(const Permutation& g) const {
        if (g.degree() != n_) throw std::invalid_argument("AlgebraElement: degree mismatch");
        auto it = terms_.find(g);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Permutation& g, const C& c) {
        if (g.degree() != n_) throw std::invalid_argument("AlgebraElement: degree mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_same_degree(o);
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }

    AlgebraElement& operator-=(const AlgebraElement& o) {
        require_same_degree(o);
        for (const auto& [g, c] : o.terms_) add_term(g, C(0) - c);
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    AlgebraElement operator-() const {
        AlgebraElement r(n_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, C(0) - c);
        return r;
    }

    // Convolution product: (a*b)(g) = sum over h.compose(k) = g of a(h)b(k).
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.require_same_degree(b);
        AlgebraElement r(a.n_);
        for (const auto& [g, cg] : a.terms_)
            for (const auto& [h, ch] : b.terms_) r.add_term(g.compose(h), cg * ch);
        return r;
    }

    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    friend AlgebraElement operator*(const C& s, const AlgebraElement& a) {
        AlgebraElement r(a.n_);
        if (s.is_zero()) return r;
        for (const auto& [g, c] : a.terms_) r.add_term(g, s * c);
        return r;
    }

    friend AlgebraElement operator*(const AlgebraElement& a, const C& s) { return s * a; }

    // Coefficientwise antiautomorphism g -> g^{-1}.
    AlgebraElement phi() const {
        AlgebraElement r(n_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(g.inverse(), c);
        return r;
    }

    AlgebraElement left_translate(const Permutation& t) const {
        if (t.degree() != n_) throw std::invalid_argument("AlgebraElement: degree mismatch");
        AlgebraElement r(n_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(t.compose(g), c);
        return r;
    }

    AlgebraElement right_translate(const Permutation& t) const {
        if (t.degree() != n_) throw std::invalid_argument("AlgebraElement: degree mismatch");
        AlgebraElement r(n_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(g.compose(t), c);
        return r;
    }

    bool operator==(const AlgebraElement&) const = default;

private:
    void require_same_degree(const AlgebraElement& o) const {
        if (n_ != o.n_) throw std::invalid_argument("AlgebraElement: degree mismatch");
    }

    int n_;
    std::map<Permutation, C> terms_;
};

template <class C>
AlgebraElement<C> linear_combine(const std::vector<std::pair<C, AlgebraElement<C>>>& parts) {
    if (parts.empty()) throw std::invalid_argument("linear_combine: empty input");
    AlgebraElement<C> acc(parts.front().second.degree());
    for (const auto& [s, a] : parts) acc += s * a;
    return acc;
}

// Evaluate every coefficient at the given point. A pole in any coefficient
// is reported with the offending permutation.
inline AlgebraElement<Rational> specialize(const AlgebraElement<RationalFunction>& a,
                                           const Rational& point) {
    AlgebraElement<Rational> r(a.degree());
    for (const auto& [g, f] : a.terms()) {
        try {
            r.add_term(g, f.eval(point));
        } catch (const std::domain_error&) {
            throw std::domain_error("pole at evaluation point in coefficient of " + g.cycle_string());
        }
    }
    return r;
}

// Image under the shift embedding of S_m into S_n that relabels every moved
// point p to p + x.
template <class C>
AlgebraElement<C> shift_embed(const AlgebraElement<C>& a, int x, int n) {
    const int m = a.degree();
    if (x < 0 || m + x > n) throw std::invalid_argument("shift_embed: target degree overflow");
    AlgebraElement<C> r(n);
    const Permutation id_n = Permutation::identity(n);
    for (const auto& [g, c] : a.terms()) {
        std::vector<int> img = id_n.one_line();
        for (int p = 1; p <= m; ++p) img[static_cast<std::size_t>(x + p - 1)] = x + g(p);
        r.add_term(Permutation::from_one_line(img), c);
    }
    return r;
}

} // namespace hookfusion
