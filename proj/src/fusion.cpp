#include "hookfusion/fusion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace hookfusion {

int scheme_group(const HookTableau& T, SchemeKind kind, int p) {
    switch (kind) {
        case SchemeKind::hook: return T.hook_of(p);
        case SchemeKind::row: return T.box_of(p).first;
        case SchemeKind::column: return T.box_of(p).second;
    }
    throw std::logic_error("scheme_group: bad kind");
}

int scheme_group_count(const HookTableau& T, SchemeKind kind) {
    switch (kind) {
        case SchemeKind::hook: return T.shape().durfee();
        case SchemeKind::row: return T.shape().rows();
        case SchemeKind::column: return T.shape().parts.empty() ? 0 : T.shape().parts[0];
    }
    throw std::logic_error("scheme_group_count: bad kind");
}

SubstitutionScheme SubstitutionScheme::standard(const HookTableau& T, SchemeKind kind) {
    SubstitutionScheme s;
    s.kind = kind;
    s.slope.reserve(static_cast<std::size_t>(T.n()));
    for (int p = 1; p <= T.n(); ++p) s.slope.push_back(scheme_group(T, kind, p));
    return s;
}

SubstitutionScheme SubstitutionScheme::with_group_slopes(const HookTableau& T, SchemeKind kind,
                                                         const std::vector<int>& per_group) {
    const int groups = scheme_group_count(T, kind);
    if (static_cast<int>(per_group.size()) != groups)
        throw std::invalid_argument("SubstitutionScheme: one slope required per group");
    std::set<int> distinct(per_group.begin(), per_group.end());
    if (static_cast<int>(distinct.size()) != groups)
        throw std::invalid_argument("SubstitutionScheme: slopes must be distinct across groups");
    SubstitutionScheme s;
    s.kind = kind;
    s.slope.reserve(static_cast<std::size_t>(T.n()));
    for (int p = 1; p <= T.n(); ++p)
        s.slope.push_back(per_group[static_cast<std::size_t>(scheme_group(T, kind, p) - 1)]);
    return s;
}

namespace {

// Denominator of the factor for (p, q): (slope_p - slope_q) eps + (c_p - c_q).
std::pair<Rational, Rational> factor_denominator(const HookTableau& T, const SubstitutionScheme& S,
                                                 int p, int q) {
    if (!(1 <= p && p < q && q <= T.n()))
        throw std::invalid_argument("factor: requires 1 <= p < q <= n");
    if (static_cast<int>(S.slope.size()) != T.n())
        throw std::invalid_argument("factor: scheme does not match tableau");
    const Rational a(S.slope[static_cast<std::size_t>(p - 1)] - S.slope[static_cast<std::size_t>(q - 1)]);
    const Rational b(T.content(p) - T.content(q));
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("illegal scheme: unresolvable singularity");
    return {a, b};
}

} // namespace

AlgebraElement<RationalFunction> factor(int p, int q, const HookTableau& T,
                                        const SubstitutionScheme& S) {
    const auto [a, b] = factor_denominator(T, S, p, q);
    AlgebraElement<RationalFunction> r = AlgebraElement<RationalFunction>::identity(T.n());
    const RationalFunction inv = RationalFunction(1) / RationalFunction(Polynomial::linear(a, b));
    r.add_term(Permutation::transposition(T.n(), p, q), -inv);
    return r;
}

AlgebraElement<Rational> factor_at(int n, int p, int q, const Rational& u, const Rational& v) {
    if (u == v) throw std::domain_error("factor_at: pole at equal arguments");
    AlgebraElement<Rational> r = AlgebraElement<Rational>::identity(n);
    r.add_term(Permutation::transposition(n, p, q), -(u - v).reciprocal());
    return r;
}

FusionAccumulator::FusionAccumulator(const HookTableau& T, const SubstitutionScheme& S)
    : n_(T.n()), content_(T.contents()), slope_(S.slope) {
    if (static_cast<int>(slope_.size()) != n_)
        throw std::invalid_argument("FusionAccumulator: scheme does not match tableau");
    num_.emplace(Permutation::identity(n_), Polynomial(Rational(1)));
}

void FusionAccumulator::multiply_factor(int p, int q) {
    if (!(1 <= p && p < q && q <= n_))
        throw std::invalid_argument("FusionAccumulator: requires 1 <= p < q <= n");
    const Rational a(slope_[static_cast<std::size_t>(p - 1)] - slope_[static_cast<std::size_t>(q - 1)]);
    const Rational b(content_[static_cast<std::size_t>(p - 1)] - content_[static_cast<std::size_t>(q - 1)]);
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("illegal scheme: unresolvable singularity");

    if (a.is_zero()) {
        den_scalar_ *= b;
    } else {
        den_scalar_ *= a;
        ++den_roots_[b / a];
    }

    // Right multiplication by (L - t), L = a*eps + b, t = (p q).
    const Permutation t = Permutation::transposition(n_, p, q);
    std::map<Permutation, Polynomial> fresh;
    for (const auto& [g, poly] : num_) {
        fresh[g].add_mul_linear(poly, a, b);
        fresh[g.compose(t)] -= poly;
    }
    for (auto it = fresh.begin(); it != fresh.end();)
        it = it->second.is_zero() ? fresh.erase(it) : std::next(it);
    num_ = std::move(fresh);
}

void FusionAccumulator::multiply_idempotent(int p) {
    multiply_factor(p, p + 1);
    den_scalar_ *= 2;
}

AlgebraElement<RationalFunction> FusionAccumulator::to_element() const {
    AlgebraElement<RationalFunction> out(n_);
    const Rational scale = den_scalar_.reciprocal();
    for (const auto& [g, poly] : num_) {
        Polynomial numerator = poly;
        Polynomial denominator(Rational(1));
        for (const auto& [root, mult] : den_roots_) {
            int remaining = mult;
            Polynomial quotient;
            while (remaining > 0 && numerator.try_divide_linear(root, quotient)) {
                numerator = quotient;
                --remaining;
            }
            for (int i = 0; i < remaining; ++i)
                denominator *= Polynomial::linear(Rational(1), root);
        }
        numerator *= scale;
        out.add_term(g, RationalFunction::from_coprime(std::move(numerator), std::move(denominator)));
    }
    return out;
}

AlgebraElement<Rational> FusionAccumulator::value_at_zero() const {
    // The denominator at eps = 0 is den_scalar_ times the product of the
    // nonzero roots; eps factors must cancel exactly against the numerator.
    int eps_order = 0;
    Rational base = den_scalar_;
    for (const auto& [root, mult] : den_roots_) {
        if (root.is_zero()) eps_order = mult;
        else base *= pow(root, mult);
    }
    const Rational base_inv = base.reciprocal();

    AlgebraElement<Rational> out(n_);
    for (const auto& [g, poly] : num_) {
        for (int k = 0; k < eps_order; ++k)
            if (!poly.coeff(k).is_zero())
                throw std::domain_error("pole at evaluation point in coefficient of " +
                                        g.cycle_string());
        out.add_term(g, poly.coeff(eps_order) * base_inv);
    }
    return out;
}

bool FusionAccumulator::same_element(const FusionAccumulator& other) const {
    if (n_ != other.n_) return false;
    if (den_roots_ == other.den_roots_) {
        // Identical factored denominators: compare cross-scaled numerators.
        if (num_.size() != other.num_.size()) return false;
        auto it = num_.begin();
        auto jt = other.num_.begin();
        for (; it != num_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (it->second * other.den_scalar_ != jt->second * den_scalar_) return false;
        }
        return true;
    }
    return to_element() == other.to_element();
}

AlgebraElement<RationalFunction> fusion_product(const HookTableau& T, const SubstitutionScheme& S) {
    FusionAccumulator acc(T, S);
    for (const auto& [p, q] : lex_pairs(T.n())) acc.multiply_factor(p, q);
    return acc.to_element();
}

AlgebraElement<Rational> evaluate_limit(const HookTableau& T, const SubstitutionScheme& S) {
    FusionAccumulator acc(T, S);
    for (const auto& [p, q] : lex_pairs(T.n())) acc.multiply_factor(p, q);
    return acc.value_at_zero();
}

namespace {

// Dense fold over the full group, indexed by permutation rank.
AlgebraElement<Rational> evaluate_limit_dense(const HookTableau& T, const SubstitutionScheme& S) {
    const int n = T.n();
    if (n > 8) throw std::invalid_argument("dense backend is limited to n <= 8");
    const std::uint64_t size = factorial(n);

    std::vector<Polynomial> num(size);
    num[Permutation::identity(n).rank()] = Polynomial(Rational(1));
    Rational den_scalar(1);
    std::map<Rational, int> den_roots;

    std::vector<std::uint64_t> composed(size);
    std::vector<Polynomial> fresh(size);
    for (const auto& [p, q] : lex_pairs(n)) {
        const Rational a(S.slope[static_cast<std::size_t>(p - 1)] - S.slope[static_cast<std::size_t>(q - 1)]);
        const Rational b(T.content(p) - T.content(q));
        if (a.is_zero() && b.is_zero())
            throw std::domain_error("illegal scheme: unresolvable singularity");
        if (a.is_zero()) {
            den_scalar *= b;
        } else {
            den_scalar *= a;
            ++den_roots[b / a];
        }
        const Permutation t = Permutation::transposition(n, p, q);
        for (std::uint64_t r = 0; r < size; ++r)
            composed[r] = Permutation::from_rank(n, r).compose(t).rank();
        for (std::uint64_t r = 0; r < size; ++r) {
            Polynomial v;
            v.add_mul_linear(num[r], a, b);
            v -= num[composed[r]];
            fresh[r] = std::move(v);
        }
        std::swap(num, fresh);
    }

    int eps_order = 0;
    Rational base = den_scalar;
    for (const auto& [root, mult] : den_roots) {
        if (root.is_zero()) eps_order = mult;
        else base *= pow(root, mult);
    }
    const Rational base_inv = base.reciprocal();

    AlgebraElement<Rational> out(n);
    for (std::uint64_t r = 0; r < size; ++r) {
        const Polynomial& poly = num[r];
        if (poly.is_zero()) continue;
        const Permutation g = Permutation::from_rank(n, r);
        for (int k = 0; k < eps_order; ++k)
            if (!poly.coeff(k).is_zero())
                throw std::domain_error("pole at evaluation point in coefficient of " +
                                        g.cycle_string());
        out.add_term(g, poly.coeff(eps_order) * base_inv);
    }
    return out;
}

} // namespace

AlgebraElement<Rational> evaluate_limit(const HookTableau& T, const SubstitutionScheme& S,
                                        ConvolutionBackend backend) {
    if (backend == ConvolutionBackend::sparse) return evaluate_limit(T, S);
    return evaluate_limit_dense(T, S);
}

AlgebraElement<Rational> hook_shape_direct(const Partition& shape) {
    if (!shape.is_hook()) throw std::invalid_argument("hook_shape_direct: non-hook shape");
    const HookTableau T(shape);
    AlgebraElement<Rational> out = AlgebraElement<Rational>::identity(T.n());
    for (const auto& [p, q] : lex_pairs(T.n()))
        out *= factor_at(T.n(), p, q, Rational(T.content(p)), Rational(T.content(q)));
    return out;
}

AlgebraElement<Rational> diagonal_matrix_element(const Partition& shape) {
    const HookTableau T(shape);
    return evaluate_limit(T, SubstitutionScheme::standard(T, SchemeKind::hook));
}

} // namespace hookfusion
