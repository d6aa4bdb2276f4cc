#include "hookfusion/reorder.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hookfusion {

FactorSequence hook_ordering(const HookTableau& T) {
    const int n = T.n();
    const int d = T.shape().durfee();
    const auto conj = T.shape().conjugate();

    FactorSequence seq;
    seq.n = n;
    seq.hooks = d;

    for (int i = 1; i <= d; ++i) {
        std::vector<int> column, row;
        for (int r = i; r <= conj[static_cast<std::size_t>(i - 1)]; ++r) column.push_back(T.entry(r, i));
        for (int c = i + 1; c <= T.shape().parts[static_cast<std::size_t>(i - 1)]; ++c)
            row.push_back(T.entry(i, c));
        for (int q = 1; q <= n; ++q)
            for (int u : column)
                if (u < q) seq.factors.push_back({FactorTag::plain, u, q, 2 * i - 1});
        for (int q = 1; q <= n; ++q)
            for (int v : row)
                if (v < q) seq.factors.push_back({FactorTag::plain, v, q, 2 * i});
    }

    // Tag the equal-content pairs and their immediate right neighbors.
    for (std::size_t k = 0; k < seq.factors.size(); ++k) {
        auto& f = seq.factors[k];
        if (T.content(f.p) != T.content(f.q)) continue;
        f.tag = FactorTag::singularity;
        if (k + 1 >= seq.factors.size()) throw std::runtime_error("ordering invariant broken");
        auto& next = seq.factors[k + 1];
        if (next.p != f.p + 1 || next.q != f.q) throw std::runtime_error("ordering invariant broken");
        next.tag = FactorTag::triple_term;
        ++k;
    }
    return seq;
}

FactorSequence insert_idempotents(const FactorSequence& seq, const HookTableau& T) {
    FactorSequence out;
    out.n = seq.n;
    out.hooks = seq.hooks;
    for (std::size_t k = 0; k < seq.factors.size(); ++k) {
        const auto& f = seq.factors[k];
        if (f.tag == FactorTag::singularity) {
            if (k + 1 >= seq.factors.size()) throw std::runtime_error("ordering invariant broken");
            const auto& next = seq.factors[k + 1];
            if (next.tag != FactorTag::triple_term || next.p != f.p + 1 || next.q != f.q)
                throw std::runtime_error("ordering invariant broken");
            if (std::abs(T.content(f.p + 1) - T.content(f.p)) != 1)
                throw std::runtime_error("ordering invariant broken");
            out.factors.push_back({FactorTag::idempotent, f.p, f.p + 1, f.block});
        }
        out.factors.push_back(f);
    }
    return out;
}

std::string render(const FactorSequence& seq) {
    std::ostringstream os;
    bool block_open = false;
    int last_block = 0;
    for (std::size_t k = 0; k < seq.factors.size(); ++k) {
        const auto& f = seq.factors[k];
        if (block_open) os << (f.block != last_block ? " · " : " ");
        block_open = true;
        last_block = f.block;
        const bool opens = f.tag == FactorTag::idempotent ||
                           (f.tag == FactorTag::singularity &&
                            (k == 0 || seq.factors[k - 1].tag != FactorTag::idempotent));
        if (opens) os << "(";
        if (f.tag == FactorTag::idempotent) os << "1/2 ";
        os << "f" << f.p << f.q;
        if (f.tag == FactorTag::triple_term) os << ")";
    }
    return os.str();
}

AlgebraElement<Rational> triple_value(int p, int q, const std::vector<int>& contents, int n) {
    if (!(1 <= p && p + 1 < q && q <= n))
        throw std::invalid_argument("triple_value: requires 1 <= p, p+1 < q <= n");
    const int cp = contents[static_cast<std::size_t>(p - 1)];
    const int cnext = contents[static_cast<std::size_t>(p)];
    const int cq = contents[static_cast<std::size_t>(q - 1)];
    if (cp != cq) throw std::invalid_argument("triple_value: (p,q) is not a singularity");
    if (cnext != cp - 1 && cnext != cp + 1)
        throw std::invalid_argument("triple_value: entry p+1 is not adjacent to p");

    const Rational sign(cnext == cp - 1 ? -1 : 1);
    AlgebraElement<Rational> first = AlgebraElement<Rational>::identity(n);
    first.add_term(Permutation::transposition(n, p, p + 1), sign);
    AlgebraElement<Rational> second = AlgebraElement<Rational>::identity(n);
    second.add_term(Permutation::transposition(n, p, q), -sign);
    second.add_term(Permutation::transposition(n, p + 1, q), -sign);
    return Rational(1, 2) * (first * second);
}

namespace {

AlgebraElement<Rational> equal_z_walk(const HookTableau& T, int max_block) {
    const FactorSequence inserted = insert_idempotents(hook_ordering(T), T);
    const int n = T.n();
    AlgebraElement<Rational> out = AlgebraElement<Rational>::identity(n);
    const auto& f = inserted.factors;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k].block > max_block) break;
        if (f[k].tag == FactorTag::idempotent) {
            const auto& sing = f[k + 1];
            out *= triple_value(sing.p, sing.q, T.contents(), n);
            k += 2;
            continue;
        }
        out *= factor_at(n, f[k].p, f[k].q, Rational(T.content(f[k].p)), Rational(T.content(f[k].q)));
    }
    return out;
}

} // namespace

AlgebraElement<Rational> evaluate_equal_z(const HookTableau& T) {
    return equal_z_walk(T, 2 * T.shape().durfee());
}

AlgebraElement<Rational> equal_z_block_prefix(const HookTableau& T, int k) {
    if (k < 0 || k > T.shape().durfee())
        throw std::invalid_argument("equal_z_block_prefix: block count out of range");
    return equal_z_walk(T, 2 * k);
}

bool check_reordering_equivalence(const HookTableau& T) {
    const auto scheme = SubstitutionScheme::standard(T, SchemeKind::hook);
    FusionAccumulator lex(T, scheme);
    for (const auto& [p, q] : lex_pairs(T.n())) lex.multiply_factor(p, q);
    FusionAccumulator ordered(T, scheme);
    for (const auto& f : hook_ordering(T).factors) ordered.multiply_factor(f.p, f.q);
    return lex.same_element(ordered);
}

bool idempotent_no_effect_check(const HookTableau& T) {
    const auto scheme = SubstitutionScheme::standard(T, SchemeKind::hook);
    const FactorSequence plain = hook_ordering(T);
    FusionAccumulator bare(T, scheme);
    for (const auto& f : plain.factors) bare.multiply_factor(f.p, f.q);
    FusionAccumulator inserted(T, scheme);
    for (const auto& f : insert_idempotents(plain, T).factors) {
        if (f.tag == FactorTag::idempotent) inserted.multiply_idempotent(f.p);
        else inserted.multiply_factor(f.p, f.q);
    }
    return bare.same_element(inserted);
}

bool yang_baxter_triple(const Rational& u, const Rational& v, const Rational& w) {
    if (u == v || u == w || v == w)
        throw std::domain_error("yang_baxter_triple: arguments must be pairwise distinct");
    const auto f12 = factor_at(3, 1, 2, u, v);
    const auto f13 = factor_at(3, 1, 3, u, w);
    const auto f23 = factor_at(3, 2, 3, v, w);
    return f12 * f13 * f23 == f23 * f13 * f12;
}

bool yang_baxter_commute(const Rational& u1, const Rational& v1, const Rational& u2,
                         const Rational& v2) {
    if (u1 == v1 || u2 == v2)
        throw std::domain_error("yang_baxter_commute: arguments must be distinct within a pair");
    const auto f12 = factor_at(4, 1, 2, u1, v1);
    const auto f34 = factor_at(4, 3, 4, u2, v2);
    return f12 * f34 == f34 * f12;
}

Rational inverses_check(const Rational& u, const Rational& v) {
    if (u == v) throw std::domain_error("inverses_check: arguments must be distinct");
    const auto forward = factor_at(2, 1, 2, u, v);
    const auto backward = factor_at(2, 1, 2, v, u);
    const auto product = forward * backward;
    const Rational scalar = product.coeff_at(Permutation::identity(2));
    if (product != scalar * AlgebraElement<Rational>::identity(2))
        throw std::runtime_error("inverses_check: product is not scalar");
    const Rational diff = u - v;
    if (scalar != Rational(1) - (diff * diff).reciprocal())
        throw std::runtime_error("inverses_check: scalar does not match 1 - 1/(u-v)^2");
    return scalar;
}

bool stripping_check(const Partition& shape, int k) {
    const int d = shape.durfee();
    if (k < 0 || k >= d)
        throw std::invalid_argument("stripping_check: requires 0 <= k < number of hooks");
    // Stripping nothing: the prefix is empty and mu is the shape itself.
    if (k == 0) return true;
    const HookTableau T(shape);
    const auto [mu, removed] = strip_hooks(shape, k);
    const AlgebraElement<Rational> whole = diagonal_matrix_element(shape);
    const AlgebraElement<Rational> prefix = equal_z_block_prefix(T, k);
    AlgebraElement<Rational> tail = AlgebraElement<Rational>::identity(shape.n());
    if (!mu.empty())
        tail = shift_embed(diagonal_matrix_element(mu), removed, shape.n());
    return whole == prefix * tail;
}

} // namespace hookfusion
