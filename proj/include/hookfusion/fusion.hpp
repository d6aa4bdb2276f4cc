#pragma once

#include "hookfusion/algebra_element.hpp"
#include "hookfusion/young.hpp"

#include <map>
#include <vector>

namespace hookfusion {

enum class SchemeKind { hook, row, column };

// Assignment of a spectral parameter z_p = slope_p * eps to every entry,
// constant on each group (principal hook, row, or column of the hook
// tableau) and distinct across groups.
struct SubstitutionScheme {
    SchemeKind kind = SchemeKind::hook;
    std::vector<int> slope; // slope[p-1] for entry p

    static SubstitutionScheme standard(const HookTableau& T, SchemeKind kind);
    static SubstitutionScheme with_group_slopes(const HookTableau& T, SchemeKind kind,
                                                const std::vector<int>& per_group);
};

// Group index of an entry under a scheme kind: hook index, row, or column.
int scheme_group(const HookTableau& T, SchemeKind kind, int p);
int scheme_group_count(const HookTableau& T, SchemeKind kind);

// The factor 1 - (pq)/(z_p + c_p - z_q - c_q) as an element with
// rational-function coefficients in eps.
AlgebraElement<RationalFunction> factor(int p, int q, const HookTableau& T,
                                        const SubstitutionScheme& S);

// The same factor at fixed numeric arguments: 1 - (pq)/(u - v).
AlgebraElement<Rational> factor_at(int n, int p, int q, const Rational& u, const Rational& v);

// Running product of fusion factors. Coefficients are kept as polynomial
// numerators over one shared denominator, recorded in factored form (a
// scalar and monic linear factors eps + r with multiplicities); each factor
// multiplication therefore needs no gcd work, and reduction happens once at
// the end by exact division.
class FusionAccumulator {
public:
    FusionAccumulator(const HookTableau& T, const SubstitutionScheme& S);

    // Multiply on the right by the factor for the pair (p, q).
    void multiply_factor(int p, int q);
    // Multiply on the right by (1/2) f_{p,p+1}.
    void multiply_idempotent(int p);

    AlgebraElement<RationalFunction> to_element() const;
    AlgebraElement<Rational> value_at_zero() const;
    bool same_element(const FusionAccumulator& other) const;

private:
    int n_;
    std::vector<int> content_;
    std::vector<int> slope_;
    std::map<Permutation, Polynomial> num_;
    Rational den_scalar_{1};
    std::map<Rational, int> den_roots_; // monic linear eps + r -> multiplicity
};

// Ordered product over lex_pairs(n) of factor(p, q, T, S).
AlgebraElement<RationalFunction> fusion_product(const HookTableau& T, const SubstitutionScheme& S);

// Value of the lexicographic product at eps = 0; the limit at the
// equal-parameter point.
AlgebraElement<Rational> evaluate_limit(const HookTableau& T, const SubstitutionScheme& S);

enum class ConvolutionBackend { sparse, dense };

// Same limit through a selectable convolution backend. The dense backend
// indexes coefficients by permutation rank and is restricted to n <= 8.
AlgebraElement<Rational> evaluate_limit(const HookTableau& T, const SubstitutionScheme& S,
                                        ConvolutionBackend backend);

// Hook shapes need no parameters: the product of f_pq(c_p, c_q) over
// lex_pairs is already the diagonal matrix element.
AlgebraElement<Rational> hook_shape_direct(const Partition& shape);

// Diagonal matrix element of the irreducible representation labelled by the
// partition, through the hook substitution scheme.
AlgebraElement<Rational> diagonal_matrix_element(const Partition& shape);

} // namespace hookfusion
