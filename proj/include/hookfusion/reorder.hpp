#pragma once

#include "hookfusion/algebra_element.hpp"
#include "hookfusion/fusion.hpp"
#include "hookfusion/young.hpp"

#include <string>
#include <vector>

namespace hookfusion {

enum class FactorTag { plain, singularity, triple_term, idempotent };

struct FusionFactor {
    FactorTag tag;
    int p;
    int q;
    // 2i-1 for the column block C_i, 2i for the row block R_i.
    int block;

    bool operator==(const FusionFactor&) const = default;
};

// Ordered, tagged fusion factors grouped into blocks C_1 R_1 ... C_d R_d.
struct FactorSequence {
    int n = 0;
    int hooks = 0;
    std::vector<FusionFactor> factors;
};

// Hook ordering of the fusion product: block C_i takes, for q = 1..n in
// turn, the factors f_uq over the entries u of the i-th principal hook's
// column with u < q; block R_i does the same over the hook's row entries.
// Pairs of equal content are tagged as singularities and the factor
// immediately following each one as its triple term.
FactorSequence hook_ordering(const HookTableau& T);

// Insert (1/2) f_{p,p+1} in front of every singularity (p, q), validating
// that the factor after the singularity is literally f_{p+1,q}.
FactorSequence insert_idempotents(const FactorSequence& seq, const HookTableau& T);

// Token rendering: "f12 f13 (f16 f26) f36 ... · f45 ..." with one "·"
// between nonempty blocks, singularity groups parenthesized, and inserted
// idempotents shown as "1/2 f12".
std::string render(const FactorSequence& seq);

// The regular value of (1/2) f_{p,p+1} f_{pq} f_{p+1,q} at the point where
// the arguments of p and q collide: with c_{p+1} = c_p - 1 it equals
// (1/2)(1 - (p,p+1))(1 + (pq) + (p+1,q)), and with c_{p+1} = c_p + 1 it
// equals (1/2)(1 + (p,p+1))(1 - (pq) - (p+1,q)).
AlgebraElement<Rational> triple_value(int p, int q, const std::vector<int>& contents, int n);

// Evaluate the idempotent-inserted hook ordering directly at the equal
// point: plain factors at their contents, singularity groups through
// triple_value. No rational-function arithmetic involved.
AlgebraElement<Rational> evaluate_equal_z(const HookTableau& T);

// Value at the equal point of the leading blocks C_1 R_1 ... C_k R_k only.
AlgebraElement<Rational> equal_z_block_prefix(const HookTableau& T, int k);

// Exact equality of the lexicographic product and the hook-ordered product
// as elements with rational-function coefficients, under the hook scheme.
bool check_reordering_equivalence(const HookTableau& T);

// Exact check that inserting the idempotents does not change the product.
bool idempotent_no_effect_check(const HookTableau& T);

// f12(u,v) f13(u,w) f23(v,w) = f23(v,w) f13(u,w) f12(u,v) in the degree-3
// group algebra; arguments must be pairwise distinct.
bool yang_baxter_triple(const Rational& u, const Rational& v, const Rational& w);

// Factors on disjoint pairs commute: f12(u1,v1) f34(u2,v2) = f34 f12.
bool yang_baxter_commute(const Rational& u1, const Rational& v1, const Rational& u2,
                         const Rational& v2);

// f12(u,v) f21(v,u) is scalar; returns that scalar and checks it equals
// 1 - 1/(u-v)^2.
Rational inverses_check(const Rational& u, const Rational& v);

// F of the full shape equals the block prefix value times the shifted F of
// the shape with its first k principal hooks stripped.
bool stripping_check(const Partition& shape, int k);

} // namespace hookfusion
