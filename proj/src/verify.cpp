#include "hookfusion/verify.hpp"

#include "hookfusion/fusion.hpp"
#include "hookfusion/reorder.hpp"
#include "hookfusion/seminormal.hpp"

#include "json.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hookfusion {

namespace {

// Lazily shared per-partition artifacts so checks on the same partition do
// not recompute the expensive fusion limit.
struct PartitionContext {
    explicit PartitionContext(Partition shape) : shape(std::move(shape)) {}

    const HookTableau& tableau() {
        if (!T) T.emplace(shape);
        return *T;
    }

    const AlgebraElement<Rational>& limit() {
        if (!F) {
            const auto& tab = tableau();
            F = evaluate_limit(tab, SubstitutionScheme::standard(tab, SchemeKind::hook));
        }
        return *F;
    }

    Partition shape;
    std::optional<HookTableau> T;
    std::optional<AlgebraElement<Rational>> F;
};

CheckReport make_report(const std::string& check, const Partition& shape) {
    CheckReport r;
    r.check = check;
    r.partition = shape;
    r.outcome = Outcome::pass;
    return r;
}

void fail(CheckReport& r, const std::string& witness) {
    r.outcome = Outcome::fail;
    if (r.witness.empty()) r.witness = witness;
}

std::string perm_witness(const Permutation& g) { return g.cycle_string(); }

// ---- checks ----------------------------------------------------------

CheckReport regularity_impl(PartitionContext& ctx) {
    CheckReport r = make_report("regularity", ctx.shape);
    const auto& T = ctx.tableau();
    for (SchemeKind kind : {SchemeKind::hook, SchemeKind::row, SchemeKind::column}) {
        const auto product = fusion_product(T, SubstitutionScheme::standard(T, kind));
        for (const auto& [g, f] : product.terms()) {
            if (f.denominator().coeff(0).is_zero()) {
                fail(r, "denominator vanishes at eps=0 in coefficient of " + perm_witness(g));
                return r;
            }
        }
    }
    return r;
}

CheckReport scheme_agreement_impl(PartitionContext& ctx) {
    CheckReport r = make_report("scheme-agreement", ctx.shape);
    const auto& T = ctx.tableau();
    const auto& hook = ctx.limit();
    for (SchemeKind kind : {SchemeKind::row, SchemeKind::column}) {
        const auto other = evaluate_limit(T, SubstitutionScheme::standard(T, kind));
        if (other != hook) {
            fail(r, std::string("limit under the ") +
                        (kind == SchemeKind::row ? "row" : "column") +
                        " scheme differs from the hook scheme");
            return r;
        }
    }
    return r;
}

CheckReport slope_independence_impl(PartitionContext& ctx) {
    CheckReport r = make_report("slope-independence", ctx.shape);
    const auto& T = ctx.tableau();
    const int groups = scheme_group_count(T, SchemeKind::hook);
    std::vector<int> slopes;
    for (int i = 1; i <= groups; ++i) slopes.push_back(3 * i + 1);
    const auto other =
        evaluate_limit(T, SubstitutionScheme::with_group_slopes(T, SchemeKind::hook, slopes));
    if (other != ctx.limit()) fail(r, "limit depends on the slope assignment");
    return r;
}

CheckReport unit_coefficient_impl(PartitionContext& ctx) {
    CheckReport r = make_report("unit-coefficient", ctx.shape);
    const Rational c = ctx.limit().coeff_at(Permutation::identity(ctx.shape.n()));
    if (!c.is_one()) fail(r, "identity coefficient is " + c.str());
    return r;
}

CheckReport phi_impl(PartitionContext& ctx) {
    CheckReport r = make_report("phi-invariance", ctx.shape);
    if (ctx.limit().phi() != ctx.limit()) fail(r, "element is not phi-invariant");
    return r;
}

CheckReport idempotency_impl(PartitionContext& ctx) {
    CheckReport r = make_report("idempotency", ctx.shape);
    const auto& F = ctx.limit();
    const Rational scale(dimension(ctx.shape), factorial_integer(ctx.shape.n()));
    const auto E = scale * F;
    if (E * E != E) fail(r, "scaled element is not idempotent with factor " + scale.str());
    return r;
}

CheckReport evaluator_agreement_impl(PartitionContext& ctx) {
    CheckReport r = make_report("evaluator-agreement", ctx.shape);
    if (evaluate_equal_z(ctx.tableau()) != ctx.limit())
        fail(r, "direct equal-point evaluation differs from the limit");
    return r;
}

CheckReport oracle_equality_impl(PartitionContext& ctx) {
    CheckReport r = make_report("oracle-equality", ctx.shape);
    const auto oracle = diagonal_element_oracle(ctx.shape);
    const auto& F = ctx.limit();
    if (oracle != F) {
        for (const auto& [g, c] : oracle.terms()) {
            if (F.coeff_at(g) != c) {
                fail(r, "coefficient of " + perm_witness(g) + " is " + F.coeff_at(g).str() +
                            ", oracle has " + c.str());
                return r;
            }
        }
        fail(r, "fusion element has terms outside the oracle support");
    }
    return r;
}

CheckReport stripping_impl(PartitionContext& ctx) {
    CheckReport r = make_report("stripping", ctx.shape);
    const int d = ctx.shape.durfee();
    for (int k = 1; k < d; ++k) {
        if (!stripping_check(ctx.shape, k)) {
            fail(r, "stripping the first " + std::to_string(k) + " hooks fails");
            return r;
        }
    }
    return r;
}

CheckReport reordering_equivalence_impl(PartitionContext& ctx) {
    CheckReport r = make_report("reordering-equivalence", ctx.shape);
    if (!check_reordering_equivalence(ctx.tableau()))
        fail(r, "hook-ordered product differs from the lexicographic product");
    return r;
}

CheckReport idempotent_no_effect_impl(PartitionContext& ctx) {
    CheckReport r = make_report("idempotent-no-effect", ctx.shape);
    if (!idempotent_no_effect_check(ctx.tableau()))
        fail(r, "inserting idempotents changes the product");
    return r;
}

// Adjacent pairs that divide F with a bare sign: column-adjacent (u, v)
// with content(v) < 0 give (uv)F = F(uv) = -F; row-adjacent (u, v) with
// content(u) > 0 give (uv)F = F(uv) = F.
CheckReport divisibility_sign_impl(PartitionContext& ctx) {
    CheckReport r = make_report("divisibility-signs", ctx.shape);
    const auto& T = ctx.tableau();
    const auto& F = ctx.limit();
    const auto& shape = ctx.shape.parts;
    const auto conj = ctx.shape.conjugate();
    const int n = ctx.shape.n();
    auto check_pair = [&](int u, int v, int sign) {
        const Permutation t = Permutation::transposition(n, u, v);
        const AlgebraElement<Rational> expected = sign > 0 ? F : -F;
        if (F.left_translate(t) != expected)
            fail(r, "(" + std::to_string(u) + " " + std::to_string(v) + ") * F != " +
                        (sign > 0 ? "F" : "-F"));
        else if (F.right_translate(t) != expected)
            fail(r, "F * (" + std::to_string(u) + " " + std::to_string(v) + ") != " +
                        (sign > 0 ? "F" : "-F"));
    };
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (int j = 1; j <= shape[i]; ++j) {
            const int row = static_cast<int>(i) + 1;
            if (conj[static_cast<std::size_t>(j - 1)] > row) {
                const int u = T.entry(row, j), v = T.entry(row + 1, j);
                if (T.content(v) < 0) check_pair(u, v, -1);
            }
            if (j < shape[i]) {
                const int u = T.entry(row, j), v = T.entry(row, j + 1);
                if (T.content(u) > 0) check_pair(u, v, +1);
            }
            if (r.outcome == Outcome::fail) return r;
        }
    return r;
}

struct PrimeUnusable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

// Deterministic Miller-Rabin, valid for every 64-bit input with this base set.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t rational_mod(const Rational& x, std::uint64_t p) {
    const std::uint64_t num =
        mpz_fdiv_ui(x.numerator().get_mpz_t(), static_cast<unsigned long>(p));
    const std::uint64_t den =
        mpz_fdiv_ui(x.denominator().get_mpz_t(), static_cast<unsigned long>(p));
    if (den == 0) throw PrimeUnusable("denominator vanishes modulo the prime");
    return mulmod(num, powmod(den, p - 2, p), p);
}

// Permutations of the contiguous points lo..hi inside S_n, sorted.
std::vector<Permutation> subgroup_on_interval(int n, int lo, int hi) {
    const int m = hi - lo + 1;
    std::vector<int> window(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) window[static_cast<std::size_t>(i)] = lo + i;
    std::vector<Permutation> out;
    std::vector<int> base = Permutation::identity(n).one_line();
    do {
        std::vector<int> img = base;
        for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(lo - 1 + i)] = window[static_cast<std::size_t>(i)];
        out.push_back(Permutation::from_one_line(img));
    } while (std::next_permutation(window.begin(), window.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Split target into right cosets of the interval subgroup: each term g
// factors uniquely as h ∘ g0 with h permuting lo..hi and g0 the canonical
// representative sending the preimage points, in increasing order, to
// lo..hi. Returns coefficient vectors indexed like `subgroup`.
std::map<std::vector<int>, std::vector<Rational>> coset_split(
    const AlgebraElement<Rational>& target, const std::vector<Permutation>& subgroup,
    const std::map<Permutation, int>& subgroup_index, int lo, int hi) {
    const int n = target.degree();
    const int m = hi - lo + 1;
    std::map<std::vector<int>, std::vector<Rational>> cosets;
    for (const auto& [g, c] : target.terms()) {
        std::vector<int> pre;
        for (int x = 1; x <= n; ++x) {
            const int y = g(x);
            if (lo <= y && y <= hi) pre.push_back(x);
        }
        std::vector<int> rep = g.one_line();
        for (int i = 0; i < m; ++i) rep[static_cast<std::size_t>(pre[static_cast<std::size_t>(i)] - 1)] = lo + i;
        std::vector<int> h = Permutation::identity(n).one_line();
        for (int i = 0; i < m; ++i) h[static_cast<std::size_t>(lo - 1 + i)] = g(pre[static_cast<std::size_t>(i)]);
        auto& vec = cosets[rep];
        if (vec.empty()) vec.assign(subgroup.size(), Rational(0));
        vec[static_cast<std::size_t>(subgroup_index.at(Permutation::from_one_line(h)))] = c;
    }
    return cosets;
}

// Left null space basis of the matrix over the rationals, rows as vectors.
std::vector<std::vector<Rational>> left_nullspace_exact(const std::vector<std::vector<Rational>>& M) {
    const std::size_t dim = M.size();
    // Work on the transpose: null(M^T) consists of the left null vectors.
    std::vector<std::vector<Rational>> A(dim, std::vector<Rational>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) A[i][j] = M[j][i];
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < dim; ++col) {
        std::size_t sel = row;
        while (sel < dim && A[sel][col].is_zero()) ++sel;
        if (sel == dim) continue;
        std::swap(A[sel], A[row]);
        const Rational inv = A[row][col].reciprocal();
        for (std::size_t j = col; j < dim; ++j) A[row][j] *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || A[i][col].is_zero()) continue;
            const Rational f = A[i][col];
            for (std::size_t j = col; j < dim; ++j) A[i][j] -= f * A[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(dim, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = -A[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<std::uint64_t>> left_nullspace_mod(
    const std::vector<std::vector<std::uint64_t>>& M, std::uint64_t p) {
    const std::size_t dim = M.size();
    std::vector<std::vector<std::uint64_t>> A(dim, std::vector<std::uint64_t>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) A[i][j] = M[j][i];
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < dim; ++col) {
        std::size_t sel = row;
        while (sel < dim && A[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(A[sel], A[row]);
        const std::uint64_t inv = powmod(A[row][col], p - 2, p);
        for (std::size_t j = col; j < dim; ++j) A[row][j] = mulmod(A[row][j], inv, p);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || A[i][col] == 0) continue;
            const std::uint64_t f = A[i][col];
            for (std::size_t j = col; j < dim; ++j) {
                const std::uint64_t sub = mulmod(f, A[row][j], p);
                A[i][j] = (A[i][j] + p - sub) % p;
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint64_t> v(dim, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = (p - A[r][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string coset_witness(const std::vector<int>& rep) {
    return "coset of " + Permutation::from_one_line(rep).cycle_string();
}

} // namespace

std::vector<std::uint64_t> draw_primes(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::uint64_t> primes;
    while (static_cast<int>(primes.size()) < count) {
        std::uint64_t candidate = (rng() | (1ull << 60)) | 1ull;
        candidate &= (1ull << 61) - 1;
        if (!is_prime_u64(candidate)) continue;
        if (std::find(primes.begin(), primes.end(), candidate) != primes.end()) continue;
        primes.push_back(candidate);
    }
    return primes;
}

bool membership_exact(const AlgebraElement<Rational>& target, const AlgebraElement<Rational>& D,
                      int lo, int hi, std::string* witness) {
    const int n = target.degree();
    const auto subgroup = subgroup_on_interval(n, lo, hi);
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < subgroup.size(); ++i) index.emplace(subgroup[i], static_cast<int>(i));

    const std::size_t dim = subgroup.size();
    std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim));
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t col = 0; col < dim; ++col)
            M[row][col] = D.coeff_at(subgroup[row].compose(subgroup[col].inverse()));

    const auto nullspace = left_nullspace_exact(M);
    for (const auto& [rep, vec] : coset_split(target, subgroup, index, lo, hi)) {
        for (const auto& y : nullspace) {
            Rational dot(0);
            for (std::size_t i = 0; i < dim; ++i) dot += y[i] * vec[i];
            if (!dot.is_zero()) {
                if (witness) *witness = coset_witness(rep) + " escapes the image";
                return false;
            }
        }
    }
    return true;
}

bool membership_mod(const AlgebraElement<Rational>& target, const AlgebraElement<Rational>& D,
                    int lo, int hi, std::uint64_t prime, std::string* witness) {
    const int n = target.degree();
    const auto subgroup = subgroup_on_interval(n, lo, hi);
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < subgroup.size(); ++i) index.emplace(subgroup[i], static_cast<int>(i));

    const std::size_t dim = subgroup.size();
    std::vector<std::vector<std::uint64_t>> M(dim, std::vector<std::uint64_t>(dim));
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t col = 0; col < dim; ++col)
            M[row][col] =
                rational_mod(D.coeff_at(subgroup[row].compose(subgroup[col].inverse())), prime);

    const auto nullspace = left_nullspace_mod(M, prime);
    for (const auto& [rep, vec] : coset_split(target, subgroup, index, lo, hi)) {
        std::vector<std::uint64_t> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = rational_mod(vec[i], prime);
        for (const auto& y : nullspace) {
            std::uint64_t dot = 0;
            for (std::size_t i = 0; i < dim; ++i)
                dot = (dot + mulmod(y[i], v[i], prime)) % prime;
            if (dot != 0) {
                if (witness) *witness = coset_witness(rep) + " escapes the image modulo " +
                                        std::to_string(prime);
                return false;
            }
        }
    }
    return true;
}

AlgebraElement<Rational> left_divisor_product(const HookTableau& T, int u, int v) {
    const auto [ru, cu] = T.box_of(u);
    const auto [rv, cv] = T.box_of(v);
    const int n = T.n();
    int pivot = 0;
    if (rv == ru + 1 && cv == cu) {
        if (T.content(v) < 0)
            throw std::invalid_argument("left_divisor_product: pair divides by a bare sign");
        // Last entry in the row containing u.
        pivot = T.entry(ru, T.shape().parts[static_cast<std::size_t>(ru - 1)]);
    } else if (rv == ru && cv == cu + 1) {
        if (T.content(u) > 0)
            throw std::invalid_argument("left_divisor_product: pair divides by a bare sign");
        // Last entry in the column containing u.
        pivot = T.entry(T.shape().conjugate()[static_cast<std::size_t>(cu - 1)], cu);
    } else {
        throw std::invalid_argument("left_divisor_product: entries are not adjacent in the diagram");
    }
    AlgebraElement<Rational> out = AlgebraElement<Rational>::identity(n);
    for (int i = pivot; i >= u; --i)
        for (int j = pivot + 1; j <= v; ++j)
            out *= factor_at(n, i, j, Rational(T.content(i)), Rational(T.content(j)));
    return out;
}

namespace {

CheckReport divisibility_products_impl(PartitionContext& ctx, std::uint64_t seed) {
    CheckReport r = make_report("divisibility-products", ctx.shape);
    const auto& T = ctx.tableau();
    const auto& shape = ctx.shape.parts;
    const auto conj = ctx.shape.conjugate();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (int j = 1; j <= shape[i]; ++j) {
            const int row = static_cast<int>(i) + 1;
            if (conj[static_cast<std::size_t>(j - 1)] > row) {
                const int u = T.entry(row, j), v = T.entry(row + 1, j);
                if (T.content(v) >= 0) pairs.emplace_back(u, v);
            }
            if (j < shape[i]) {
                const int u = T.entry(row, j), v = T.entry(row, j + 1);
                if (T.content(u) <= 0) pairs.emplace_back(u, v);
            }
        }
    for (const auto& [u, v] : pairs) {
        CheckReport one = divisibility_product_check(ctx.shape, u, v, seed);
        if (one.outcome == Outcome::fail) {
            fail(r, one.witness);
            return r;
        }
    }
    return r;
}

} // namespace

CheckReport divisibility_product_check(const Partition& shape, int u, int v, std::uint64_t seed) {
    CheckReport r = make_report("divisibility-products", shape);
    const HookTableau T(shape);
    const auto [ru, cu] = T.box_of(u);
    const auto [rv, cv] = T.box_of(v);

    const bool column_adjacent = rv == ru + 1 && cv == cu;
    const bool row_adjacent = rv == ru && cv == cu + 1;
    if (!column_adjacent && !row_adjacent) {
        fail(r, "entries " + std::to_string(u) + "," + std::to_string(v) +
                    " are not adjacent in the diagram");
        return r;
    }

    const auto F = diagonal_matrix_element(shape);
    const int n = shape.n();

    // Sign cases carry no product divisor; the sign identity is the whole claim.
    if ((column_adjacent && T.content(v) < 0) || (row_adjacent && T.content(u) > 0)) {
        const Permutation t = Permutation::transposition(n, u, v);
        const int sign = column_adjacent ? -1 : 1;
        const AlgebraElement<Rational> expected = sign > 0 ? F : -F;
        if (F.left_translate(t) != expected || F.right_translate(t) != expected)
            fail(r, "sign identity fails for (" + std::to_string(u) + " " + std::to_string(v) + ")");
        return r;
    }

    const auto D = left_divisor_product(T, u, v);
    std::string witness;
    if (n <= 5) {
        if (!membership_exact(F, D, u, v, &witness))
            fail(r, "pair (" + std::to_string(u) + "," + std::to_string(v) + "): " + witness);
        return r;
    }
    int agreed = 0;
    for (std::uint64_t prime : draw_primes(seed, 4)) {
        if (agreed == 2) break;
        bool member = false;
        try {
            member = membership_mod(F, D, u, v, prime, &witness);
        } catch (const PrimeUnusable&) {
            continue; // a denominator vanished; this prime cannot decide
        }
        if (!member) {
            fail(r, "pair (" + std::to_string(u) + "," + std::to_string(v) + "): " + witness);
            return r;
        }
        ++agreed;
    }
    if (agreed < 2)
        fail(r, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                    "): fewer than two usable primes");
    return r;
}

// ---- public single-partition wrappers --------------------------------

CheckReport regularity_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return regularity_impl(ctx);
}
CheckReport scheme_agreement_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return scheme_agreement_impl(ctx);
}
CheckReport slope_independence_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return slope_independence_impl(ctx);
}
CheckReport unit_coefficient_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return unit_coefficient_impl(ctx);
}
CheckReport phi_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return phi_impl(ctx);
}
CheckReport idempotency_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return idempotency_impl(ctx);
}
CheckReport evaluator_agreement_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return evaluator_agreement_impl(ctx);
}
CheckReport oracle_equality_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return oracle_equality_impl(ctx);
}
CheckReport stripping_suite_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return stripping_impl(ctx);
}
CheckReport divisibility_sign_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return divisibility_sign_impl(ctx);
}
CheckReport divisibility_products_check(const Partition& shape, std::uint64_t seed) {
    PartitionContext ctx(shape);
    return divisibility_products_impl(ctx, seed);
}
CheckReport reordering_equivalence_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return reordering_equivalence_impl(ctx);
}
CheckReport idempotent_no_effect_suite_check(const Partition& shape) {
    PartitionContext ctx(shape);
    return idempotent_no_effect_impl(ctx);
}

// ---- suite ------------------------------------------------------------

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry = {
        {"regularity", 8},
        {"reordering-equivalence", 8},
        {"idempotent-no-effect", 8},
        {"unit-coefficient", 8},
        {"phi-invariance", 8},
        {"scheme-agreement", 6},
        {"slope-independence", 5},
        {"evaluator-agreement", 6},
        {"idempotency", 6},
        {"oracle-equality", 7},
        {"stripping", 8},
        {"divisibility-signs", 8},
        {"divisibility-products", 8},
    };
    return registry;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("run_suite: max_n must be positive");
    std::vector<CheckInfo> selected;
    if (options.checks.empty()) {
        selected = check_registry();
    } else {
        for (const auto& name : options.checks) {
            const auto& reg = check_registry();
            auto it = std::find_if(reg.begin(), reg.end(),
                                   [&](const CheckInfo& c) { return c.name == name; });
            if (it == reg.end()) throw std::invalid_argument("run_suite: unknown check " + name);
            selected.push_back(*it);
        }
    }

    std::vector<Partition> shapes;
    for (int n = 1; n <= options.max_n; ++n)
        for (auto& shape : partitions_of(n)) shapes.push_back(std::move(shape));

    using Clock = std::chrono::steady_clock;
    std::vector<std::vector<CheckReport>> slots(shapes.size());
    auto run_one = [&](std::size_t task) {
        PartitionContext ctx(shapes[task]);
        auto& out = slots[task];
        for (const auto& info : selected) {
            if (ctx.shape.n() > info.bound) {
                CheckReport r = make_report(info.name, ctx.shape);
                r.outcome = Outcome::skipped;
                out.push_back(std::move(r));
                continue;
            }
            const auto start = Clock::now();
            CheckReport r;
            if (info.name == "regularity") r = regularity_impl(ctx);
            else if (info.name == "reordering-equivalence") r = reordering_equivalence_impl(ctx);
            else if (info.name == "idempotent-no-effect") r = idempotent_no_effect_impl(ctx);
            else if (info.name == "unit-coefficient") r = unit_coefficient_impl(ctx);
            else if (info.name == "phi-invariance") r = phi_impl(ctx);
            else if (info.name == "scheme-agreement") r = scheme_agreement_impl(ctx);
            else if (info.name == "slope-independence") r = slope_independence_impl(ctx);
            else if (info.name == "evaluator-agreement") r = evaluator_agreement_impl(ctx);
            else if (info.name == "idempotency") r = idempotency_impl(ctx);
            else if (info.name == "oracle-equality") r = oracle_equality_impl(ctx);
            else if (info.name == "stripping") r = stripping_impl(ctx);
            else if (info.name == "divisibility-signs") r = divisibility_sign_impl(ctx);
            else if (info.name == "divisibility-products") r = divisibility_products_impl(ctx, options.seed);
            else throw std::logic_error("run_suite: unhandled check " + info.name);
            r.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            out.push_back(std::move(r));
        }
    };

    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(shapes.size())));
    if (jobs == 1) {
        for (std::size_t task = 0; task < shapes.size(); ++task) run_one(task);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (std::size_t task = next.fetch_add(1); task < shapes.size();
                     task = next.fetch_add(1))
                    run_one(task);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<CheckReport> reports;
    for (auto& slot : slots)
        for (auto& r : slot) reports.push_back(std::move(r));
    return reports;
}

std::string to_json_line(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["check"] = report.check;
    std::vector<int> parts = report.partition.parts;
    j["partition"] = parts;
    j["outcome"] = report.outcome == Outcome::pass    ? "pass"
                   : report.outcome == Outcome::fail ? "fail"
                                                     : "skipped";
    if (report.outcome == Outcome::fail) j["witness"] = report.witness;
    return j.dump();
}

std::string summary_table(const std::vector<CheckReport>& reports) {
    std::map<std::string, std::array<int, 3>> counts;
    std::vector<std::string> order;
    for (const auto& r : reports) {
        if (!counts.count(r.check)) order.push_back(r.check);
        auto& c = counts[r.check];
        if (r.outcome == Outcome::pass) ++c[0];
        else if (r.outcome == Outcome::fail) ++c[1];
        else ++c[2];
    }
    std::size_t width = 5;
    for (const auto& name : order) width = std::max(width, name.size());
    std::ostringstream os;
    os << std::string(width - 5, ' ') << "check" << "  pass  fail  skip\n";
    int pass = 0, failed = 0, skipped = 0;
    auto row = [&](const std::string& name, int p, int f, int s) {
        os << std::string(width - name.size(), ' ') << name;
        auto cell = [&](int v) {
            std::string t = std::to_string(v);
            os << "  " << std::string(t.size() >= 4 ? 0 : 4 - t.size(), ' ') << t;
        };
        cell(p);
        cell(f);
        cell(s);
        os << "\n";
    };
    for (const auto& name : order) {
        const auto& c = counts[name];
        row(name, c[0], c[1], c[2]);
        pass += c[0];
        failed += c[1];
        skipped += c[2];
    }
    row("total", pass, failed, skipped);
    return os.str();
}

} // namespace hookfusion
