#pragma once

#include "hookfusion/algebra_element.hpp"
#include "hookfusion/young.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hookfusion {

enum class Outcome { pass, fail, skipped };

struct CheckReport {
    std::string check;
    Partition partition;
    Outcome outcome = Outcome::skipped;
    // Enough data to reproduce a failure: offending permutation, pair, or
    // coefficient. Empty on pass.
    std::string witness;
    // Diagnostic only; never serialized, so output stays byte-identical.
    double wall_ms = 0.0;
};

struct SuiteOptions {
    int max_n = 6;
    // Empty means every registered check.
    std::vector<std::string> checks;
    int jobs = 1;
    std::uint64_t seed = 0;
};

struct CheckInfo {
    std::string name;
    // Largest n the check runs at; larger partitions report skipped.
    int bound;
};

const std::vector<CheckInfo>& check_registry();

// Run the selected checks over every partition of every n up to max_n.
// Report order is deterministic (by n, then partition enumeration order,
// then registry order) regardless of the job count.
std::vector<CheckReport> run_suite(const SuiteOptions& options);

// Individual checks. Each builds what it needs from the partition alone.
CheckReport regularity_check(const Partition& shape);
CheckReport scheme_agreement_check(const Partition& shape);
CheckReport slope_independence_check(const Partition& shape);
CheckReport unit_coefficient_check(const Partition& shape);
CheckReport phi_check(const Partition& shape);
CheckReport idempotency_check(const Partition& shape);
CheckReport evaluator_agreement_check(const Partition& shape);
CheckReport oracle_equality_check(const Partition& shape);
CheckReport stripping_suite_check(const Partition& shape);
CheckReport divisibility_sign_check(const Partition& shape);
CheckReport divisibility_products_check(const Partition& shape, std::uint64_t seed = 0);
CheckReport divisibility_product_check(const Partition& shape, int u, int v,
                                       std::uint64_t seed = 0);
CheckReport reordering_equivalence_check(const Partition& shape);
CheckReport idempotent_no_effect_suite_check(const Partition& shape);

// Left divisor attached to an adjacent pair of tableau entries: the single
// sign factor has no product form, so this handles the product cases, with
// (u, v) column-adjacent of nonnegative lower content or row-adjacent of
// nonpositive upper content.
AlgebraElement<Rational> left_divisor_product(const HookTableau& T, int u, int v);

// Decide whether target lies in D * A for the group algebra A, where the
// support of D is contained in the symmetric group on the contiguous points
// lo..hi. Decomposes target into right cosets of that subgroup and tests
// each against the left null space of multiplication by D. Exact rational
// arithmetic.
bool membership_exact(const AlgebraElement<Rational>& target, const AlgebraElement<Rational>& D,
                      int lo, int hi, std::string* witness = nullptr);

// Same test over the prime field F_p; p must exceed every denominator's
// prime factors (a failure to reduce raises).
bool membership_mod(const AlgebraElement<Rational>& target, const AlgebraElement<Rational>& D,
                    int lo, int hi, std::uint64_t prime, std::string* witness = nullptr);

// Deterministic primes near 2^61 drawn from a seeded generator.
std::vector<std::uint64_t> draw_primes(std::uint64_t seed, int count);

// One CheckReport per line; no timing fields.
std::string to_json_line(const CheckReport& report);
// Fixed-width summary: one row per check name with pass/fail/skip counts.
std::string summary_table(const std::vector<CheckReport>& reports);

} // namespace hookfusion
