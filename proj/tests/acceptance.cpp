// Acceptance gate: every release-blocking property of the library in one
// binary, one line of output per criterion. Exit status 0 only if all pass.
#include "hookfusion/fusion.hpp"
#include "hookfusion/reorder.hpp"
#include "hookfusion/seminormal.hpp"
#include "hookfusion/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace hookfusion;

namespace {

std::map<Partition, AlgebraElement<Rational>> limit_cache;

const AlgebraElement<Rational>& limit_of(const Partition& shape) {
    auto it = limit_cache.find(shape);
    if (it == limit_cache.end())
        it = limit_cache.emplace(shape, diagonal_matrix_element(shape)).first;
    return it->second;
}

std::vector<Partition> shapes_up_to(int max_n) {
    std::vector<Partition> out;
    for (int n = 1; n <= max_n; ++n)
        for (auto& shape : partitions_of(n)) out.push_back(std::move(shape));
    return out;
}

bool oracle_agreement() {
    const auto shapes = shapes_up_to(6);
    if (shapes.size() != 29) {
        std::cerr << "expected 29 shapes, found " << shapes.size() << "\n";
        return false;
    }
    for (const auto& shape : shapes)
        if (limit_of(shape) != diagonal_element_oracle(shape)) {
            std::cerr << "oracle disagrees for " << shape.str() << "\n";
            return false;
        }
    return true;
}

bool regular_limits() {
    for (const auto& shape : shapes_up_to(8)) {
        const HookTableau T(shape);
        const auto product = fusion_product(T, SubstitutionScheme::standard(T, SchemeKind::hook));
        for (const auto& [g, f] : product.terms())
            if (f.denominator().coeff(0).is_zero()) {
                std::cerr << "pole at eps=0 for " << shape.str() << " in coefficient of "
                          << g.cycle_string() << "\n";
                return false;
            }
    }
    return true;
}

bool equal_point_evaluator() {
    for (const auto& shape : shapes_up_to(6))
        if (evaluate_equal_z(HookTableau(shape)) != limit_of(shape)) {
            std::cerr << "equal-point evaluation differs for " << shape.str() << "\n";
            return false;
        }
    return true;
}

bool scheme_agreement() {
    for (const auto& shape : shapes_up_to(6)) {
        const HookTableau T(shape);
        for (SchemeKind kind : {SchemeKind::row, SchemeKind::column})
            if (evaluate_limit(T, SubstitutionScheme::standard(T, kind)) != limit_of(shape)) {
                std::cerr << "scheme disagreement for " << shape.str() << "\n";
                return false;
            }
    }
    return true;
}

bool unit_coefficient() {
    for (const auto& shape : shapes_up_to(6)) {
        const Rational c = limit_of(shape).coeff_at(Permutation::identity(shape.n()));
        if (!c.is_one()) {
            std::cerr << "identity coefficient of " << shape.str() << " is " << c << "\n";
            return false;
        }
    }
    return true;
}

bool phi_invariance() {
    for (const auto& shape : shapes_up_to(6)) {
        const auto& F = limit_of(shape);
        if (F.phi() != F) {
            std::cerr << "element of " << shape.str() << " is not phi-invariant\n";
            return false;
        }
    }
    return true;
}

bool idempotency_and_dimension() {
    for (const auto& shape : shapes_up_to(6)) {
        const auto& F = limit_of(shape);
        const Rational scale(dimension(shape), factorial_integer(shape.n()));
        const auto E = scale * F;
        if (E * E != E) {
            std::cerr << "scaled element of " << shape.str() << " is not idempotent\n";
            return false;
        }
    }
    const Partition big({3, 3, 2});
    if (dimension(big) != 42) {
        std::cerr << "hook length formula gives " << dimension(big).get_str()
                  << " for 3,3,2\n";
        return false;
    }
    if (enumerate_standard_tableaux(big).size() != 42) {
        std::cerr << "tableau enumeration gives " << enumerate_standard_tableaux(big).size()
                  << " for 3,3,2\n";
        return false;
    }
    return true;
}

bool divisibility_signs() {
    for (const auto& shape : shapes_up_to(6)) {
        const auto report = divisibility_sign_check(shape);
        if (report.outcome != Outcome::pass) {
            std::cerr << "sign identity fails for " << shape.str() << ": " << report.witness
                      << "\n";
            return false;
        }
    }
    return true;
}

bool modular_membership() {
    const Partition shape({3, 3, 2});
    const HookTableau T(shape);
    const auto& F = limit_of(shape);
    for (const auto& [u, v] : {std::pair{4, 6}, std::pair{5, 8}}) {
        const auto D = left_divisor_product(T, u, v);
        int agreed = 0;
        for (std::uint64_t prime : draw_primes(0, 4)) {
            if (agreed == 2) break;
            bool member = false;
            std::string witness;
            try {
                member = membership_mod(F, D, u, v, prime, &witness);
            } catch (const std::runtime_error&) {
                continue; // prime collides with a denominator; cannot decide
            }
            if (!member) {
                std::cerr << "pair (" << u << "," << v << "): " << witness << "\n";
                return false;
            }
            ++agreed;
        }
        if (agreed < 2) {
            std::cerr << "pair (" << u << "," << v << "): fewer than two usable primes\n";
            return false;
        }
    }
    return true;
}

bool leading_hook_factorization() {
    const Partition shape({3, 3, 2});
    const HookTableau T(shape);
    const auto prefix = equal_z_block_prefix(T, 1);
    const auto tail = shift_embed(limit_of(Partition({2, 1})), 5, 8);
    if (limit_of(shape) != prefix * tail) {
        std::cerr << "block prefix times shifted element differs from the whole\n";
        return false;
    }
    return true;
}

bool ordering_tokens() {
    const HookTableau T(Partition({3, 3, 2}));
    const auto seq = hook_ordering(T);
    const std::string plain =
        "f12 f13 f23 f14 f24 f34 f15 f25 f35 (f16 f26) f36 f17 (f27 f37) f18 f28 f38"
        " · f45 f46 f56 f47 f57 (f48 f58) · f67 f68 f78";
    if (render(seq) != plain) {
        std::cerr << "plain rendering is \"" << render(seq) << "\"\n";
        return false;
    }
    int groups = 0;
    for (std::size_t k = 0; k < seq.factors.size(); ++k)
        if (seq.factors[k].tag == FactorTag::singularity) {
            if (k + 1 >= seq.factors.size() ||
                seq.factors[k + 1].tag != FactorTag::triple_term) {
                std::cerr << "singularity without a following triple term\n";
                return false;
            }
            ++groups;
        }
    if (groups != 3) {
        std::cerr << "expected 3 singularity groups, found " << groups << "\n";
        return false;
    }
    const std::string inserted =
        "f12 f13 f23 f14 f24 f34 f15 f25 f35 (1/2 f12 f16 f26) f36 f17 (1/2 f23 f27 f37)"
        " f18 f28 f38 · f45 f46 f56 f47 f57 (1/2 f45 f48 f58) · f67 f68 f78";
    if (render(insert_idempotents(seq, T)) != inserted) {
        std::cerr << "inserted rendering is \"" << render(insert_idempotents(seq, T)) << "\"\n";
        return false;
    }
    return true;
}

bool exchange_relations() {
    std::mt19937_64 rng(0x20260816ull);
    auto draw = [&rng] {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 5) + 1;
        return Rational(num, den);
    };
    int rounds = 0;
    while (rounds < 100) {
        const Rational u = draw(), v = draw(), w = draw(), u2 = draw(), v2 = draw();
        if (u == v || u == w || v == w || u2 == v2) continue;
        if (!yang_baxter_triple(u, v, w)) {
            std::cerr << "triple relation fails at (" << u << ", " << v << ", " << w << ")\n";
            return false;
        }
        if (!yang_baxter_commute(u, v, u2, v2)) {
            std::cerr << "disjoint factors do not commute at (" << u << ", " << v << ", " << u2
                      << ", " << v2 << ")\n";
            return false;
        }
        const Rational diff = u - v;
        if (inverses_check(u, v) != Rational(1) - (diff * diff).reciprocal()) {
            std::cerr << "inverse scalar differs at (" << u << ", " << v << ")\n";
            return false;
        }
        ++rounds;
    }
    return true;
}

bool direct_hook_products() {
    for (const auto& shape : shapes_up_to(7)) {
        if (!shape.is_hook()) continue;
        if (hook_shape_direct(shape) != limit_of(shape)) {
            std::cerr << "direct hook product differs for " << shape.str() << "\n";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"oracle agreement for every shape of degree <= 6", oracle_agreement},
        {"regular limits for every shape of degree <= 8", regular_limits},
        {"equal-point evaluator matches the limit for degree <= 6", equal_point_evaluator},
        {"hook, row, and column schemes agree for degree <= 6", scheme_agreement},
        {"unit identity coefficient for degree <= 6", unit_coefficient},
        {"phi-invariance for degree <= 6", phi_invariance},
        {"idempotency for degree <= 6 and the 42-dimensional shape 3,3,2",
         idempotency_and_dimension},
        {"divisibility sign identities for degree <= 6", divisibility_signs},
        {"divisor membership for 3,3,2 pairs (4,6) and (5,8) by two-prime agreement",
         modular_membership},
        {"leading-hook factorization of the 3,3,2 element", leading_hook_factorization},
        {"token rendering of the 3,3,2 ordering", ordering_tokens},
        {"exchange relations at 100 random rational points", exchange_relations},
        {"direct products for hook shapes of degree <= 7", direct_hook_products},
    };

    bool all_ok = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[k].second();
        } catch (const std::exception& e) {
            std::cerr << "criterion " << k + 1 << " raised: " << e.what() << "\n";
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%2zu/13] %s %s\n", k + 1, ok ? "PASS" : "FAIL", criteria[k].first.c_str());
        std::fflush(stdout);
        std::fprintf(stderr, "criterion %zu took %.1f ms\n", k + 1, ms);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
