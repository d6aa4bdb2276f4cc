#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hookfusion/seminormal.hpp"

#include <set>

using namespace hookfusion;

namespace {

Matrix from_rows(std::vector<std::vector<Rational>> rows) { return rows; }

int inversions(const std::vector<int>& a) {
    int count = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++count;
    return count;
}

} // namespace

TEST_CASE("one-dimensional representations") {
    const auto triv = build_seminormal(Partition({2}));
    CHECK(triv.dim() == 1);
    CHECK(triv.generator[0] == from_rows({{Rational(1)}}));
    CHECK(triv.hook_tableau_index == 0);

    const auto sign = build_seminormal(Partition({1, 1}));
    CHECK(sign.dim() == 1);
    CHECK(sign.generator[0] == from_rows({{Rational(-1)}}));
}

TEST_CASE("two-dimensional representation of shape (2,1)") {
    const auto rep = build_seminormal(Partition({2, 1}));
    CHECK(rep.dim() == 2);
    CHECK(rep.basis[0] == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(rep.basis[1] == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(rep.hook_tableau_index == 1);

    CHECK(rep.generator[0] == from_rows({{Rational(1), Rational(0)},
                                         {Rational(0), Rational(-1)}}));
    CHECK(rep.generator[1] == from_rows({{Rational(-1, 2), Rational(1)},
                                         {Rational(3, 4), Rational(1, 2)}}));
}

TEST_CASE("generators satisfy the defining relations") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto rep = build_seminormal(shape);
            const Matrix id = matrix_identity(rep.dim());
            for (std::size_t k = 0; k < rep.generator.size(); ++k) {
                const Matrix& m = rep.generator[k];
                CHECK(matrix_multiply(m, m) == id);
                if (k + 1 < rep.generator.size()) {
                    const Matrix& m2 = rep.generator[k + 1];
                    CHECK(matrix_multiply(m, matrix_multiply(m2, m)) ==
                          matrix_multiply(m2, matrix_multiply(m, m2)));
                }
                for (std::size_t j = k + 2; j < rep.generator.size(); ++j)
                    CHECK(matrix_multiply(m, rep.generator[j]) ==
                          matrix_multiply(rep.generator[j], m));
            }
        }
}

TEST_CASE("adjacent words") {
    CHECK(adjacent_word(Permutation::identity(4)).empty());
    CHECK(adjacent_word(Permutation::transposition(3, 1, 2)) == std::vector<int>{1});

    for (std::uint64_t r = 0; r < 24; ++r) {
        const auto g = Permutation::from_rank(4, r);
        const auto w = adjacent_word(g);
        CHECK(static_cast<int>(w.size()) == inversions(g.one_line()));
        Permutation acc = Permutation::identity(4);
        for (int k : w) acc = Permutation::transposition(4, k, k + 1).compose(acc);
        CHECK(acc == g);
    }
}

TEST_CASE("representing matrices are word independent") {
    const auto rep = build_seminormal(Partition({2, 2}));
    CHECK(rep_matrix(rep, Permutation::identity(4)) == matrix_identity(rep.dim()));
    CHECK(rep_matrix(rep, Permutation::transposition(4, 1, 2)) == rep.generator[0]);

    // The reversal via rep_matrix agrees with folding its standard word.
    const auto w0_word = longest_element_word(4);
    Matrix folded = matrix_identity(rep.dim());
    Permutation w0 = Permutation::identity(4);
    for (int k : w0_word) {
        folded = matrix_multiply(folded, rep.generator[static_cast<std::size_t>(k - 1)]);
        w0 = w0.compose(Permutation::transposition(4, k, k + 1));
    }
    CHECK(w0.one_line() == std::vector<int>{4, 3, 2, 1});
    CHECK(rep_matrix(rep, w0) == folded);

    // Homomorphism property over all of S_4.
    for (std::uint64_t r = 0; r < 24; ++r) {
        const auto g = Permutation::from_rank(4, r);
        const auto h = Permutation::from_rank(4, (r * 7 + 3) % 24);
        CHECK(rep_matrix(rep, g.compose(h)) ==
              matrix_multiply(rep_matrix(rep, g), rep_matrix(rep, h)));
    }

    CHECK_THROWS_AS(rep_matrix(rep, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("plain changes visit every permutation by adjacent swaps") {
    for (int n = 1; n <= 6; ++n) {
        PlainChanges chain(n);
        std::set<std::vector<int>> seen;
        seen.insert(chain.one_line());
        int k = 0;
        std::uint64_t steps = 0;
        auto prev = chain.one_line();
        while (chain.next(k)) {
            ++steps;
            CHECK(k >= 1);
            CHECK(k <= n - 1);
            auto cur = chain.one_line();
            std::swap(prev[static_cast<std::size_t>(k - 1)], prev[static_cast<std::size_t>(k)]);
            CHECK(cur == prev);
            prev = cur;
            CHECK(seen.insert(cur).second);
        }
        CHECK(steps == factorial(n) - 1);
        CHECK_FALSE(chain.next(k));
    }
}

TEST_CASE("oracle values on tiny shapes") {
    const auto one = diagonal_element_oracle(Partition({1}));
    CHECK(one == AlgebraElement<Rational>::identity(1));

    AlgebraElement<Rational> sym(2);
    sym.add_term(Permutation::identity(2), Rational(1));
    sym.add_term(Permutation::transposition(2, 1, 2), Rational(1));
    CHECK(diagonal_element_oracle(Partition({2})) == sym);

    AlgebraElement<Rational> alt(2);
    alt.add_term(Permutation::identity(2), Rational(1));
    alt.add_term(Permutation::transposition(2, 1, 2), Rational(-1));
    CHECK(diagonal_element_oracle(Partition({1, 1})) == alt);
}

TEST_CASE("oracle values on shape (2,1)") {
    const auto F = diagonal_element_oracle(Partition({2, 1}));
    const std::vector<std::pair<std::vector<int>, Rational>> expected = {
        {{1, 2, 3}, Rational(1)},    {{2, 1, 3}, Rational(-1)},
        {{3, 2, 1}, Rational(1, 2)}, {{1, 3, 2}, Rational(1, 2)},
        {{2, 3, 1}, Rational(-1, 2)}, {{3, 1, 2}, Rational(-1, 2)},
    };
    CHECK(F.support_size() == expected.size());
    for (const auto& [line, value] : expected)
        CHECK(F.coeff_at(Permutation::from_one_line(line)) == value);
}

TEST_CASE("oracle coefficients match representing matrices directly") {
    for (const auto& shape : {Partition({2, 2}), Partition({2, 1, 1})}) {
        const auto rep = build_seminormal(shape);
        const auto F = diagonal_element_oracle(shape);
        const std::size_t L = static_cast<std::size_t>(rep.hook_tableau_index);
        for (std::uint64_t r = 0; r < 24; ++r) {
            const auto g = Permutation::from_rank(4, r);
            CHECK(F.coeff_at(g) == rep_matrix(rep, g)[L][L]);
        }
    }
}

TEST_CASE("oracle elements are idempotent up to n!/dim") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto F = diagonal_element_oracle(shape);
            CHECK(F.coeff_at(Permutation::identity(n)) == Rational(1));
            CHECK(F.phi() == F);
            const Rational scale(factorial_integer(n), dimension(shape));
            CHECK(F * F == scale * F);
        }
}

TEST_CASE("degree bounds") {
    CHECK_THROWS_WITH_AS(build_seminormal(Partition({3, 3, 3})),
                         "build_seminormal: degree bound exceeded", std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_seminormal(Partition()),
                         "build_seminormal: empty shape", std::invalid_argument);
    CHECK_THROWS_WITH_AS(diagonal_element_oracle(Partition({4, 4})),
                         "diagonal_element_oracle: degree bound exceeded", std::invalid_argument);
    CHECK_THROWS_WITH_AS(diagonal_element_oracle(Partition({2, 1}), 2),
                         "diagonal_element_oracle: degree bound exceeded", std::invalid_argument);
}
