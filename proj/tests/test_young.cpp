#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hookfusion/young.hpp"

#include <set>

using namespace hookfusion;

TEST_CASE("partition validation and parsing") {
    CHECK(Partition({3, 3, 2}).n() == 8);
    CHECK(Partition({3, 3, 2}).rows() == 3);
    CHECK(Partition().empty());
    CHECK(Partition().n() == 0);
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);

    CHECK(Partition::parse("3,3,2") == Partition({3, 3, 2}));
    CHECK(Partition::parse("5") == Partition({5}));
    CHECK(Partition::parse(" 2 , 1 ") == Partition({2, 1}));
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,2"), std::invalid_argument);
    CHECK(Partition({3, 3, 2}).str() == "3,3,2");
}

TEST_CASE("conjugate, Durfee square, hook shapes") {
    CHECK(Partition({3, 3, 2}).conjugate() == std::vector<int>{3, 3, 2});
    CHECK(Partition({4, 2, 1}).conjugate() == std::vector<int>{3, 2, 1, 1});
    CHECK(Partition({1, 1, 1}).conjugate() == std::vector<int>{3});

    CHECK(Partition({3, 3, 2}).durfee() == 2);
    CHECK(Partition({1}).durfee() == 1);
    CHECK(Partition({5}).durfee() == 1);
    CHECK(Partition({2, 2}).durfee() == 2);
    CHECK(Partition({3, 3, 3}).durfee() == 3);

    CHECK(Partition({4, 1, 1}).is_hook());
    CHECK(Partition({1}).is_hook());
    CHECK_FALSE(Partition({2, 2}).is_hook());
}

TEST_CASE("hook tableau of (3,3,2)") {
    const HookTableau T(Partition({3, 3, 2}));
    CHECK(T.rows() == std::vector<std::vector<int>>{{1, 4, 5}, {2, 6, 8}, {3, 7}});
    CHECK(T.contents() == std::vector<int>{0, -1, -2, 1, 2, 0, -1, 1});
    CHECK(T.n() == 8);

    CHECK(T.entry(1, 2) == 4);
    CHECK(T.box_of(8) == std::pair<int, int>{2, 3});
    CHECK(T.content(5) == 2);
    for (int p = 1; p <= 8; ++p) {
        const auto [r, c] = T.box_of(p);
        CHECK(T.entry(r, c) == p);
        CHECK(T.content(p) == c - r);
    }
    for (int p = 1; p <= 5; ++p) CHECK(T.hook_of(p) == 1);
    for (int p = 6; p <= 8; ++p) CHECK(T.hook_of(p) == 2);

    CHECK(T.render() == "1 4 5\n2 6 8\n3 7");
    CHECK_THROWS_AS(T.entry(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(T.box_of(9), std::invalid_argument);
    CHECK_THROWS_AS(HookTableau{Partition{}}, std::invalid_argument);
}

TEST_CASE("hook tableaux of small shapes") {
    CHECK(HookTableau(Partition({1})).rows() == std::vector<std::vector<int>>{{1}});
    const HookTableau T21(Partition({2, 1}));
    CHECK(T21.rows() == std::vector<std::vector<int>>{{1, 3}, {2}});
    CHECK(T21.contents() == std::vector<int>{0, -1, 1});
    const HookTableau T22(Partition({2, 2}));
    CHECK(T22.rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
    CHECK(T22.contents() == std::vector<int>{0, -1, 1, 0});
}

TEST_CASE("hook tableaux are standard with entries contiguous per hook") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& shape : partitions_of(n)) {
            const HookTableau T(shape);
            const auto& rows = T.rows();
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < rows[i].size(); ++j) {
                    if (j + 1 < rows[i].size()) CHECK(rows[i][j] < rows[i][j + 1]);
                    if (i + 1 < rows.size() && j < rows[i + 1].size())
                        CHECK(rows[i][j] < rows[i + 1][j]);
                }
            // Entries of hook i form one contiguous interval, and contents
            // within one hook are pairwise distinct.
            const auto lengths = principal_hook_lengths(shape);
            int start = 1;
            for (std::size_t h = 0; h < lengths.size(); ++h) {
                std::set<int> seen;
                for (int p = start; p < start + lengths[h]; ++p) {
                    CHECK(T.hook_of(p) == static_cast<int>(h) + 1);
                    CHECK(seen.insert(T.content(p)).second);
                }
                start += lengths[h];
            }
            CHECK(start == n + 1);
        }
}

TEST_CASE("Frobenius coordinates") {
    const auto f = durfee_and_frobenius(Partition({3, 3, 2}));
    CHECK(f.d == 2);
    CHECK(f.arms == std::vector<int>{2, 1});
    CHECK(f.legs == std::vector<int>{3, 2});

    const auto single = durfee_and_frobenius(Partition({1}));
    CHECK(single.arms == std::vector<int>{0});
    CHECK(single.legs == std::vector<int>{1});

    const auto row = durfee_and_frobenius(Partition({4}));
    CHECK(row.arms == std::vector<int>{3});
    CHECK(row.legs == std::vector<int>{1});

    CHECK(partition_from_frobenius({2, 1}, {3, 2}) == Partition({3, 3, 2}));
    CHECK(partition_from_frobenius({1}, {2}) == Partition({2, 1}));
    CHECK(partition_from_frobenius({1}, {1}) == Partition({2}));
    CHECK_THROWS_AS(partition_from_frobenius({1, 1}, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_frobenius({1}, {2, 1}), std::invalid_argument);

    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto fr = durfee_and_frobenius(shape);
            CHECK(partition_from_frobenius(fr.arms, fr.legs) == shape);
        }
}

TEST_CASE("principal hook lengths") {
    CHECK(principal_hook_lengths(Partition({3, 3, 2})) == std::vector<int>{5, 3});
    CHECK(principal_hook_lengths(Partition({1})) == std::vector<int>{1});
    CHECK(principal_hook_lengths(Partition({2, 2})) == std::vector<int>{3, 1});
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n)) {
            int sum = 0;
            for (int h : principal_hook_lengths(shape)) sum += h;
            CHECK(sum == n);
        }
}

TEST_CASE("strip_hooks") {
    CHECK(strip_hooks(Partition({3, 3, 2}), 1) == std::pair{Partition({2, 1}), 5});
    CHECK(strip_hooks(Partition({3, 3, 2}), 0) == std::pair{Partition({3, 3, 2}), 0});
    CHECK(strip_hooks(Partition({3, 3, 2}), 2) == std::pair{Partition(), 8});
    CHECK(strip_hooks(Partition({3, 3}), 1) == std::pair{Partition({2}), 4});
    CHECK(strip_hooks(Partition({3, 2}), 1) == std::pair{Partition({1}), 4});
    CHECK_THROWS_AS(strip_hooks(Partition({3, 3, 2}), 3), std::invalid_argument);
    CHECK_THROWS_AS(strip_hooks(Partition({3, 3, 2}), -1), std::invalid_argument);
}

TEST_CASE("dimension by the hook length formula") {
    CHECK(dimension(Partition({1, 1})) == 1);
    CHECK(dimension(Partition({2, 1})) == 2);
    CHECK(dimension(Partition({2, 2})) == 2);
    CHECK(dimension(Partition({3, 3, 2})) == 42);
    CHECK(dimension(Partition({4})) == 1);
    CHECK(dimension(Partition()) == 1);
}

TEST_CASE("standard tableau enumeration matches the dimension") {
    CHECK(enumerate_standard_tableaux(Partition({2, 1})).size() == 2);
    CHECK(enumerate_standard_tableaux(Partition({4})).size() == 1);
    CHECK(enumerate_standard_tableaux(Partition({2, 2})).size() == 2);
    CHECK_THROWS_WITH_AS(enumerate_standard_tableaux(Partition({11})),
                         "enumerate_standard_tableaux: degree bound exceeded",
                         std::invalid_argument);

    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n)) {
            const auto all = enumerate_standard_tableaux(shape);
            CHECK(Integer(all.size()) == dimension(shape));
            // The canonical hook filling is among them.
            const HookTableau T(shape);
            bool found = false;
            for (const auto& tab : all) found = found || tab == T.rows();
            CHECK(found);
        }
}

TEST_CASE("singular pairs") {
    const HookTableau T(Partition({3, 3, 2}));
    CHECK(singular_pairs(T) ==
          std::vector<std::pair<int, int>>{{1, 6}, {2, 7}, {4, 8}});
    CHECK(singular_pairs(HookTableau(Partition({3, 1}))).empty());
    CHECK(singular_pairs(HookTableau(Partition({2, 2}))) ==
          std::vector<std::pair<int, int>>{{1, 4}});

    // Never within one principal hook.
    for (int n = 1; n <= 8; ++n)
        for (const auto& shape : partitions_of(n)) {
            const HookTableau tab(shape);
            for (const auto& [p, q] : singular_pairs(tab)) {
                CHECK(tab.content(p) == tab.content(q));
                CHECK(tab.hook_of(p) != tab.hook_of(q));
            }
        }
}

TEST_CASE("partitions_of") {
    const auto p4 = partitions_of(4);
    CHECK(p4 == std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                       Partition({2, 1, 1}), Partition({1, 1, 1, 1})});
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});
}
