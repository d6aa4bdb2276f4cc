#pragma once

#include "hookfusion/rational.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hookfusion {

// Integer partition with weakly decreasing positive parts. The empty
// partition (of 0) is allowed; it arises from stripping every hook.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    // Parse "3,3,2".
    static Partition parse(const std::string& text);

    int n() const;
    int rows() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    std::vector<int> conjugate() const;
    // Side length of the Durfee square (number of principal hooks).
    int durfee() const;
    bool is_hook() const { return durfee() == 1; }

    std::string str() const;

    auto operator<=>(const Partition&) const = default;
};

// The canonical standard tableau built hook by hook: each principal hook
// contributes its column entries top to bottom, then its row entries left
// to right. Contents c_p = column - row are kept per entry.
class HookTableau {
public:
    explicit HookTableau(Partition shape);

    const Partition& shape() const { return shape_; }
    int n() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    // 1-based box lookup; (row, col) must lie inside the diagram.
    int entry(int row, int col) const;
    // 1-based (row, col) of an entry p in 1..n.
    std::pair<int, int> box_of(int p) const;
    int content(int p) const;
    // Index of the principal hook an entry belongs to, 1-based.
    int hook_of(int p) const;
    const std::vector<int>& contents() const { return contents_; }

    // Aligned grid of entries.
    std::string render() const;

private:
    Partition shape_;
    int n_ = 0;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> box_;
    std::vector<int> contents_;
    std::vector<int> hook_;
};

HookTableau build_hook_tableau(const Partition& shape);

struct FrobeniusCoordinates {
    int d = 0;
    std::vector<int> arms; // alpha_i = lambda_i - i, strictly decreasing, >= 0
    std::vector<int> legs; // beta_i = lambda'_i - i + 1, strictly decreasing, >= 1
};

FrobeniusCoordinates durfee_and_frobenius(const Partition& shape);
Partition partition_from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs);

// h_i = alpha_i + beta_i; the hook lengths sum to n.
std::vector<int> principal_hook_lengths(const Partition& shape);

// Remove the first k principal hooks; returns the remaining partition and
// the number of cells removed.
std::pair<Partition, int> strip_hooks(const Partition& shape, int k);

// Irreducible dimension by the hook length formula.
Integer dimension(const Partition& shape);

// All standard tableaux as rows-of-entries, in a fixed deterministic order
// (lexicographic by the sequence of row indices receiving 1..n).
std::vector<std::vector<std::vector<int>>> enumerate_standard_tableaux(const Partition& shape,
                                                                       int bound = 10);

// Pairs p < q of equal content, lexicographically ordered.
std::vector<std::pair<int, int>> singular_pairs(const HookTableau& T);

// All partitions of n, largest part first, in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

} // namespace hookfusion
