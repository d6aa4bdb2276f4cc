#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hookfusion {

// Permutation of {1..n} in one-line notation. Composition follows
// (a.compose(b))(x) = a(b(x)).
class Permutation {
public:
    explicit Permutation(int n);
    static Permutation identity(int n) { return Permutation(n); }
    static Permutation transposition(int n, int p, int q);
    static Permutation from_one_line(const std::vector<int>& images);

    int degree() const { return static_cast<int>(img_.size()); }
    // Image of a point, 1-based.
    int apply(int p) const;
    int operator()(int p) const { return apply(p); }

    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    std::vector<int> one_line() const;

    // Disjoint cycle notation: "(1 2)(3 5)"; identity prints as "e".
    std::string cycle_string() const;

    // Lexicographic rank among all degree-n permutations, and its inverse.
    // Degree is limited to 20 so ranks fit in 64 bits.
    std::uint64_t rank() const;
    static Permutation from_rank(int n, std::uint64_t r);

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_; // img_[x] = image of x, both 0-based
};

inline Permutation operator*(const Permutation& a, const Permutation& b) { return a.compose(b); }

// All pairs (p, q) with 1 <= p < q <= n in lexicographic order:
// (1,2), (1,3), ..., (1,n), (2,3), ...
std::vector<std::pair<int, int>> lex_pairs(int n);

// Adjacent-transposition word for the order-reversing permutation: one
// generator index q - p per pair, taken in lex_pairs order.
std::vector<int> longest_element_word(int n);

std::uint64_t factorial(int n);

} // namespace hookfusion
