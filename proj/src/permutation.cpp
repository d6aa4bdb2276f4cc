#include "hookfusion/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookfusion {

Permutation::Permutation(int n) {
    if (n < 0) throw std::invalid_argument("Permutation: negative degree");
    img_.resize(static_cast<std::size_t>(n));
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::transposition(int n, int p, int q) {
    if (!(1 <= p && p < q && q <= n))
        throw std::invalid_argument("Permutation: transposition requires 1 <= p < q <= n");
    Permutation t(n);
    std::swap(t.img_[static_cast<std::size_t>(p - 1)], t.img_[static_cast<std::size_t>(q - 1)]);
    return t;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    Permutation g(n);
    for (int x = 0; x < n; ++x) {
        int y = images[static_cast<std::size_t>(x)];
        if (y < 1 || y > n || seen[static_cast<std::size_t>(y - 1)])
            throw std::invalid_argument("Permutation: not a bijection on 1..n");
        seen[static_cast<std::size_t>(y - 1)] = true;
        g.img_[static_cast<std::size_t>(x)] = y - 1;
    }
    return g;
}

int Permutation::apply(int p) const {
    if (p < 1 || p > degree()) throw std::invalid_argument("Permutation: point out of range");
    return img_[static_cast<std::size_t>(p - 1)] + 1;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("Permutation: degree mismatch");
    Permutation r(degree());
    for (std::size_t x = 0; x < img_.size(); ++x)
        r.img_[x] = img_[static_cast<std::size_t>(rhs.img_[x])];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(degree());
    for (std::size_t x = 0; x < img_.size(); ++x)
        r.img_[static_cast<std::size_t>(img_[x])] = static_cast<int>(x);
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x)) return false;
    return true;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> r(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r[x] = img_[x] + 1;
    return r;
}

std::string Permutation::cycle_string() const {
    std::vector<bool> seen(img_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (seen[start] || img_[start] == static_cast<int>(start)) continue;
        any = true;
        os << "(";
        std::size_t x = start;
        bool first = true;
        do {
            if (!first) os << " ";
            first = false;
            os << (x + 1);
            seen[x] = true;
            x = static_cast<std::size_t>(img_[x]);
        } while (x != start);
        os << ")";
    }
    return any ? os.str() : "e";
}

std::uint64_t Permutation::rank() const {
    const int n = degree();
    if (n > 20) throw std::invalid_argument("Permutation: rank limited to degree 20");
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(i)]) ++smaller;
        r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
    }
    return r;
}

Permutation Permutation::from_rank(int n, std::uint64_t r) {
    if (n > 20) throw std::invalid_argument("Permutation: rank limited to degree 20");
    if (r >= factorial(n)) throw std::invalid_argument("Permutation: rank out of range");
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    Permutation g(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = factorial(n - 1 - i);
        std::size_t idx = static_cast<std::size_t>(r / f);
        r %= f;
        g.img_[static_cast<std::size_t>(i)] = pool[idx];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return g;
}

std::vector<std::pair<int, int>> lex_pairs(int n) {
    std::vector<std::pair<int, int>> r;
    r.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) / 2);
    for (int p = 1; p < n; ++p)
        for (int q = p + 1; q <= n; ++q) r.emplace_back(p, q);
    return r;
}

std::vector<int> longest_element_word(int n) {
    std::vector<int> w;
    for (const auto& [p, q] : lex_pairs(n)) w.push_back(q - p);
    return w;
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: argument out of range");
    std::uint64_t r = 1;
    for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
    return r;
}

} // namespace hookfusion
