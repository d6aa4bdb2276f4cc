#include "hookfusion/young.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hookfusion {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: cannot parse part '" + piece + "'");
        }
        while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos]))) ++pos;
        if (pos != piece.size())
            throw std::invalid_argument("Partition: cannot parse part '" + piece + "'");
        parts.push_back(value);
    }
    if (parts.empty()) throw std::invalid_argument("Partition: empty input");
    return Partition(std::move(parts));
}

int Partition::n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::vector<int> Partition::conjugate() const {
    std::vector<int> c;
    if (parts.empty()) return c;
    c.resize(static_cast<std::size_t>(parts[0]), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
    return c;
}

int Partition::durfee() const {
    int d = 0;
    while (d < rows() && parts[static_cast<std::size_t>(d)] >= d + 1) ++d;
    return d;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

HookTableau::HookTableau(Partition shape) : shape_(std::move(shape)) {
    if (shape_.empty()) throw std::invalid_argument("HookTableau: empty shape");
    n_ = shape_.n();
    const auto conj = shape_.conjugate();
    const int d = shape_.durfee();

    rows_.resize(shape_.parts.size());
    for (std::size_t i = 0; i < shape_.parts.size(); ++i)
        rows_[i].assign(static_cast<std::size_t>(shape_.parts[i]), 0);

    box_.assign(static_cast<std::size_t>(n_) + 1, {0, 0});
    hook_.assign(static_cast<std::size_t>(n_) + 1, 0);
    contents_.reserve(static_cast<std::size_t>(n_));

    int next = 1;
    auto place = [&](int row, int col, int hook) {
        rows_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = next;
        box_[static_cast<std::size_t>(next)] = {row, col};
        contents_.push_back(col - row);
        hook_[static_cast<std::size_t>(next)] = hook;
        ++next;
    };
    for (int i = 1; i <= d; ++i) {
        for (int row = i; row <= conj[static_cast<std::size_t>(i - 1)]; ++row) place(row, i, i);
        for (int col = i + 1; col <= shape_.parts[static_cast<std::size_t>(i - 1)]; ++col) place(i, col, i);
    }
}

int HookTableau::entry(int row, int col) const {
    if (row < 1 || row > static_cast<int>(rows_.size()))
        throw std::invalid_argument("HookTableau: row out of range");
    const auto& r = rows_[static_cast<std::size_t>(row - 1)];
    if (col < 1 || col > static_cast<int>(r.size()))
        throw std::invalid_argument("HookTableau: column out of range");
    return r[static_cast<std::size_t>(col - 1)];
}

std::pair<int, int> HookTableau::box_of(int p) const {
    if (p < 1 || p > n_) throw std::invalid_argument("HookTableau: entry out of range");
    return box_[static_cast<std::size_t>(p)];
}

int HookTableau::content(int p) const {
    if (p < 1 || p > n_) throw std::invalid_argument("HookTableau: entry out of range");
    return contents_[static_cast<std::size_t>(p - 1)];
}

int HookTableau::hook_of(int p) const {
    if (p < 1 || p > n_) throw std::invalid_argument("HookTableau: entry out of range");
    return hook_[static_cast<std::size_t>(p)];
}

std::string HookTableau::render() const {
    int width = 1;
    for (int v = n_; v >= 10; v /= 10) ++width;
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << "\n";
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) os << " ";
            std::string s = std::to_string(rows_[i][j]);
            os << std::string(static_cast<std::size_t>(width) - s.size(), ' ') << s;
        }
    }
    return os.str();
}

HookTableau build_hook_tableau(const Partition& shape) { return HookTableau(shape); }

FrobeniusCoordinates durfee_and_frobenius(const Partition& shape) {
    FrobeniusCoordinates f;
    f.d = shape.durfee();
    const auto conj = shape.conjugate();
    for (int i = 1; i <= f.d; ++i) {
        f.arms.push_back(shape.parts[static_cast<std::size_t>(i - 1)] - i);
        f.legs.push_back(conj[static_cast<std::size_t>(i - 1)] - i + 1);
    }
    return f;
}

Partition partition_from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
    if (arms.size() != legs.size())
        throw std::invalid_argument("partition_from_frobenius: size mismatch");
    const int d = static_cast<int>(arms.size());
    if (d == 0) return Partition();
    for (int i = 0; i < d; ++i) {
        if (arms[static_cast<std::size_t>(i)] < 0 || legs[static_cast<std::size_t>(i)] < 1)
            throw std::invalid_argument("partition_from_frobenius: invalid coordinates");
        if (i > 0 && (arms[static_cast<std::size_t>(i)] >= arms[static_cast<std::size_t>(i - 1)] ||
                      legs[static_cast<std::size_t>(i)] >= legs[static_cast<std::size_t>(i - 1)]))
            throw std::invalid_argument("partition_from_frobenius: coordinates must strictly decrease");
    }
    // The first leg reaches the bottom row, so it fixes the row count.
    std::vector<int> parts(static_cast<std::size_t>(legs[0]), 0);
    for (int i = 1; i <= d; ++i) {
        // row i of the hook: columns i .. i + arm
        parts[static_cast<std::size_t>(i - 1)] = i + arms[static_cast<std::size_t>(i - 1)];
        // column i of the hook: rows i .. i + leg - 1 each gain the cell (row, i)
        for (int row = i + 1; row <= i + legs[static_cast<std::size_t>(i - 1)] - 1; ++row)
            parts[static_cast<std::size_t>(row - 1)] = std::max(parts[static_cast<std::size_t>(row - 1)], i);
    }
    return Partition(std::move(parts));
}

std::vector<int> principal_hook_lengths(const Partition& shape) {
    const auto f = durfee_and_frobenius(shape);
    std::vector<int> h;
    for (int i = 0; i < f.d; ++i)
        h.push_back(f.arms[static_cast<std::size_t>(i)] + f.legs[static_cast<std::size_t>(i)]);
    return h;
}

std::pair<Partition, int> strip_hooks(const Partition& shape, int k) {
    const auto f = durfee_and_frobenius(shape);
    if (k < 0 || k > f.d) throw std::invalid_argument("strip_hooks: hook count out of range");
    std::vector<int> arms(f.arms.begin() + k, f.arms.end());
    std::vector<int> legs(f.legs.begin() + k, f.legs.end());
    const auto h = principal_hook_lengths(shape);
    int removed = 0;
    for (int i = 0; i < k; ++i) removed += h[static_cast<std::size_t>(i)];
    return {partition_from_frobenius(arms, legs), removed};
}

Integer dimension(const Partition& shape) {
    if (shape.empty()) return Integer(1);
    const auto conj = shape.conjugate();
    Integer product(1);
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = 1; j <= shape.parts[static_cast<std::size_t>(i - 1)]; ++j) {
            int hook = shape.parts[static_cast<std::size_t>(i - 1)] - j +
                       conj[static_cast<std::size_t>(j - 1)] - i + 1;
            product *= hook;
        }
    return factorial_integer(shape.n()) / product;
}

std::vector<std::vector<std::vector<int>>> enumerate_standard_tableaux(const Partition& shape,
                                                                       int bound) {
    if (shape.n() > bound)
        throw std::invalid_argument("enumerate_standard_tableaux: degree bound exceeded");
    std::vector<std::vector<std::vector<int>>> out;
    if (shape.empty()) {
        out.emplace_back();
        return out;
    }
    const int n = shape.n();
    std::vector<int> fill(static_cast<std::size_t>(shape.rows()), 0);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i)
        rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.parts[static_cast<std::size_t>(i)]), 0);

    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(rows);
            return;
        }
        for (int i = 0; i < shape.rows(); ++i) {
            auto& f = fill[static_cast<std::size_t>(i)];
            if (f >= shape.parts[static_cast<std::size_t>(i)]) continue;
            if (i > 0 && fill[static_cast<std::size_t>(i - 1)] <= f) continue;
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)] = next;
            ++f;
            self(self, next + 1);
            --f;
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::pair<int, int>> singular_pairs(const HookTableau& T) {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= T.n(); ++p)
        for (int q = p + 1; q <= T.n(); ++q)
            if (T.content(p) == T.content(q)) out.emplace_back(p, q);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int next = std::min(cap, remaining); next >= 1; --next) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace hookfusion
