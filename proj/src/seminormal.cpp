#include "hookfusion/seminormal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace hookfusion {

Matrix matrix_identity(int dim) {
    Matrix m(static_cast<std::size_t>(dim),
             std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1);
    return m;
}

Matrix matrix_multiply(const Matrix& a, const Matrix& b) {
    const std::size_t dim = a.size();
    Matrix r(dim, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            const Rational& aik = a[i][k];
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += aik * b[k][j];
            }
        }
    return r;
}

namespace {

// (row, col) of each entry of a standard tableau, 1-based, indexed by entry.
std::vector<std::pair<int, int>> entry_positions(const std::vector<std::vector<int>>& rows, int n) {
    std::vector<std::pair<int, int>> pos(static_cast<std::size_t>(n) + 1, {0, 0});
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            pos[static_cast<std::size_t>(rows[i][j])] = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    return pos;
}

} // namespace

SeminormalRep build_seminormal(const Partition& shape, int bound) {
    if (shape.empty()) throw std::invalid_argument("build_seminormal: empty shape");
    if (shape.n() > bound) throw std::invalid_argument("build_seminormal: degree bound exceeded");
    const int n = shape.n();

    SeminormalRep rep;
    rep.shape = shape;
    rep.basis = enumerate_standard_tableaux(shape, bound);
    const int dim = rep.dim();

    std::map<std::vector<std::vector<int>>, int> index;
    for (int i = 0; i < dim; ++i) index.emplace(rep.basis[static_cast<std::size_t>(i)], i);

    rep.hook_tableau_index = index.at(HookTableau(shape).rows());

    for (int k = 1; k < n; ++k) {
        Matrix m(static_cast<std::size_t>(dim),
                 std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
        for (int i = 0; i < dim; ++i) {
            const auto& rows = rep.basis[static_cast<std::size_t>(i)];
            const auto pos = entry_positions(rows, n);
            const auto [r1, c1] = pos[static_cast<std::size_t>(k)];
            const auto [r2, c2] = pos[static_cast<std::size_t>(k + 1)];
            const int d = (c2 - r2) - (c1 - r1);
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Rational(1, d);
            if (r1 == r2 || c1 == c2) continue; // swapping k, k+1 leaves the standard set
            auto swapped = rows;
            swapped[static_cast<std::size_t>(r1 - 1)][static_cast<std::size_t>(c1 - 1)] = k + 1;
            swapped[static_cast<std::size_t>(r2 - 1)][static_cast<std::size_t>(c2 - 1)] = k;
            const int j = index.at(swapped);
            const Rational gamma =
                d > 0 ? Rational(1) : Rational(1) - Rational(1, static_cast<long>(d) * d);
            m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = gamma;
        }
        rep.generator.push_back(std::move(m));
    }
    return rep;
}

std::vector<int> adjacent_word(const Permutation& g) {
    auto a = g.one_line();
    std::vector<int> w;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] > a[i + 1]) {
                std::swap(a[i], a[i + 1]);
                w.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
    }
    return w;
}

Matrix rep_matrix(const SeminormalRep& rep, const Permutation& g) {
    if (g.degree() != rep.shape.n()) throw std::invalid_argument("rep_matrix: degree mismatch");
    Matrix m = matrix_identity(rep.dim());
    const auto w = adjacent_word(g);
    // g = s_{w_m} ∘ ... ∘ s_{w_1}, so the matrices multiply in that order.
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        m = matrix_multiply(m, rep.generator[static_cast<std::size_t>(*it - 1)]);
    return m;
}

PlainChanges::PlainChanges(int n)
    : n_(n), val_(static_cast<std::size_t>(n)), dir_(static_cast<std::size_t>(n), -1),
      pos_(static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("PlainChanges: degree must be positive");
    for (int i = 0; i < n; ++i) {
        val_[static_cast<std::size_t>(i)] = i + 1;
        pos_[static_cast<std::size_t>(i)] = i;
    }
}

bool PlainChanges::next(int& swap_position) {
    int value = -1, from = -1;
    for (int v = n_; v >= 1; --v) {
        int i = pos_[static_cast<std::size_t>(v - 1)];
        int j = i + dir_[static_cast<std::size_t>(v - 1)];
        if (j < 0 || j >= n_) continue;
        if (val_[static_cast<std::size_t>(j)] < v) {
            value = v;
            from = i;
            break;
        }
    }
    if (value < 0) return false;
    const int to = from + dir_[static_cast<std::size_t>(value - 1)];
    std::swap(val_[static_cast<std::size_t>(from)], val_[static_cast<std::size_t>(to)]);
    pos_[static_cast<std::size_t>(value - 1)] = to;
    pos_[static_cast<std::size_t>(val_[static_cast<std::size_t>(from)] - 1)] = from;
    swap_position = std::min(from, to) + 1;
    for (int v = value + 1; v <= n_; ++v) dir_[static_cast<std::size_t>(v - 1)] = -dir_[static_cast<std::size_t>(v - 1)];
    return true;
}

AlgebraElement<Rational> diagonal_element_oracle(const Partition& shape, int bound) {
    if (shape.n() > bound)
        throw std::invalid_argument("diagonal_element_oracle: degree bound exceeded");
    const int n = shape.n();
    const SeminormalRep rep = build_seminormal(shape, bound);
    const int dim = rep.dim();
    const std::size_t L = static_cast<std::size_t>(rep.hook_tableau_index);

    // Column-sparse view of each generator: acting by s_k on the right mixes
    // at most two columns, so each step costs O(dim^2).
    struct Column {
        Rational diag;
        int partner;
        Rational off;
    };
    std::vector<std::vector<Column>> cols(rep.generator.size());
    for (std::size_t k = 0; k < rep.generator.size(); ++k) {
        cols[k].resize(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            Column c{rep.generator[k][static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], -1,
                     Rational(0)};
            for (int j = 0; j < dim; ++j) {
                if (j == i) continue;
                const Rational& v = rep.generator[k][static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                if (!v.is_zero()) {
                    c.partner = j;
                    c.off = v;
                }
            }
            cols[k][static_cast<std::size_t>(i)] = std::move(c);
        }
    }

    AlgebraElement<Rational> out(n);
    Matrix m = matrix_identity(dim);
    PlainChanges chain(n);
    out.add_term(Permutation::identity(n), m[L][L]);
    int k = 0;
    Matrix fresh(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(dim)));
    while (chain.next(k)) {
        const auto& col = cols[static_cast<std::size_t>(k - 1)];
        for (int r = 0; r < dim; ++r) {
            const auto& mr = m[static_cast<std::size_t>(r)];
            auto& fr = fresh[static_cast<std::size_t>(r)];
            for (int i = 0; i < dim; ++i) {
                const Column& ci = col[static_cast<std::size_t>(i)];
                Rational v = mr[static_cast<std::size_t>(i)] * ci.diag;
                if (ci.partner >= 0) v += mr[static_cast<std::size_t>(ci.partner)] * ci.off;
                fr[static_cast<std::size_t>(i)] = std::move(v);
            }
        }
        std::swap(m, fresh);
        out.add_term(Permutation::from_one_line(chain.one_line()), m[L][L]);
    }
    return out;
}

} // namespace hookfusion
