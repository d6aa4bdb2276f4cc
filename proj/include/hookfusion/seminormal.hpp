#pragma once

#include "hookfusion/algebra_element.hpp"
#include "hookfusion/young.hpp"

#include <vector>

namespace hookfusion {

using Matrix = std::vector<std::vector<Rational>>;

Matrix matrix_identity(int dim);
Matrix matrix_multiply(const Matrix& a, const Matrix& b);

// Young's seminormal form of the irreducible representation labelled by a
// partition. Basis vectors are indexed by standard tableaux; an adjacent
// transposition s_k acts on v_T with diagonal coefficient 1/d, where
// d = content(k+1) - content(k) in T, and, when swapping k and k+1 yields a
// standard tableau T', an off-diagonal coefficient into v_{T'} of 1 when
// d > 0 and 1 - 1/d^2 when d < 0. This convention makes each generator an
// involution and leaves diagonal matrix entries equal to those of the
// orthogonal form, so everything stays rational.
struct SeminormalRep {
    Partition shape;
    std::vector<std::vector<std::vector<int>>> basis;
    std::vector<Matrix> generator; // generator[k-1] represents s_k
    int hook_tableau_index = -1;   // position of the canonical hook filling

    int dim() const { return static_cast<int>(basis.size()); }
};

SeminormalRep build_seminormal(const Partition& shape, int bound = 8);

// Representing matrix of an arbitrary permutation, via any reduced word in
// adjacent transpositions (the result is word-independent).
Matrix rep_matrix(const SeminormalRep& rep, const Permutation& g);

// Sort the one-line form by adjacent swaps; the recorded positions w satisfy
// g = s_{w_m} ∘ ... ∘ s_{w_1}, and the word has minimal length.
std::vector<int> adjacent_word(const Permutation& g);

// Brute-force diagonal matrix element: sum over all of S_n of
// (matrix of g)[L][L] · g, where L indexes the canonical hook tableau.
AlgebraElement<Rational> diagonal_element_oracle(const Partition& shape, int bound = 7);

// Plain-changes enumeration of S_n: each call to next() reports one adjacent
// swap position k (swap of positions k, k+1 in one-line notation, i.e. right
// multiplication by s_k), visiting every permutation exactly once.
class PlainChanges {
public:
    explicit PlainChanges(int n);
    const std::vector<int>& one_line() const { return val_; }
    bool next(int& swap_position);

private:
    int n_;
    std::vector<int> val_;
    std::vector<int> dir_;
    std::vector<int> pos_;
};

} // namespace hookfusion
