#pragma once

#include <vector>

#include "catlab/ideal.hpp"
#include "catlab/matrix.hpp"

namespace catlab {

/// Row and column indices of a t x t minor, strictly increasing.
struct MinorSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Fraction-free elimination, pivoting on the entry with fewest terms.
template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& m);

// Cofactor expansion along rows with minors memoized by column set.
template <class F>
Polynomial<F> determinant_laplace(const PolyMatrix<F>& m);

// (-1)^(i+1) det(M without row i), rows counted from 1; M is m x (m-1).
template <class F>
std::vector<Polynomial<F>> signed_maximal_minors(const PolyMatrix<F>& m);

std::vector<MinorSelection> minor_selections(std::size_t rows, std::size_t cols, std::size_t t);

// All t x t minors in lexicographic selection order, zeros included.
template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, std::size_t t);

template <class F>
Ideal<F> minors_ideal(const PolyMatrix<F>& m, std::size_t t, Budget budget = {});

// Theta(i,j) = d forms_i / d x_j.
template <class F>
PolyMatrix<F> jacobian_matrix(const std::vector<Polynomial<F>>& forms);

// Rank over the fraction field of the polynomial ring.
template <class F>
std::size_t rank(const PolyMatrix<F>& m);

}  // namespace catlab
