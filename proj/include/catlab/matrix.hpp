#pragma once

#include <string>
#include <vector>

#include "catlab/polynomial.hpp"

namespace catlab {

/// Dense rows x cols matrix of polynomials over one ring; 0-based indices.
template <class F>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr<F> ring, std::vector<std::vector<Polynomial<F>>> rows);

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial<F>& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Polynomial<F>& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Polynomial<F>& at(std::size_t i, std::size_t j) const;

  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;
  PolyMatrix without_row(std::size_t i) const;
  PolyMatrix without_col(std::size_t j) const;
  PolyMatrix transpose() const;

  bool is_square() const { return rows_ == cols_; }
  // Every entry is zero or a homogeneous form of degree 1.
  bool has_linear_entries() const;

  std::vector<std::vector<std::string>> to_strings() const;
  // Column-aligned text, one row per line.
  std::string to_string() const;

  bool operator==(const PolyMatrix& other) const;

 private:
  RingPtr<F> ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial<F>> entries_;
};

template <class F>
PolyMatrix<F> operator*(const PolyMatrix<F>& a, const PolyMatrix<F>& b);

}  // namespace catlab
