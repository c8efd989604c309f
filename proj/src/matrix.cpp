#include "catlab/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catlab {

template <class F>
PolyMatrix<F>::PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<F>(ring_)) {}

template <class F>
PolyMatrix<F>::PolyMatrix(RingPtr<F> ring, std::vector<std::vector<Polynomial<F>>> rows)
    : ring_(std::move(ring)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  entries_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (auto& p : row) {
      if (!same_ring(p.ring(), ring_)) throw std::invalid_argument("matrix entry from another ring");
      entries_.push_back(std::move(p));
    }
  }
}

template <class F>
const Polynomial<F>& PolyMatrix<F>::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(i, j);
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::submatrix(const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols) const {
  PolyMatrix out(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = at(rows[i], cols[j]);
  }
  return out;
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::without_row(std::size_t r) const {
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != r) rows.push_back(i);
  }
  for (std::size_t j = 0; j < cols_; ++j) cols.push_back(j);
  return submatrix(rows, cols);
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::without_col(std::size_t c) const {
  return transpose().without_row(c).transpose();
}

template <class F>
PolyMatrix<F> PolyMatrix<F>::transpose() const {
  PolyMatrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

template <class F>
bool PolyMatrix<F>::has_linear_entries() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial<F>& p) {
    return p.is_zero() || (p.degree() == 1 && p.is_homogeneous());
  });
}

template <class F>
std::vector<std::vector<std::string>> PolyMatrix<F>::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).to_string());
  }
  return out;
}

template <class F>
std::string PolyMatrix<F>::to_string() const {
  auto cells = to_strings();
  std::vector<std::size_t> width(cols_, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < cols_; ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << "[ ";
    for (std::size_t j = 0; j < cols_; ++j) {
      out << row[j] << std::string(width[j] - row[j].size(), ' ');
      out << (j + 1 < cols_ ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

template <class F>
bool PolyMatrix<F>::operator==(const PolyMatrix& other) const {
  return same_ring(ring_, other.ring_) && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

template <class F>
PolyMatrix<F> operator*(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix<F> out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial<F> s(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

template class PolyMatrix<PrimeField>;
template class PolyMatrix<RationalField>;
template PolyMatrix<PrimeField> operator*(const PolyMatrix<PrimeField>&,
                                          const PolyMatrix<PrimeField>&);
template PolyMatrix<RationalField> operator*(const PolyMatrix<RationalField>&,
                                             const PolyMatrix<RationalField>&);

}  // namespace catlab
