#include "catlab/minors.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

namespace catlab {

namespace {

template <class F>
using Grid = std::vector<std::vector<Polynomial<F>>>;

template <class F>
Grid<F> to_grid(const PolyMatrix<F>& m) {
  Grid<F> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i].push_back(m(i, j));
  }
  return a;
}

// Bareiss elimination in place. Returns the number of pivots; `sign` tracks
// the parity of the row and column swaps.
template <class F>
std::size_t bareiss(Grid<F>& a, const RingPtr<F>& ring, int& sign) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Polynomial<F> prev = Polynomial<F>::integer(ring, 1);
  sign = 1;
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (a[i][j].is_zero()) continue;
        if (pi == rows || a[i][j].size() < a[pi][pj].size()) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    if (pi != k) {
      std::swap(a[pi], a[k]);
      sign = -sign;
    }
    if (pj != k) {
      for (auto& row : a) std::swap(row[pj], row[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        Polynomial<F> num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("fraction-free elimination hit an inexact division");
        a[i][j] = std::move(*q);
      }
      a[i][k] = Polynomial<F>(ring);
    }
    prev = a[k][k];
  }
  return k;
}

template <class F>
void require_square(const PolyMatrix<F>& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  }
}

}  // namespace

template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& m) {
  require_square(m);
  if (m.rows() == 0) return Polynomial<F>::integer(m.ring(), 1);
  auto a = to_grid(m);
  int sign = 1;
  std::size_t r = bareiss(a, m.ring(), sign);
  if (r < m.rows()) return Polynomial<F>(m.ring());
  auto& d = a[r - 1][r - 1];
  return sign > 0 ? d : -d;
}

template <class F>
Polynomial<F> determinant_laplace(const PolyMatrix<F>& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n > 62) throw std::invalid_argument("Laplace expansion limited to 62 columns");
  std::map<std::uint64_t, Polynomial<F>> memo;
  // det of rows [n - popcount(cols), n) restricted to column set `cols`.
  auto rec = [&](auto&& self, std::uint64_t cols) -> Polynomial<F> {
    if (cols == 0) return Polynomial<F>::integer(m.ring(), 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(cols));
    Polynomial<F> total(m.ring());
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols >> j & 1)) continue;
      const auto& entry = m(row, j);
      if (!entry.is_zero()) {
        Polynomial<F> term = entry * self(self, cols & ~(std::uint64_t{1} << j));
        if (position % 2) total -= term;
        else total += term;
      }
      ++position;
    }
    memo.emplace(cols, total);
    return total;
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(rec, all);
}

template <class F>
std::vector<Polynomial<F>> signed_maximal_minors(const PolyMatrix<F>& m) {
  if (m.rows() < 2 || m.cols() + 1 != m.rows()) {
    throw std::invalid_argument("signed maximal minors need an m x (m-1) matrix, got " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto d = determinant(m.without_row(i));
    out.push_back(i % 2 ? -d : d);
  }
  return out;
}

std::vector<MinorSelection> minor_selections(std::size_t rows, std::size_t cols, std::size_t t) {
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    for (;;) {
      out.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
      if (i == 0) return out;
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
  };
  std::vector<MinorSelection> out;
  for (const auto& r : subsets(rows, t)) {
    for (const auto& c : subsets(cols, t)) out.push_back({r, c});
  }
  return out;
}

template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, std::size_t t) {
  if (t < 1 || t > std::min(m.rows(), m.cols())) {
    throw std::invalid_argument("minor size " + std::to_string(t) + " outside 1.." +
                                std::to_string(std::min(m.rows(), m.cols())));
  }
  std::vector<Polynomial<F>> out;
  for (const auto& s : minor_selections(m.rows(), m.cols(), t)) {
    out.push_back(determinant(m.submatrix(s.rows, s.cols)));
  }
  return out;
}

template <class F>
Ideal<F> minors_ideal(const PolyMatrix<F>& m, std::size_t t, Budget budget) {
  return Ideal<F>(m.ring(), minors(m, t), budget);
}

template <class F>
PolyMatrix<F> jacobian_matrix(const std::vector<Polynomial<F>>& forms) {
  if (forms.empty()) throw std::invalid_argument("jacobian of an empty list");
  const auto& ring = forms.front().ring();
  PolyMatrix<F> theta(ring, forms.size(), ring->size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = 0; j < ring->size(); ++j) theta(i, j) = forms[i].derivative(j);
  }
  return theta;
}

template <class F>
std::size_t rank(const PolyMatrix<F>& m) {
  auto a = to_grid(m);
  int sign = 1;
  return bareiss(a, m.ring(), sign);
}

#define CATLAB_INSTANTIATE_MINORS(F)                                                 \
  template Polynomial<F> determinant(const PolyMatrix<F>&);                          \
  template Polynomial<F> determinant_laplace(const PolyMatrix<F>&);                  \
  template std::vector<Polynomial<F>> signed_maximal_minors(const PolyMatrix<F>&);   \
  template std::vector<Polynomial<F>> minors(const PolyMatrix<F>&, std::size_t);     \
  template Ideal<F> minors_ideal(const PolyMatrix<F>&, std::size_t, Budget);         \
  template PolyMatrix<F> jacobian_matrix(const std::vector<Polynomial<F>>&);         \
  template std::size_t rank(const PolyMatrix<F>&);

CATLAB_INSTANTIATE_MINORS(PrimeField)
CATLAB_INSTANTIATE_MINORS(RationalField)

}  // namespace catlab
