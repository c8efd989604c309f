#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "catlab/families.hpp"
#include "catlab/minors.hpp"
#include "catlab/parse.hpp"

namespace testing {

using namespace catlab;
using GF = PrimeField;
using QQ = RationalField;

template <class F = GF>
RingPtr<F> ring_x(int n, F field = F{}) {
  return make_ring(field, indexed_names("X", static_cast<std::size_t>(n)));
}

template <class F>
Polynomial<F> P(const RingPtr<F>& ring, std::string_view text) {
  return parse_polynomial<F>(text, ring);
}

template <class F>
std::vector<Polynomial<F>> Ps(const RingPtr<F>& ring, std::initializer_list<std::string_view> texts) {
  std::vector<Polynomial<F>> out;
  for (auto t : texts) out.push_back(P(ring, t));
  return out;
}

template <class F>
PolyMatrix<F> matrix(const RingPtr<F>& ring,
                     std::initializer_list<std::initializer_list<std::string_view>> rows) {
  std::vector<std::vector<Polynomial<F>>> grid;
  for (auto row : rows) {
    grid.emplace_back();
    for (auto e : row) grid.back().push_back(P(ring, e));
  }
  return PolyMatrix<F>(ring, std::move(grid));
}

// Dense random polynomial with at most `terms` terms of degree <= max_degree.
template <class F>
Polynomial<F> random_polynomial(const RingPtr<F>& ring, std::mt19937_64& rng, int terms,
                                int max_degree) {
  std::vector<typename Polynomial<F>::Term> out;
  std::uniform_int_distribution<int> var(0, static_cast<int>(ring->size()) - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int k = 0; k < terms; ++k) {
    std::vector<int> e(ring->size(), 0);
    int d = deg(rng);
    for (int i = 0; i < d; ++i) ++e[static_cast<std::size_t>(var(rng))];
    out.push_back({Monomial::from_exponents(e), ring->field().sample(rng)});
  }
  return Polynomial<F>::from_terms(ring, std::move(out));
}

template <class F>
Polynomial<F> random_linear_form(const RingPtr<F>& ring, std::mt19937_64& rng) {
  std::vector<typename Polynomial<F>::Term> out;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    out.push_back({Monomial::variable(i), ring->field().sample(rng)});
  }
  return Polynomial<F>::from_terms(ring, std::move(out));
}

template <class F>
PolyMatrix<F> random_linear_matrix(const RingPtr<F>& ring, std::mt19937_64& rng, std::size_t rows,
                                   std::size_t cols) {
  PolyMatrix<F> m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_linear_form(ring, rng);
  }
  return m;
}

// Oracle: permutation expansion.
template <class F>
Polynomial<F> leibniz_determinant(const PolyMatrix<F>& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial<F> total(m.ring());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    Polynomial<F> term = Polynomial<F>::integer(m.ring(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Oracle: evaluate at a point of the prime field by direct summation.
inline std::uint32_t evaluate(const Polynomial<GF>& p, const std::vector<std::uint32_t>& point) {
  const GF& f = p.field();
  std::uint32_t total = 0;
  for (const auto& t : p.terms()) {
    std::uint32_t v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.monomial[i]; ++e) v = f.mul(v, point[i]);
    }
    total = f.add(total, v);
  }
  return total;
}

// Oracle: Krull dimension of a monomial ideal by enumerating variable
// subsets; the largest set containing no support of a generator.
inline int brute_force_dimension(const std::vector<Monomial>& gens, std::size_t n) {
  int best = -1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = std::all_of(gens.begin(), gens.end(),
                                   [&](const Monomial& g) { return (g.support() & ~s) != 0; });
    if (independent) best = std::max(best, std::popcount(s));
  }
  return best;
}

// Oracle: textbook multivariate division with respect to an order.
template <class F>
Polynomial<F> naive_remainder(Polynomial<F> p, const std::vector<Polynomial<F>>& divisors,
                              const MonomialOrder& order) {
  const F& field = p.field();
  Polynomial<F> rem(p.ring());
  while (!p.is_zero()) {
    auto lt = leading_term(p, order);
    bool divided = false;
    for (const auto& g : divisors) {
      auto lg = leading_term(g, order);
      if (!lg.monomial.divides(lt.monomial)) continue;
      p -= g.times_monomial(lt.monomial / lg.monomial, field.div(lt.coeff, lg.coeff));
      divided = true;
      break;
    }
    if (!divided) {
      auto single = Polynomial<F>::monomial(p.ring(), lt.monomial, lt.coeff);
      rem += single;
      p -= single;
    }
  }
  return rem;
}

inline std::vector<std::string> strings(const auto& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

}  // namespace testing
