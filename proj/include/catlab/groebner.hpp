#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "catlab/polynomial.hpp"

namespace catlab {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resource caps for Groebner computations. Zero means unlimited. The clock
/// starts when the budget is created (or restarted).
struct Budget {
  std::size_t max_basis = 0;
  int max_degree = 0;
  double wall_clock_seconds = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Budget restarted() const {
    Budget b = *this;
    b.start = std::chrono::steady_clock::now();
    return b;
  }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  void check_time() const {
    if (wall_clock_seconds > 0 && elapsed_seconds() > wall_clock_seconds) {
      throw BudgetExceeded("wall-clock budget of " + std::to_string(wall_clock_seconds) +
                           " s exceeded");
    }
  }
  void check_basis(std::size_t size) const {
    if (max_basis > 0 && size > max_basis) {
      throw BudgetExceeded("basis size " + std::to_string(size) + " exceeds budget " +
                           std::to_string(max_basis));
    }
  }
  void check_degree(int degree) const {
    if (max_degree > 0 && degree > max_degree) {
      throw BudgetExceeded("basis degree " + std::to_string(degree) + " exceeds budget " +
                           std::to_string(max_degree));
    }
  }
};

/// Reduced Groebner basis: monic, interreduced, sorted ascending by leading
/// monomial under its order.
template <class F>
class GroebnerBasis {
 public:
  using Term = typename Polynomial<F>::Term;

  GroebnerBasis(RingPtr<F> ring, MonomialOrder order, std::vector<std::vector<Term>> sorted);

  const RingPtr<F>& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  // Leading monomials under order(), aligned with elements().
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool is_unit() const { return leads_.size() == 1 && leads_[0].is_one(); }

  Polynomial<F> normal_form(const Polynomial<F>& p) const;
  bool operator==(const GroebnerBasis& other) const;

 private:
  RingPtr<F> ring_;
  MonomialOrder order_;
  std::vector<std::vector<Term>> sorted_;
  std::vector<Polynomial<F>> elements_;
  std::vector<Monomial> leads_;
};

template <class F>
GroebnerBasis<F> compute_groebner_basis(const RingPtr<F>& ring,
                                        const std::vector<Polynomial<F>>& generators,
                                        const MonomialOrder& order, const Budget& budget = {});

// Leading term of p under order; p nonzero.
template <class F>
typename Polynomial<F>::Term leading_term(const Polynomial<F>& p, const MonomialOrder& order);

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g,
                           const MonomialOrder& order);

// Krull dimension of k[x]/(monomials) via a minimum hitting set of the
// supports; -1 when a constant is present.
int monomial_ideal_dimension(const std::vector<Monomial>& generators, std::size_t num_vars);

}  // namespace catlab
