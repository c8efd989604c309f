#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "catlab/groebner.hpp"

namespace catlab {

/// Ideal given by generators, with reduced Groebner bases cached per order.
/// Copies share the cache; every derived ideal inherits the budget.
template <class F>
class Ideal {
 public:
  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators, Budget budget = {});

  // (x_first, ..., x_{last-1})
  static Ideal variables(RingPtr<F> ring, std::size_t first, std::size_t last, Budget budget = {});

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }
  const Budget& budget() const { return budget_; }
  Ideal with_budget(Budget budget) const { return Ideal(ring_, generators_, budget); }

  const GroebnerBasis<F>& groebner_basis(
      const MonomialOrder& order = MonomialOrder::degrevlex()) const;

  Polynomial<F> normal_form(const Polynomial<F>& p,
                            const MonomialOrder& order = MonomialOrder::degrevlex()) const;
  bool contains(const Polynomial<F>& p) const { return normal_form(p).is_zero(); }
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner_basis().is_unit(); }
  bool is_zero() const { return generators_.empty(); }
  // Same ideal; compares reduced degrevlex bases.
  bool operator==(const Ideal& other) const;

  // Krull dimension of R/I; -1 for the unit ideal.
  int dimension() const;
  // Number of variables minus dimension; the unit ideal gets n + 1.
  int height() const { return static_cast<int>(ring_->size()) - dimension(); }

  Ideal power(int r) const;
  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  Ideal intersect(const Ideal& other) const;

  Ideal quotient(const Polynomial<F>& f) const;
  Ideal quotient(const Ideal& other) const;
  // I : f^infinity through one auxiliary variable.
  Ideal saturation(const Polynomial<F>& f) const;
  // I : J^infinity. Two random combinations of J's generators must agree;
  // otherwise iterated quotients by J decide.
  Ideal saturation(const Ideal& other) const;
  // I intersected with the subring on variables [block, n).
  Ideal eliminate(std::size_t block) const;

  // f in rad(I), via 1 in (I, 1 - w f).
  bool radical_contains(const Polynomial<F>& f) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis<F>>> bases;
  };

  void check_same_ring(const Ideal& other, const char* what) const;
  void seed_basis(std::shared_ptr<const GroebnerBasis<F>> basis) const;

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
  Budget budget_;
  std::shared_ptr<Cache> cache_;
};

// The ring with `names` inserted in front of the existing variables.
template <class F>
RingPtr<F> prepend_variables(const RingPtr<F>& ring, const std::vector<std::string>& names);

// The ring without its first `block` variables.
template <class F>
RingPtr<F> drop_leading_variables(const RingPtr<F>& ring, std::size_t block);

// Variable i of p's ring becomes variable i + offset of target.
template <class F>
Polynomial<F> shift_variables(const Polynomial<F>& p, const RingPtr<F>& target, int offset);

}  // namespace catlab
