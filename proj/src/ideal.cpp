#include "catlab/ideal.hpp"

#include <algorithm>
#include <random>

namespace catlab {

template <class F>
RingPtr<F> prepend_variables(const RingPtr<F>& ring, const std::vector<std::string>& names) {
  std::vector<std::string> all = names;
  all.insert(all.end(), ring->names().begin(), ring->names().end());
  return make_ring(ring->field(), std::move(all));
}

template <class F>
RingPtr<F> drop_leading_variables(const RingPtr<F>& ring, std::size_t block) {
  if (block > ring->size()) throw std::out_of_range("cannot drop more variables than the ring has");
  std::vector<std::string> rest(ring->names().begin() + static_cast<std::ptrdiff_t>(block),
                                ring->names().end());
  return make_ring(ring->field(), std::move(rest));
}

template <class F>
Polynomial<F> shift_variables(const Polynomial<F>& p, const RingPtr<F>& target, int offset) {
  std::vector<int> map(p.ring()->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i) + offset;
  return p.rename(target, map);
}

template <class F>
Ideal<F>::Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators, Budget budget)
    : ring_(std::move(ring)), budget_(budget), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw std::invalid_argument("ideal generator from another ring");
    if (g.is_zero()) continue;
    if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) continue;
    generators_.push_back(std::move(g));
  }
}

template <class F>
Ideal<F> Ideal<F>::variables(RingPtr<F> ring, std::size_t first, std::size_t last, Budget budget) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = first; i < last; ++i) gens.push_back(Polynomial<F>::variable(ring, i));
  return Ideal(std::move(ring), std::move(gens), budget);
}

template <class F>
void Ideal<F>::check_same_ring(const Ideal& other, const char* what) const {
  if (!same_ring(ring_, other.ring_)) throw std::invalid_argument(std::string("ring mismatch in ") + what);
}

template <class F>
const GroebnerBasis<F>& Ideal<F>::groebner_basis(const MonomialOrder& order) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto basis = std::make_shared<const GroebnerBasis<F>>(
      compute_groebner_basis(ring_, generators_, order, budget_));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order, std::move(basis));
  return *it->second;
}

template <class F>
void Ideal<F>::seed_basis(std::shared_ptr<const GroebnerBasis<F>> basis) const {
  std::lock_guard lock(cache_->mutex);
  cache_->bases.emplace(basis->order(), std::move(basis));
}

template <class F>
Polynomial<F> Ideal<F>::normal_form(const Polynomial<F>& p, const MonomialOrder& order) const {
  return groebner_basis(order).normal_form(p);
}

template <class F>
bool Ideal<F>::contains(const Ideal& other) const {
  check_same_ring(other, "containment");
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial<F>& g) { return contains(g); });
}

template <class F>
bool Ideal<F>::operator==(const Ideal& other) const {
  check_same_ring(other, "ideal comparison");
  return groebner_basis() == other.groebner_basis();
}

template <class F>
int Ideal<F>::dimension() const {
  return monomial_ideal_dimension(groebner_basis().leading_monomials(), ring_->size());
}

template <class F>
Ideal<F> Ideal<F>::power(int r) const {
  if (r < 1) throw std::invalid_argument("ideal power needs r >= 1");
  // Products over nondecreasing index tuples, built level by level.
  struct Partial {
    std::size_t last;
    Polynomial<F> product;
  };
  std::vector<Partial> level;
  for (std::size_t i = 0; i < generators_.size(); ++i) level.push_back({i, generators_[i]});
  for (int k = 1; k < r; ++k) {
    std::vector<Partial> next;
    for (const auto& p : level) {
      for (std::size_t i = p.last; i < generators_.size(); ++i) {
        next.push_back({i, p.product * generators_[i]});
      }
    }
    level = std::move(next);
  }
  std::vector<Polynomial<F>> gens;
  for (auto& p : level) gens.push_back(std::move(p.product));
  return Ideal(ring_, std::move(gens), budget_);
}

template <class F>
Ideal<F> Ideal<F>::operator+(const Ideal& other) const {
  check_same_ring(other, "ideal sum");
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens), budget_);
}

template <class F>
Ideal<F> Ideal<F>::operator*(const Ideal& other) const {
  check_same_ring(other, "ideal product");
  std::vector<Polynomial<F>> gens;
  for (const auto& a : generators_) {
    for (const auto& b : other.generators_) gens.push_back(a * b);
  }
  return Ideal(ring_, std::move(gens), budget_);
}

template <class F>
Ideal<F> Ideal<F>::eliminate(std::size_t block) const {
  if (block > ring_->size()) throw std::out_of_range("elimination block larger than the ring");
  const auto& gb = groebner_basis(MonomialOrder::block_elimination(block));
  auto sub = drop_leading_variables(ring_, block);
  std::vector<Polynomial<F>> kept;
  std::vector<std::vector<typename Polynomial<F>::Term>> sorted;
  for (const auto& g : gb.elements()) {
    if (g.degree_in_block(0, block) > 0) continue;
    auto h = shift_variables(g, sub, -static_cast<int>(block));
    sorted.push_back(h.terms_in(MonomialOrder::degrevlex()));
    kept.push_back(std::move(h));
  }
  Ideal result(sub, kept, budget_);
  // On the subring the elimination order restricts to degrevlex, so the
  // surviving elements already form its reduced basis.
  result.seed_basis(
      std::make_shared<const GroebnerBasis<F>>(sub, MonomialOrder::degrevlex(), std::move(sorted)));
  return result;
}

template <class F>
Ideal<F> Ideal<F>::intersect(const Ideal& other) const {
  check_same_ring(other, "intersection");
  auto ext = prepend_variables(ring_, {ring_->fresh_name("t")});
  auto t = Polynomial<F>::variable(ext, 0);
  auto one_minus_t = Polynomial<F>::integer(ext, 1) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : generators_) gens.push_back(t * shift_variables(g, ext, 1));
  for (const auto& g : other.generators_) gens.push_back(one_minus_t * shift_variables(g, ext, 1));
  return Ideal(ext, std::move(gens), budget_).eliminate(1);
}

template <class F>
Ideal<F> Ideal<F>::quotient(const Polynomial<F>& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("ring mismatch in quotient");
  if (f.is_zero()) return Ideal(ring_, {Polynomial<F>::integer(ring_, 1)}, budget_);
  auto meet = intersect(Ideal(ring_, {f}, budget_));
  std::vector<Polynomial<F>> gens;
  for (const auto& g : meet.groebner_basis().elements()) {
    auto q = g.divide_exact(f);
    if (!q) throw std::logic_error("element of I meet (f) not divisible by f");
    gens.push_back(std::move(*q));
  }
  return Ideal(ring_, std::move(gens), budget_);
}

template <class F>
Ideal<F> Ideal<F>::quotient(const Ideal& other) const {
  check_same_ring(other, "quotient");
  if (other.is_zero()) return Ideal(ring_, {Polynomial<F>::integer(ring_, 1)}, budget_);
  std::optional<Ideal> result;
  for (const auto& g : other.generators_) {
    Ideal q = quotient(g);
    result = result ? result->intersect(q) : q;
  }
  return *result;
}

template <class F>
Ideal<F> Ideal<F>::saturation(const Polynomial<F>& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("ring mismatch in saturation");
  if (f.is_zero()) return Ideal(ring_, {Polynomial<F>::integer(ring_, 1)}, budget_);
  if (f.is_constant()) return *this;
  auto ext = prepend_variables(ring_, {ring_->fresh_name("w")});
  auto w = Polynomial<F>::variable(ext, 0);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : generators_) gens.push_back(shift_variables(g, ext, 1));
  gens.push_back(Polynomial<F>::integer(ext, 1) - w * shift_variables(f, ext, 1));
  // The subring is structurally equal to ring_, so the seeded basis carries over.
  return Ideal(ext, std::move(gens), budget_).eliminate(1);
}

template <class F>
Ideal<F> Ideal<F>::saturation(const Ideal& other) const {
  check_same_ring(other, "saturation");
  if (other.is_zero()) return Ideal(ring_, {Polynomial<F>::integer(ring_, 1)}, budget_);
  if (other.generators_.size() == 1) return saturation(other.generators_.front());
  if (other.is_unit()) return *this;

  const F& field = ring_->field();
  std::mt19937_64 rng(0x5a7c0ffeeULL);
  auto combination = [&] {
    Polynomial<F> f(ring_);
    for (const auto& g : other.generators_) {
      auto c = field.sample(rng);
      while (field.is_zero(c)) c = field.sample(rng);
      f += g.scaled(c);
    }
    return f;
  };
  Polynomial<F> f1 = combination();
  Polynomial<F> f2 = combination();
  if (!f1.is_zero() && !f2.is_zero()) {
    Ideal s1 = saturation(f1);
    Ideal s2 = saturation(f2);
    if (s1 == s2) return s1;
  }
  Ideal current = *this;
  for (;;) {
    Ideal next = current.quotient(other);
    if (next == current) return current;
    current = next;
  }
}

template <class F>
bool Ideal<F>::radical_contains(const Polynomial<F>& f) const {
  if (!same_ring(f.ring(), ring_)) throw std::invalid_argument("ring mismatch in radical membership");
  auto ext = prepend_variables(ring_, {ring_->fresh_name("w")});
  auto w = Polynomial<F>::variable(ext, 0);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : generators_) gens.push_back(shift_variables(g, ext, 1));
  gens.push_back(Polynomial<F>::integer(ext, 1) - w * shift_variables(f, ext, 1));
  return Ideal(ext, std::move(gens), budget_).is_unit();
}

#define CATLAB_INSTANTIATE_IDEAL(F)                                                             \
  template class Ideal<F>;                                                                      \
  template RingPtr<F> prepend_variables(const RingPtr<F>&, const std::vector<std::string>&);    \
  template RingPtr<F> drop_leading_variables(const RingPtr<F>&, std::size_t);                   \
  template Polynomial<F> shift_variables(const Polynomial<F>&, const RingPtr<F>&, int);

CATLAB_INSTANTIATE_IDEAL(PrimeField)
CATLAB_INSTANTIATE_IDEAL(RationalField)

}  // namespace catlab
