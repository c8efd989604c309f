#include "catlab/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace catlab {

namespace {

template <class F>
using Terms = std::vector<typename Polynomial<F>::Term>;

struct Reducer {
  std::size_t index;
  std::uint64_t mask;
};

// The engine state shared by Buchberger and standalone normal forms. Every
// stored polynomial is monic with terms sorted descending under `order`.
template <class F>
class Engine {
 public:
  using Coeff = typename F::value_type;
  using Term = typename Polynomial<F>::Term;

  Engine(const F& field, MonomialOrder order, const Budget& budget)
      : field_(field), order_(order), budget_(budget) {}

  std::size_t add(Terms<F> terms, int sugar) {
    make_monic(terms);
    polys_.push_back({std::move(terms), sugar, true});
    return polys_.size() - 1;
  }

  const Terms<F>& terms(std::size_t i) const { return polys_[i].terms; }
  const Monomial& lead(std::size_t i) const { return polys_[i].terms.front().monomial; }
  int sugar(std::size_t i) const { return polys_[i].sugar; }
  bool active(std::size_t i) const { return polys_[i].active; }
  void deactivate(std::size_t i) { polys_[i].active = false; }
  std::size_t size() const { return polys_.size(); }

  void set_reducers(const std::vector<std::size_t>& indices) {
    reducers_.clear();
    for (std::size_t i : indices) reducers_.push_back({i, lead(i).support()});
  }
  void add_reducer(std::size_t i) { reducers_.push_back({i, lead(i).support()}); }
  void drop_reducers_divisible_by(const Monomial& m) {
    std::erase_if(reducers_, [&](const Reducer& r) { return m.divides(lead(r.index)); });
  }

  // Full reduction modulo the current reducers; sugar is updated in place.
  Terms<F> reduce(Terms<F> cur, int& sugar) const {
    Terms<F> rem;
    std::size_t pos = 0;
    std::size_t steps = 0;
    while (pos < cur.size()) {
      const Term& t = cur[pos];
      const Reducer* best = find_divisor(t.monomial);
      if (best == nullptr) {
        rem.push_back(std::move(cur[pos]));
        ++pos;
        continue;
      }
      const auto& g = polys_[best->index];
      Monomial m = t.monomial / g.terms.front().monomial;
      sugar = std::max(sugar, g.sugar + m.degree());
      cur = merge_sub(cur, pos + 1, t.coeff, m, g.terms);
      pos = 0;
      if ((++steps & 255u) == 0) budget_.check_time();
    }
    return rem;
  }

  // S-polynomial of two stored (monic) polynomials, leading terms cancelled.
  Terms<F> s_poly(std::size_t i, std::size_t j) const {
    const auto& f = polys_[i].terms;
    const auto& g = polys_[j].terms;
    Monomial l = lcm(f.front().monomial, g.front().monomial);
    Monomial mf = l / f.front().monomial;
    Monomial mg = l / g.front().monomial;
    Terms<F> a;
    a.reserve(f.size() - 1);
    for (std::size_t k = 1; k < f.size(); ++k) a.push_back({f[k].monomial * mf, f[k].coeff});
    return merge_sub(a, 0, field_.one(), mg, g);
  }

  void make_monic(Terms<F>& terms) const {
    if (terms.empty() || field_.is_one(terms.front().coeff)) return;
    auto inv = field_.inv(terms.front().coeff);
    for (auto& t : terms) t.coeff = field_.mul(t.coeff, inv);
  }

  const MonomialOrder& order() const { return order_; }
  const F& field() const { return field_; }
  const Budget& budget() const { return budget_; }

 private:
  struct Stored {
    Terms<F> terms;
    int sugar;
    bool active;
  };

  const Reducer* find_divisor(const Monomial& m) const {
    const std::uint64_t mask = m.support();
    const Reducer* best = nullptr;
    for (const auto& r : reducers_) {
      if ((r.mask & ~mask) != 0) continue;
      if (!lead(r.index).divides(m)) continue;
      if (best == nullptr || polys_[r.index].terms.size() < polys_[best->index].terms.size()) best = &r;
    }
    return best;
  }

  // cur[start..] - c * m * g[1..]
  Terms<F> merge_sub(const Terms<F>& cur, std::size_t start, const Coeff& c, const Monomial& m,
                     const Terms<F>& g) const {
    Terms<F> out;
    out.reserve(cur.size() - start + g.size());
    const Coeff neg_c = field_.neg(c);
    std::size_t i = start, j = 1;
    Monomial gm;
    bool have_gm = false;
    while (i < cur.size() || j < g.size()) {
      if (j < g.size() && !have_gm) {
        gm = g[j].monomial * m;
        have_gm = true;
      }
      int cmp = i == cur.size()   ? -1
                : j == g.size()   ? 1
                                  : order_.compare(cur[i].monomial, gm);
      if (cmp > 0) {
        out.push_back(cur[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, field_.mul(neg_c, g[j].coeff)});
        ++j;
        have_gm = false;
      } else {
        auto v = field_.add(cur[i].coeff, field_.mul(neg_c, g[j].coeff));
        if (!field_.is_zero(v)) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
        have_gm = false;
      }
    }
    return out;
  }

  const F& field_;
  MonomialOrder order_;
  const Budget& budget_;
  std::vector<Stored> polys_;
  std::vector<Reducer> reducers_;
};

template <class F>
Terms<F> sorted_terms(const Polynomial<F>& p, const MonomialOrder& order) {
  return p.terms_in(order);
}

int max_degree(const auto& terms) {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.monomial.degree());
  return d;
}

template <class F>
class Buchberger {
 public:
  Buchberger(const F& field, const MonomialOrder& order, const Budget& budget)
      : engine_(field, order, budget) {}

  std::vector<Terms<F>> run(const std::vector<Polynomial<F>>& gens) {
    std::vector<Terms<F>> inputs;
    for (const auto& g : gens) {
      if (!g.is_zero()) inputs.push_back(sorted_terms(g, engine_.order()));
    }
    std::sort(inputs.begin(), inputs.end(), [&](const Terms<F>& a, const Terms<F>& b) {
      int da = max_degree(a), db = max_degree(b);
      if (da != db) return da < db;
      return engine_.order().compare(a.front().monomial, b.front().monomial) < 0;
    });
    for (auto& in : inputs) {
      int sugar = max_degree(in);
      engine_.make_monic(in);
      Terms<F> h = engine_.reduce(std::move(in), sugar);
      if (!h.empty()) insert(std::move(h), sugar);
    }
    while (!pairs_.empty()) {
      engine_.budget().check_time();
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (pair_before(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      int sugar = p.sugar;
      Terms<F> h = engine_.reduce(engine_.s_poly(p.i, p.j), sugar);
      if (!h.empty()) insert(std::move(h), sugar);
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  bool pair_before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = engine_.order().compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }

  void insert(Terms<F> h, int sugar) {
    engine_.budget().check_degree(max_degree(h));
    std::size_t k = engine_.add(std::move(h), sugar);
    gebauer_moeller(k);
    engine_.drop_reducers_divisible_by(engine_.lead(k));
    engine_.add_reducer(k);
    std::size_t active = 0;
    for (std::size_t i = 0; i < engine_.size(); ++i) active += engine_.active(i) ? 1 : 0;
    engine_.budget().check_basis(active);
  }

  Pair make_pair(std::size_t i, std::size_t k) const {
    const Monomial& a = engine_.lead(i);
    const Monomial& b = engine_.lead(k);
    Monomial l = lcm(a, b);
    int sugar = std::max(engine_.sugar(i) - a.degree(), engine_.sugar(k) - b.degree()) + l.degree();
    return {i, k, l, sugar};
  }

  void gebauer_moeller(std::size_t k) {
    const Monomial& hk = engine_.lead(k);
    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < k; ++i) {
      if (engine_.active(i)) candidates.push_back(make_pair(i, k));
    }
    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool coprime = engine_.lead(p.i).coprime(hk);
      bool redundant = false;
      if (!coprime) {
        for (std::size_t d = c + 1; d < candidates.size() && !redundant; ++d) {
          redundant = candidates[d].lcm.divides(p.lcm);
        }
        for (const auto& q : kept) {
          if (redundant) break;
          redundant = q.lcm.divides(p.lcm);
        }
      }
      if (!redundant) kept.push_back(p);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return engine_.lead(p.i).coprime(hk); });
    // Old pairs made redundant by the new leading monomial.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!hk.divides(p.lcm)) return false;
      Monomial li = lcm(engine_.lead(p.i), hk);
      Monomial lj = lcm(engine_.lead(p.j), hk);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());
    for (std::size_t i = 0; i < k; ++i) {
      if (engine_.active(i) && hk.divides(engine_.lead(i))) engine_.deactivate(i);
    }
  }

  std::vector<Terms<F>> finish() {
    std::vector<std::size_t> final_set;
    for (std::size_t i = 0; i < engine_.size(); ++i) {
      if (engine_.active(i)) final_set.push_back(i);
    }
    engine_.set_reducers(final_set);
    std::vector<Terms<F>> out;
    for (std::size_t i : final_set) {
      const Terms<F>& f = engine_.terms(i);
      Terms<F> tail(f.begin() + 1, f.end());
      int sugar = 0;
      Terms<F> reduced = engine_.reduce(std::move(tail), sugar);
      Terms<F> element;
      element.reserve(reduced.size() + 1);
      element.push_back(f.front());
      for (auto& t : reduced) element.push_back(std::move(t));
      out.push_back(std::move(element));
    }
    std::sort(out.begin(), out.end(), [&](const Terms<F>& a, const Terms<F>& b) {
      return engine_.order().compare(a.front().monomial, b.front().monomial) < 0;
    });
    return out;
  }

  Engine<F> engine_;
  std::vector<Pair> pairs_;
};

}  // namespace

template <class F>
GroebnerBasis<F>::GroebnerBasis(RingPtr<F> ring, MonomialOrder order,
                                std::vector<std::vector<Term>> sorted)
    : ring_(std::move(ring)), order_(order), sorted_(std::move(sorted)) {
  for (const auto& s : sorted_) {
    leads_.push_back(s.front().monomial);
    elements_.push_back(Polynomial<F>::from_terms(ring_, s));
  }
}

template <class F>
Polynomial<F> GroebnerBasis<F>::normal_form(const Polynomial<F>& p) const {
  if (!same_ring(p.ring(), ring_)) throw std::invalid_argument("ring mismatch in normal_form");
  Budget unlimited;
  Engine<F> engine(ring_->field(), order_, unlimited);
  std::vector<std::size_t> indices;
  for (const auto& s : sorted_) indices.push_back(engine.add(s, 0));
  engine.set_reducers(indices);
  int sugar = 0;
  return Polynomial<F>::from_terms(ring_, engine.reduce(p.terms_in(order_), sugar));
}

template <class F>
bool GroebnerBasis<F>::operator==(const GroebnerBasis& other) const {
  return order_ == other.order_ && elements_ == other.elements_;
}

template <class F>
GroebnerBasis<F> compute_groebner_basis(const RingPtr<F>& ring,
                                        const std::vector<Polynomial<F>>& generators,
                                        const MonomialOrder& order, const Budget& budget) {
  for (const auto& g : generators) {
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generator from another ring");
  }
  Buchberger<F> algo(ring->field(), order, budget);
  return GroebnerBasis<F>(ring, order, algo.run(generators));
}

template <class F>
typename Polynomial<F>::Term leading_term(const Polynomial<F>& p, const MonomialOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of zero");
  const auto& terms = p.terms();
  return *std::max_element(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return order.compare(a.monomial, b.monomial) < 0;
  });
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g,
                           const MonomialOrder& order) {
  auto lf = leading_term(f, order);
  auto lg = leading_term(g, order);
  Monomial l = lcm(lf.monomial, lg.monomial);
  const F& field = f.field();
  return f.times_monomial(l / lf.monomial, field.inv(lf.coeff)) -
         g.times_monomial(l / lg.monomial, field.inv(lg.coeff));
}

int monomial_ideal_dimension(const std::vector<Monomial>& generators, std::size_t num_vars) {
  std::vector<std::uint64_t> masks;
  for (const auto& m : generators) {
    if (m.is_one()) return -1;
    masks.push_back(m.support());
  }
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  // Keep only minimal supports.
  std::vector<std::uint64_t> minimal;
  for (auto m : masks) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                 [&](std::uint64_t q) { return (q & m) == q; });
    if (!dominated) minimal.push_back(m);
  }
  // Minimum set of variables meeting every support.
  int best = static_cast<int>(num_vars) + 1;
  std::function<void(std::uint64_t, int)> search = [&](std::uint64_t chosen, int size) {
    if (size >= best) return;
    auto open = std::find_if(minimal.begin(), minimal.end(),
                             [&](std::uint64_t q) { return (q & chosen) == 0; });
    if (open == minimal.end()) {
      best = size;
      return;
    }
    if (size + 1 >= best) return;
    for (std::uint64_t bits = *open; bits != 0; bits &= bits - 1) {
      search(chosen | (bits & -bits), size + 1);
    }
  };
  search(0, 0);
  return static_cast<int>(num_vars) - best;
}

#define CATLAB_INSTANTIATE_GROEBNER(F)                                                          \
  template class GroebnerBasis<F>;                                                              \
  template GroebnerBasis<F> compute_groebner_basis(const RingPtr<F>&,                           \
                                                   const std::vector<Polynomial<F>>&,           \
                                                   const MonomialOrder&, const Budget&);        \
  template Polynomial<F>::Term leading_term(const Polynomial<F>&, const MonomialOrder&);        \
  template Polynomial<F> s_polynomial(const Polynomial<F>&, const Polynomial<F>&,               \
                                      const MonomialOrder&);

CATLAB_INSTANTIATE_GROEBNER(PrimeField)
CATLAB_INSTANTIATE_GROEBNER(RationalField)

}  // namespace catlab
