#include "catlab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace catlab {

namespace {

template <class F>
using TermVec = std::vector<typename Polynomial<F>::Term>;

template <class F>
void sort_canonical(TermVec<F>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return MonomialOrder::degrevlex_compare(a.monomial, b.monomial) > 0;
  });
}

// a + scale * b for canonical term lists.
template <class F>
TermVec<F> merge_terms(const F& field, const TermVec<F>& a, const TermVec<F>& b,
                       const typename F::value_type& scale) {
  TermVec<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size()   ? -1
            : j == b.size() ? 1
                            : MonomialOrder::degrevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      auto v = field.mul(scale, b[j].coeff);
      if (!field.is_zero(v)) out.push_back({b[j].monomial, std::move(v)});
      ++j;
    } else {
      auto v = field.add(a[i].coeff, field.mul(scale, b[j].coeff));
      if (!field.is_zero(v)) out.push_back({a[i].monomial, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class F>
void Polynomial<F>::check_same_ring(const Polynomial& other, const char* what) const {
  if (!same_ring(ring_, other.ring_)) {
    throw std::invalid_argument(std::string("ring mismatch in ") + what);
  }
}

template <class F>
Polynomial<F> Polynomial<F>::constant(RingPtr<F> ring, const Coeff& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::integer(RingPtr<F> ring, long long c) {
  auto v = ring->field().from_int(c);
  return constant(std::move(ring), v);
}

template <class F>
Polynomial<F> Polynomial<F>::variable(RingPtr<F> ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  auto one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

template <class F>
Polynomial<F> Polynomial<F>::monomial(RingPtr<F> ring, const Monomial& m, const Coeff& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr<F> ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  const F& field = p.field();
  sort_canonical<F>(terms);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && field.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class F>
bool Polynomial<F>::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

template <class F>
int Polynomial<F>::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

template <class F>
int Polynomial<F>::degree_in_block(std::size_t first, std::size_t last) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(first, last));
  return d;
}

template <class F>
Polynomial<F> Polynomial<F>::block_component(std::size_t first, std::size_t last, int d) const {
  Polynomial p(ring_);
  for (const auto& t : terms_) {
    if (t.monomial.degree_in(first, last) == d) p.terms_.push_back(t);
  }
  return p;
}

template <class F>
typename Polynomial<F>::Coeff Polynomial<F>::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return field().zero();
}

template <class F>
Polynomial<F> Polynomial<F>::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, field().neg(t.coeff)});
  return p;
}

template <class F>
Polynomial<F> operator+(const Polynomial<F>& a, const Polynomial<F>& b) {
  a.check_same_ring(b, "addition");
  Polynomial<F> p(a.ring_);
  p.terms_ = merge_terms<F>(a.field(), a.terms_, b.terms_, a.field().one());
  return p;
}

template <class F>
Polynomial<F> operator-(const Polynomial<F>& a, const Polynomial<F>& b) {
  a.check_same_ring(b, "subtraction");
  Polynomial<F> p(a.ring_);
  p.terms_ = merge_terms<F>(a.field(), a.terms_, b.terms_, a.field().neg(a.field().one()));
  return p;
}

template <class F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b) {
  a.check_same_ring(b, "multiplication");
  const F& field = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial<F>(a.ring_);
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    return large.times_monomial(small.terms_[0].monomial, small.terms_[0].coeff);
  }
  std::unordered_map<Monomial, typename F::value_type, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : small.terms_) {
    for (const auto& l : large.terms_) {
      auto prod = field.mul(s.coeff, l.coeff);
      auto [it, inserted] = acc.try_emplace(s.monomial * l.monomial, prod);
      if (!inserted) it->second = field.add(it->second, prod);
    }
  }
  Polynomial<F> p(a.ring_);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!field.is_zero(c)) p.terms_.push_back({m, std::move(c)});
  }
  sort_canonical<F>(p.terms_);
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::scaled(const Coeff& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, field().mul(c, t.coeff)});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::times_monomial(const Monomial& m, const Coeff& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, field().mul(c, t.coeff)});
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::pow(unsigned e) const {
  Polynomial result = integer(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class F>
Polynomial<F> Polynomial<F>::derivative(std::size_t var) const {
  if (var >= ring_->size()) throw std::out_of_range("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial[var];
    if (e == 0) continue;
    out.push_back({t.monomial.with_exponent(var, e - 1), field().mul(field().from_int(e), t.coeff)});
  }
  return from_terms(ring_, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::substitute(std::span<const std::optional<Polynomial>> images,
                                        const RingPtr<F>& target) const {
  if (images.size() != ring_->size()) {
    throw std::invalid_argument("substitution needs one slot per source variable");
  }
  for (const auto& img : images) {
    if (img && !same_ring(img->ring(), target)) {
      throw std::invalid_argument("substitution images must live in the target ring");
    }
  }
  std::vector<int> max_exp(ring_->size(), 0);
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < ring_->size(); ++v) max_exp[v] = std::max(max_exp[v], t.monomial[v]);
  }
  std::vector<std::vector<Polynomial>> powers(ring_->size());
  for (std::size_t v = 0; v < ring_->size(); ++v) {
    if (max_exp[v] == 0) continue;
    if (!images[v]) {
      throw std::invalid_argument("no image for variable " + ring_->name(v) +
                                  " which occurs in the polynomial");
    }
    powers[v].push_back(integer(target, 1));
    for (int e = 1; e <= max_exp[v]; ++e) powers[v].push_back(powers[v].back() * *images[v]);
  }
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t v = 0; v < ring_->size() && !prod.is_zero(); ++v) {
      if (t.monomial[v] != 0) prod = prod * powers[v][t.monomial[v]];
    }
    for (const auto& pt : prod.terms_) {
      auto [it, inserted] = acc.try_emplace(pt.monomial, pt.coeff);
      if (!inserted) it->second = field().add(it->second, pt.coeff);
    }
  }
  Polynomial p(target);
  for (auto& [m, c] : acc) {
    if (!field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
  }
  sort_canonical<F>(p.terms_);
  return p;
}

template <class F>
Polynomial<F> Polynomial<F>::rename(const RingPtr<F>& target, std::span<const int> var_map) const {
  if (var_map.size() != ring_->size()) throw std::invalid_argument("rename map has wrong size");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> exps(target->size(), 0);
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (var_map[v] < 0 || static_cast<std::size_t>(var_map[v]) >= target->size()) {
        throw std::invalid_argument("variable " + ring_->name(v) + " has no image in target ring");
      }
      exps[var_map[v]] += t.monomial[v];
    }
    out.push_back({Monomial::from_exponents(exps), t.coeff});
  }
  return from_terms(target, std::move(out));
}

template <class F>
Polynomial<F> Polynomial<F>::normalized() const {
  if (is_zero()) return *this;
  return scaled(field().inv(terms_.front().coeff));
}

template <class F>
std::optional<Polynomial<F>> Polynomial<F>::divide_exact(const Polynomial& other) const {
  check_same_ring(other, "division");
  if (other.is_zero()) throw std::domain_error("exact division by the zero polynomial");
  const F& f = field();
  const Term& lead = other.terms_.front();
  auto lead_inv = f.inv(lead.coeff);
  std::vector<Term> quotient;
  std::vector<Term> rem = terms_;
  while (!rem.empty()) {
    const Term& t = rem.front();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Monomial m = t.monomial / lead.monomial;
    auto c = f.mul(t.coeff, lead_inv);
    quotient.push_back({m, c});
    Polynomial step = other.times_monomial(m, c);
    rem = merge_terms<F>(f, rem, step.terms_, f.neg(f.one()));
  }
  Polynomial q(ring_);
  q.terms_ = std::move(quotient);  // generated in descending order
  return q;
}

template <class F>
std::vector<typename Polynomial<F>::Term> Polynomial<F>::terms_in(const MonomialOrder& order) const {
  std::vector<Term> out = terms_;
  if (order.kind() != MonomialOrder::Kind::degrevlex) {
    std::stable_sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.monomial, b.monomial) > 0;
    });
  }
  return out;
}

template <class F>
std::string Polynomial<F>::to_string() const {
  return to_string(MonomialOrder::degrevlex());
}

template <class F>
std::string Polynomial<F>::to_string(const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_in(order)) {
    bool negative = field().is_negative(t.coeff);
    auto magnitude = negative ? field().neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = field().is_one(magnitude);
    if (!unit || t.monomial.is_one()) {
      out << field().to_string(magnitude);
      if (!t.monomial.is_one()) out << '*';
    }
    bool first_factor = true;
    for (std::size_t v = 0; v < ring_->size(); ++v) {
      int e = t.monomial[v];
      if (e == 0) continue;
      if (!first_factor) out << '*';
      first_factor = false;
      out << ring_->name(v);
      if (e > 1) out << '^' << e;
    }
  }
  return out.str();
}

template <class F>
bool Polynomial<F>::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) ||
        !field().equal(terms_[i].coeff, other.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

template <class F>
std::optional<typename F::value_type> scalar_ratio(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const F& f = a.field();
  auto c = f.div(a.terms().front().coeff, b.terms().front().coeff);
  if (b.scaled(c) == a) return c;
  return std::nullopt;
}

#define CATLAB_INSTANTIATE_POLYNOMIAL(F)                                                     \
  template class Polynomial<F>;                                                              \
  template Polynomial<F> operator+ <F>(const Polynomial<F>&, const Polynomial<F>&);          \
  template Polynomial<F> operator- <F>(const Polynomial<F>&, const Polynomial<F>&);          \
  template Polynomial<F> operator* <F>(const Polynomial<F>&, const Polynomial<F>&);          \
  template std::optional<F::value_type> scalar_ratio<F>(const Polynomial<F>&, const Polynomial<F>&);

CATLAB_INSTANTIATE_POLYNOMIAL(PrimeField)
CATLAB_INSTANTIATE_POLYNOMIAL(RationalField)

std::vector<std::string> indexed_names(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace catlab
