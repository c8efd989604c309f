#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catlab/monomial.hpp"
#include "catlab/ring.hpp"

namespace catlab {

/// Sparse polynomial over a field. Terms are kept in canonical form: nonzero
/// coefficients, sorted descending under degrevlex. Value type; immutable
/// once built.
template <class F>
class Polynomial {
 public:
  using Coeff = typename F::value_type;
  struct Term {
    Monomial monomial;
    Coeff coeff;
  };

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Coeff& c);
  static Polynomial integer(RingPtr<F> ring, long long c);
  static Polynomial variable(RingPtr<F> ring, std::size_t index);
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const Coeff& c);
  // Collects like terms and drops zeros; input order is irrelevant.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms);

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
  bool is_homogeneous() const;
  int degree_in(std::size_t var) const;
  int degree_in_block(std::size_t first, std::size_t last) const;
  // Terms of degree exactly d in the variables [first, last).
  Polynomial block_component(std::size_t first, std::size_t last, int d) const;

  // Leading term under degrevlex. Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }
  Coeff coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_monomial(const Monomial& m, const Coeff& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;
  // Ring homomorphism sending variable i to images[i]; unset images are only
  // allowed for variables that do not occur.
  Polynomial substitute(std::span<const std::optional<Polynomial>> images,
                        const RingPtr<F>& target) const;
  // Moves variable i to target variable var_map[i]; -1 means "must not occur".
  Polynomial rename(const RingPtr<F>& target, std::span<const int> var_map) const;

  // Divided by its leading coefficient; zero stays zero.
  Polynomial normalized() const;
  // Quotient when other divides *this exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& other) const;
  // Terms sorted under another order (for printing and engines).
  std::vector<Term> terms_in(const MonomialOrder& order) const;

  std::string to_string() const;
  std::string to_string(const MonomialOrder& order) const;

  bool operator==(const Polynomial& other) const;

  template <class G>
  friend Polynomial<G> operator+(const Polynomial<G>& a, const Polynomial<G>& b);
  template <class G>
  friend Polynomial<G> operator-(const Polynomial<G>& a, const Polynomial<G>& b);
  template <class G>
  friend Polynomial<G> operator*(const Polynomial<G>& a, const Polynomial<G>& b);

 private:
  void check_same_ring(const Polynomial& other, const char* what) const;

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

template <class F>
Polynomial<F> operator+(const Polynomial<F>& a, const Polynomial<F>& b);
template <class F>
Polynomial<F> operator-(const Polynomial<F>& a, const Polynomial<F>& b);
template <class F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b);

// c such that a == c * b, when such a nonzero scalar exists.
template <class F>
std::optional<typename F::value_type> scalar_ratio(const Polynomial<F>& a, const Polynomial<F>& b);

}  // namespace catlab
