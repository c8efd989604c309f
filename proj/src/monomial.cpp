#include "catlab/monomial.hpp"

#include <algorithm>

namespace catlab {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw std::invalid_argument("too many variables for a monomial");
  }
  Monomial m;
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kMaxExponent) {
      throw std::out_of_range("exponent out of range: " + std::to_string(exponents[i]));
    }
    m.exp_[i] = static_cast<std::uint8_t>(exponents[i]);
    degree += exponents[i];
  }
  m.degree_ = static_cast<std::uint16_t>(degree);
  return m;
}

Monomial Monomial::variable(std::size_t index, int power) {
  if (index >= kMaxVariables) throw std::out_of_range("variable index out of range");
  if (power < 0 || power > kMaxExponent) throw std::out_of_range("exponent out of range");
  Monomial m;
  m.exp_[index] = static_cast<std::uint8_t>(power);
  m.degree_ = static_cast<std::uint16_t>(power);
  return m;
}

int Monomial::degree_in(std::size_t first, std::size_t last) const {
  int d = 0;
  for (std::size_t i = first; i < last && i < kMaxVariables; ++i) d += exp_[i];
  return d;
}

std::uint64_t Monomial::support() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables && i < 64; ++i) {
    if (exp_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  bool overflow = false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    int e = a.exp_[i] + b.exp_[i];
    overflow |= e > kMaxExponent;
    m.exp_[i] = static_cast<std::uint8_t>(e);
  }
  if (overflow) throw std::overflow_error("monomial exponent exceeds 255");
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  int degree = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    degree += m.exp_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(degree);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  int degree = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    degree += m.exp_[i];
  }
  m.degree_ = static_cast<std::uint16_t>(degree);
  return m;
}

Monomial Monomial::with_exponent(std::size_t i, int e) const {
  if (i >= kMaxVariables || e < 0 || e > kMaxExponent) {
    throw std::out_of_range("with_exponent out of range");
  }
  Monomial m = *this;
  m.degree_ = static_cast<std::uint16_t>(m.degree_ - m.exp_[i] + e);
  m.exp_[i] = static_cast<std::uint8_t>(e);
  return m;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the exponent bytes.
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t e : exp_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int MonomialOrder::block_compare(const Monomial& a, const Monomial& b) const {
  int da = a.degree_in(0, block_), db = b.degree_in(0, block_);
  if (da != db) return da < db ? -1 : 1;
  if (int c = revlex_tail(a, b, 0, block_); c != 0) return c;
  int ra = a.degree() - da, rb = b.degree() - db;
  if (ra != rb) return ra < rb ? -1 : 1;
  return revlex_tail(a, b, block_, kMaxVariables);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::degrevlex:
      return "degrevlex";
    case Kind::lex:
      return "lex";
    case Kind::block_elimination:
      return "block_elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace catlab
