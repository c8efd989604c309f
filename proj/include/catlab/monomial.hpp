#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace catlab {

inline constexpr std::size_t kMaxVariables = 48;
inline constexpr int kMaxExponent = 255;

/// Exponent vector with fixed capacity. Slots past the ring's variable count
/// stay zero, so comparisons never need the ring size.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const { return exp_[i]; }
  int degree() const { return degree_; }
  int degree_in(std::size_t first, std::size_t last) const;
  bool is_one() const { return degree_ == 0; }
  // Bit i set iff variable i occurs (first 64 variables).
  std::uint64_t support() const;

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  Monomial with_exponent(std::size_t i, int e) const;

  bool operator==(const Monomial& other) const {
    return degree_ == other.degree_ && exp_ == other.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exp_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Multiplicative well-orders on monomials. Block elimination compares the
/// first block by degrevlex and breaks ties with degrevlex on the rest.
class MonomialOrder {
 public:
  enum class Kind { degrevlex, lex, block_elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block_elimination(std::size_t first_block_size) {
    return MonomialOrder(Kind::block_elimination, first_block_size);
  }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }
  std::string name() const;

  // Negative, zero, positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::degrevlex:
        return degrevlex_compare(a, b);
      case Kind::lex:
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
          if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
      case Kind::block_elimination:
        return block_compare(a, b);
    }
    return 0;
  }

  static int degrevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    return revlex_tail(a, b, 0, kMaxVariables);
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
  bool operator<(const MonomialOrder& o) const {
    return kind_ != o.kind_ ? kind_ < o.kind_ : block_ < o.block_;
  }

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  // On [first, last): the monomial with the smaller exponent in the last
  // differing variable is larger.
  static int revlex_tail(const Monomial& a, const Monomial& b, std::size_t first,
                         std::size_t last) {
    for (std::size_t i = last; i-- > first;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  int block_compare(const Monomial& a, const Monomial& b) const;

  Kind kind_;
  std::size_t block_;
};

}  // namespace catlab
