#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace catlab {

/// GF(p) for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  // Decimal integer literal with optional sign, reduced digit by digit.
  value_type from_string(std::string_view digits) const;
  value_type from_ratio(std::string_view num, std::string_view den) const {
    return div(from_string(num), from_string(den));
  }

  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  bool equal(value_type a, value_type b) const { return a == b; }

  // Symmetric representative: residues above p/2 print as negatives.
  std::string to_string(value_type a) const;
  bool is_negative(value_type a) const { return a > p_ / 2; }

  value_type sample(std::mt19937_64& rng) const { return static_cast<value_type>(rng() % p_); }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
 public:
  using value_type = mpq_class;

  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return mpq_class(mpz_class(std::to_string(v))); }
  value_type from_string(std::string_view digits) const;
  value_type from_ratio(std::string_view num, std::string_view den) const;

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  bool is_negative(const value_type& a) const { return sgn(a) < 0; }

  // Small integers keep rational runs readable and fast.
  value_type sample(std::mt19937_64& rng) const {
    return from_int(static_cast<long long>(rng() % 201) - 100);
  }

  bool operator==(const RationalField&) const { return true; }
};

bool is_prime(std::uint64_t p);

}  // namespace catlab
