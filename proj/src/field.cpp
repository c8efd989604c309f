#include "catlab/field.hpp"

#include <cctype>

namespace catlab {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw std::invalid_argument("prime modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

namespace {

void check_integer_literal(std::string_view digits) {
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (start == digits.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
      throw std::invalid_argument("bad integer literal '" + std::string(digits) + "'");
    }
  }
}

}  // namespace

PrimeField::value_type PrimeField::from_string(std::string_view digits) const {
  check_integer_literal(digits);
  bool negative = digits[0] == '-';
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  std::uint64_t r = 0;
  for (std::size_t i = start; i < digits.size(); ++i) {
    r = (r * 10 + static_cast<std::uint64_t>(digits[i] - '0')) % p_;
  }
  auto v = static_cast<value_type>(r);
  return negative ? neg(v) : v;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

std::string PrimeField::to_string(value_type a) const {
  if (is_negative(a)) return "-" + std::to_string(p_ - a);
  return std::to_string(a);
}

RationalField::value_type RationalField::from_string(std::string_view digits) const {
  check_integer_literal(digits);
  std::string s(digits[0] == '+' ? digits.substr(1) : digits);
  return mpq_class(mpz_class(s));
}

RationalField::value_type RationalField::from_ratio(std::string_view num,
                                                    std::string_view den) const {
  return div(from_string(num), from_string(den));
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in QQ");
  mpq_class r = 1 / a;
  r.canonicalize();
  return r;
}

}  // namespace catlab
