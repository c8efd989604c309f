#include "catlab/parse.hpp"

#include <cctype>

namespace catlab {

namespace {

template <class F>
class Parser {
 public:
  Parser(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  Polynomial<F> parse() {
    using Term = typename Polynomial<F>::Term;
    const F& field = ring_->field();
    std::vector<Term> terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    for (;;) {
      Term t = parse_term();
      if (negative) t.coeff = field.neg(t.coeff);
      terms.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      negative = take() == '-';
    }
    return Polynomial<F>::from_terms(ring_, std::move(terms));
  }

 private:
  typename Polynomial<F>::Term parse_term() {
    const F& field = ring_->field();
    skip_space();
    auto coeff = field.one();
    std::vector<int> exps(ring_->size(), 0);
    bool need_factor = true;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = read_digits();
      skip_space();
      if (!at_end() && peek() == '/') {
        take();
        skip_space();
        std::size_t den_pos = pos_;
        std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", den_pos);
        if (field.is_zero(field.from_string(den))) throw ParseError("zero denominator", den_pos);
        coeff = field.from_ratio(num, den);
      } else {
        coeff = field.from_string(num);
      }
      skip_space();
      if (at_end() || peek() != '*') need_factor = false;
      else take();
    }
    while (need_factor) {
      skip_space();
      std::size_t start = pos_;
      std::string name = read_identifier();
      if (name.empty()) throw ParseError("expected variable", start);
      auto index = ring_->index_of(name);
      if (!index) throw ParseError("unknown variable '" + name + "'", start);
      int e = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        take();
        skip_space();
        std::size_t exp_pos = pos_;
        std::string digits = read_digits();
        if (digits.empty()) throw ParseError("expected exponent", exp_pos);
        if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) {
          throw ParseError("exponent too large", exp_pos);
        }
        e = std::stoi(digits);
      }
      exps[*index] += e;
      if (exps[*index] > kMaxExponent) throw ParseError("exponent too large", start);
      skip_space();
      if (!at_end() && peek() == '*') take();
      else need_factor = false;
    }
    return {Monomial::from_exponents(exps), coeff};
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) return {};
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return Parser<F>(text, ring).parse();
}

template Polynomial<PrimeField> parse_polynomial(std::string_view, const RingPtr<PrimeField>&);
template Polynomial<RationalField> parse_polynomial(std::string_view,
                                                    const RingPtr<RationalField>&);

}  // namespace catlab
