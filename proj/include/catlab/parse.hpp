#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "catlab/polynomial.hpp"

namespace catlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// poly   := ['+'|'-'] term (('+'|'-') term)*
// term   := coeff | [coeff '*'] factor ('*' factor)*
// factor := VAR ['^' INT]
// coeff  := INT ['/' INT]        (the '/' form is accepted for any field)
// Whitespace is ignored. Variables must belong to the ring.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring);

}  // namespace catlab
