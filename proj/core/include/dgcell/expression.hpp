#pragma once

// Parser for noncommutative polynomial expressions.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := [rational ['*']] factor (['*'] factor)*  |  rational
//   factor   := ident ['^' posint]
//   rational := integer ['/' posint]
//
// Juxtaposition and '*' both denote the noncommutative product and
// whitespace is insignificant. A bare rational such as "1" is a scalar
// multiple of the unit.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dgcell/free_algebra.hpp"

namespace dgcell {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Polynomial parse_expression(std::string_view text, const SignaturePtr& sig);

}  // namespace dgcell
