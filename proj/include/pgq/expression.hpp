// Copyright 2026 The pgquant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PGQ_EXPRESSION_HPP
#define PGQ_EXPRESSION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgq/pgalgebra.hpp"

namespace pgq {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Syntax tree of a paragrassmann expression. Products keep their factor
// order; nothing is reordered before evaluation.
struct Expression {
  enum class Kind { Literal, Generator, Product, Sum, Power, Negate };

  Kind kind = Kind::Literal;
  cplx value{};                     // Literal
  Generator gen{};                  // Generator
  int exponent = 0;                 // Power
  std::vector<Expression> children; // Product, Sum, Power (1), Negate (1)
};

// Grammar (whitespace insensitive):
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := power ('*' power)*
//   power   := unary ('^' uint)?
//   unary   := '-' unary | atom
//   atom    := number ['i'] | 'i' | 'th'[index] | 'bth'[index] | '(' sum ')'
// The generator index is 1-based and may be omitted when modes == 1.
Expression parse(std::string_view text, int modes);

ParaPoly eval(const Expression& e, const Deformation& def, int modes);

// Convenience: eval(parse(text, modes), def, modes).
ParaPoly parse_poly(std::string_view text, const Deformation& def, int modes);

// Canonical ParaPoly in expression syntax; parse_poly reproduces it.
std::string to_expression(const ParaPoly& p);

}  // namespace pgq

#endif
