#pragma once

// Concrete syntax.
//
//   formula := iff
//   iff     := imp [ "<->" imp ]
//   imp     := disj [ "->" imp ]                  right associative
//   disj    := conj { "\/" conj }
//   conj    := unary { "/\" unary }
//   unary   := "~" unary
//            | "forall" VAR "." formula            body extends to the right
//            | "exists" VAR "." formula
//            | "T" "(" term ")"
//            | "(" formula ")"
//            | term "=" term
//   term    := prod { "+" prod }
//   prod    := atom { "*" atom }
//   atom    := "0" | "#" DIGITS | VAR | "S" "(" term ")"
//            | "iter" "(" term "," term ")" | "sub" "(" term "," term "," term ")"
//            | "(" term ")"
//   VAR     := x | y | z | u | v | w | "x" DIGITS
//
// `#n` denotes the canonical (binary) numeral of n. /\, \/, <-> and exists are
// abbreviations and never appear in printed output.

#include <cstddef>
#include <string>
#include <string_view>

#include "truthkernel/syntax.hpp"

namespace tk {

struct ParseError : SyntaxError {
  ParseError(const std::string& what, std::size_t pos);
  std::size_t position;
};

Term parse_term(std::string_view text);
Formula parse_formula(std::string_view text);
VarId parse_var(std::string_view text);

std::string pretty_print(const Term& t);
std::string pretty_print(const Formula& f);

}  // namespace tk
