#pragma once

#include <string>

#include "polydec/polynomial.hpp"

namespace polydec {

// Syntax error with a 1-based column into the input text.
struct parse_error : input_error {
  parse_error(const std::string& msg, int col)
      : input_error(msg + " (column " + std::to_string(col) + ")"),
        column(col) {}
  int column;
};

struct ParseOptions {
  long exponent_cap = 1000000;
};

// Grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*'? factor)*
//   factor   := base ('^' uint)?
//   base     := rational | 'x' | '(' expr ')'
//             | 'binomial(' expr ',' uint ')'
//             | 'risingfactorial(' expr ',' uint ')'
//   rational := int ('/' uint)?
// Whitespace-insensitive; '*' is optional between juxtaposed factors.
PolyQ parse(const std::string& text, const ParseOptions& opts = {});

// Deterministic canonical form: descending exponents, explicit signs,
// reduced fractions.  parse(canonical_text(f)) == f.
std::string canonical_text(const PolyQ& f);

// binomial(E, k) = E(E-1)...(E-k+1)/k!
PolyQ binomial_poly(const PolyQ& e, unsigned long k);
// risingfactorial(E, k) = E(E+1)...(E+k-1)
PolyQ rising_factorial_poly(const PolyQ& e, unsigned long k);

}  // namespace polydec
