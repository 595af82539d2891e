#pragma once

#include <vector>

#include "polydec/decompose.hpp"

namespace polydec {

// Sparse view over a dense polynomial: nonzero terms by descending exponent.
struct TermList {
  struct Term {
    int exponent;
    Rat coeff;
  };
  std::vector<Term> terms;
  int nonconstant_count = 0;  // l: terms with exponent >= 1
};

TermList term_list(const PolyQ& f);

struct excluded_shape_error : input_error {
  using input_error::input_error;
};
struct condition_not_met_error : input_error {
  using input_error::input_error;
};

// Checks deg f + l - 1 <= 2l(l-1) deg h for f = g(h), where l counts the
// nonconstant terms of f.  h of shape a*x^k + b is excluded by precondition.
struct ZannierReport {
  int deg_f = 0;
  int l = 0;
  int deg_h = 0;
  long bound = 0;  // 2l(l-1) deg h
  long slack = 0;  // bound - (deg f + l - 1)
  bool holds = false;
};
ZannierReport zannier_bound_check(const PolyQ& g, const PolyQ& h);

// A nonzero root of multiplicity m forces at least m+1 terms; true always
// (regression property).
bool hajos_check(const PolyQ& g);

// Complete enumeration of two-step splits of a trinomial
// a1 x^n1 + a2 x^n2 + a3 (a1 a2 != 0, n1 > n2 >= 1): the inner component is
// always a pure power x^k, k | gcd(n1, n2).  Pairs are normalized and agree
// with decompose_once.
std::vector<NormalizedPair> trinomial_decompositions(const PolyQ& f);

// Same for quadrinomials a1 x^n1 + a2 x^n2 + a3 x^n3 + a4 under the exponent
// condition n1 + n3 > 2 n2; throws condition_not_met_error otherwise.
std::vector<NormalizedPair> quadrinomial_decompositions(const PolyQ& f);

}  // namespace polydec
