#pragma once

#include <optional>

#include "polydec/polynomial.hpp"

namespace polydec {

// m-th Dickson polynomial with parameter a, from the recurrence
//   D_0 = 2, D_1 = x, D_m = x*D_{m-1} - a*D_{m-2}.
// The result is cross-checked against the closed-form coefficients; a
// mismatch is an internal_error.
PolyQ dickson(unsigned m, const Rat& a);

// Closed form: D_m(x,a) = sum_j m/(m-j) C(m-j,j) (-a)^j x^(m-2j).
PolyQ dickson_closed_form(unsigned m, const Rat& a);

// Exact Laurent identity D_m(z + a/z, a) * z^m == z^(2m) + a^m, checked as
// polynomials in z.  True for all valid inputs; exists as a regression guard.
bool verify_functional_equation(unsigned m, const Rat& a);

// f = alpha * D_m(x + b, a) + c.  recompose() reproduces the source exactly.
struct DicksonForm {
  Rat alpha;
  Rat b;
  Rat a;
  Rat c;
  unsigned m;

  PolyQ recompose() const;
};

// Detailed recognition result; on failure, mismatch_exponent names the first
// coefficient slot (after centering) that is inconsistent with a Dickson
// polynomial, with the offending value.
struct DicksonRecognition {
  std::optional<DicksonForm> form;
  int mismatch_exponent = -1;
  Rat found;
  Rat expected;
};

DicksonRecognition recognize_dickson_detail(const PolyQ& f);
std::optional<DicksonForm> recognize_dickson(const PolyQ& f);

}  // namespace polydec
