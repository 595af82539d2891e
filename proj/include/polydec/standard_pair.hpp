#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polydec/decompose.hpp"

namespace polydec {

// One of the five tabulated pair shapes, up to switching:
//   1: (x^m, a x^r p(x)^m)            r < m, gcd(r, m) = 1, r + deg p > 0
//   2: (x^2, (a x^2 + b) p(x)^2)
//   3: (D_m(x, a^n), D_n(x, a^m))     gcd(m, n) = 1
//   4: (a^(-m/2) D_m(x,a), -b^(-n/2) D_n(x,b))   gcd(m, n) = 2
//   5: ((a x^2 - 1)^3, 3x^4 - 4x^3)
// a, b are nonzero rationals; p may be constant.
struct StandardPair {
  int kind = 0;
  bool switched = false;
  long m = 0, n = 0, r = 0;
  Rat a, b;
  PolyQ p;

  // The two polynomials in the order (first, second) after switching.
  std::pair<PolyQ, PolyQ> instantiate() const;
};

// Match of (F, G) against a standard pair up to a shared left linear:
//   e . F = first . lambda   and   e . G = second . mu.
struct PairMatch {
  StandardPair pair;
  LinearQ e;
  LinearQ lambda;
  LinearQ mu;
};

// Why a kind cannot match; lhs/rhs carry both sides of the violated identity
// in canonical text.
struct KindElimination {
  int kind = 0;
  std::string identity;
  std::string lhs, rhs;
};

// Exact decision: a verified PairMatch for some kind, or one elimination
// record per kind.  F and G must be nonconstant.
std::optional<PairMatch> match_standard_pair(
    const PolyQ& F, const PolyQ& G, std::vector<KindElimination>* eliminations);

// All linear sigma with phi(sigma(x)) = phi(x); always contains the identity,
// plus at most one reflection.
std::vector<LinearQ> symmetry_linears(const PolyQ& phi);

}  // namespace polydec
