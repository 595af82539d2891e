#pragma once

#include <vector>

#include "polydec/polyq_algo.hpp"

namespace polydec {

// Factorization over Q: f = lc * prod factors[i].first^{factors[i].second}
// with monic irreducible factors, ascending by degree then coefficients.
struct RationalFactorization {
  Rat lc;
  std::vector<std::pair<PolyQ, int>> factors;
};

RationalFactorization factor_rational(const PolyQ& f);

// Irreducibility over Q (degree >= 1).  Proved either by a factor-degree
// screen modulo several primes or by a full Zassenhaus factorization.
bool is_irreducible(const PolyQ& f);

}  // namespace polydec
