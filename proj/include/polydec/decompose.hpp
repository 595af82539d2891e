#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polydec/polynomial.hpp"

namespace polydec {

// Canonical two-step split: outer monic, inner monic with inner(0) = 0, both
// of degree >= 2.  Within an equivalence class of decompositions of a monic
// polynomial this representative is unique, so pair equality decides
// equivalence.
struct NormalizedPair {
  PolyQ outer;
  PolyQ inner;

  friend bool operator==(const NormalizedPair& a, const NormalizedPair& b) {
    return a.outer == b.outer && a.inner == b.inner;
  }
};

// Ordered chain of components, outermost first; composing the chain
// reproduces the decomposed polynomial exactly.
struct Decomposition {
  std::vector<PolyQ> components;
};

// Degree-one links between two equivalent chains.
struct EquivalenceWitness {
  std::vector<LinearQ> linears;
};

struct NormalizeResult {
  NormalizedPair pair;
  LinearQ outer_fix;  // scaling absorbed out of the outer component
  LinearQ inner_fix;  // linear absorbed out of the inner component
};

// Rewrites g(h) with the inner made monic and zero at 0:
//   g == outer_fix . pair.outer . inner_fix^(-1),  h == inner_fix . pair.inner,
// so pair composes to g(h) / lc(g(h)).  Linear inputs are an error.
NormalizeResult normalize(const PolyQ& g, const PolyQ& h);

// The unique candidate monic right component of degree k (inner(0) = 0),
// obtained by solving the leading-coefficient system top-down; returns the
// pair iff the h-adic digits of f are all constant.  f must be monic and k a
// proper divisor of deg f with 2 <= k <= deg f / 2.
std::optional<NormalizedPair> right_component_candidate(const PolyQ& f, int k);

// One pair per inner degree admitting a split, canonically normalized,
// ascending in deg(inner).  Empty iff f is indecomposable (over Q, and hence
// over C).  The pairs compose to f / lc(f).
std::vector<NormalizedPair> decompose_once(const PolyQ& f);

struct CompleteDecompositionOptions {
  int node_cap = 10000;
};

// All maximal chains of indecomposables, deduplicated up to equivalence
// (canonical interior components make distinct chains inequivalent).  Chains
// compose to f exactly; every chain has the same length and degree multiset,
// which is asserted.
std::vector<Decomposition> complete_decompositions(
    const PolyQ& f, const CompleteDecompositionOptions& opts = {});

// Witness linears linking two chains of the same polynomial, or nullopt.
std::optional<EquivalenceWitness> equivalent(const Decomposition& d1,
                                             const Decomposition& d2);

// Ritt swap for coprime-degree factors: if (g, h) matches the power pattern
// or the Dickson pattern up to linears, returns (g', h') with
// g(h) = g'(h') and {deg g', deg h'} = {deg h, deg g}; otherwise nullopt.
std::optional<std::pair<PolyQ, PolyQ>> ritt_swap(const PolyQ& g,
                                                 const PolyQ& h);

// p = scale * (x + shift)^deg + offset, if p is a linear conjugate of a pure
// power.  On failure, obstruction_exponent is the first nonvanishing middle
// coefficient slot of the centered polynomial.
struct ConjugatePower {
  Rat scale;
  Rat shift;
  Rat offset;
};
struct ConjugatePowerTest {
  std::optional<ConjugatePower> form;
  int obstruction_exponent = -1;
  Rat obstruction_value;
};
ConjugatePowerTest conjugate_power_test(const PolyQ& p);

}  // namespace polydec
