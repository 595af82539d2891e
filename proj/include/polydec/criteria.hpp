#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polydec/decompose.hpp"
#include "polydec/polyq_algo.hpp"

namespace polydec {

// Critical-value multiplicity data: R(gamma) = Res_x(f', f - gamma), its
// squarefree profile, and delta_max = the largest root multiplicity of R over
// C.  Every inner degree of a decomposition of f is at most delta_max, and
// delta_max <= 1 certifies indecomposability.
struct DeltaReport {
  PolyQ resultant_in_gamma;
  std::vector<std::pair<PolyQ, int>> multiplicity_profile;
  int delta_max = 0;
};

DeltaReport delta_report(const PolyQ& f);

// delta(f, gamma) = deg gcd(f - gamma, f') at a specific rational gamma.
int delta_at(const PolyQ& f, const Rat& gamma);

// gcd(c_(n-1), n) = 1 on the integer-normalized form certifies
// indecomposability; nullopt when the test is silent.
std::optional<bool> criterion_subleading(const PolyQ& f);

// Admissible outer degrees for a decomposition of f, from the subleading
// coefficient tests: gcd(c_(n-2), n) = 1 forces t = 2, gcd(c_(n-3), n) = 1
// forces t in {2, 3}.  Without a conclusive test, all proper divisors.
std::set<int> criterion_outer_degree(const PolyQ& f);

// Irreducibility of f' is sufficient for f to be indecomposable.
std::optional<bool> derivative_irreducible_criterion(const PolyQ& f);

enum class Verdict { INDECOMPOSABLE, DECOMPOSABLE, UNDECIDED_BY_CRITERIA };

struct CriterionOutcome {
  std::string name;
  bool fired = false;
  std::string note;
};

struct IndecomposabilityVerdict {
  Verdict verdict = Verdict::UNDECIDED_BY_CRITERIA;
  std::vector<CriterionOutcome> reasons;
  std::set<int> outer_degrees;
  std::optional<int> delta_max;
};

struct VerdictOptions {
  bool use_derivative_criterion = true;
  bool decide_by_decomposition = true;  // run decompose_once as last resort
};

IndecomposabilityVerdict indecomposability_verdict(const PolyQ& f,
                                                   const VerdictOptions& opts = {});

enum class PhiClass { PHI_IRREDUCIBLE, PHI_REDUCIBLE, UNDECIDED };

// Classifies irreducibility of (f(x)-f(y))/(x-y) over the algebraic closure:
// irreducible iff f is indecomposable and, for odd prime degree, f is not a
// shifted-scaled Dickson polynomial (with parameter 0 when deg f = 3).  The
// n = 3, a != 0 corner is reported UNDECIDED.
PhiClass fried1_phi_classifier(const PolyQ& f);

}  // namespace polydec
