#include "polydec/criteria.hpp"

#include "polydec/dickson.hpp"
#include "polydec/factorization.hpp"

namespace polydec {

DeltaReport delta_report(const PolyQ& f) {
  if (f.degree() < 2)
    throw std::invalid_argument("delta_report: deg f must be >= 2");
  DeltaReport out;
  out.resultant_in_gamma = critical_resultant(f);
  auto sqf = squarefree_decomposition(out.resultant_in_gamma);
  out.multiplicity_profile = sqf.factors;
  for (auto& [factor, mult] : out.multiplicity_profile)
    out.delta_max = std::max(out.delta_max, mult);
  return out;
}

int delta_at(const PolyQ& f, const Rat& gamma) {
  return poly_gcd(f - PolyQ(gamma), derivative(f)).degree();
}

namespace {

// Monic integer model of f used by the coefficient criteria: for
// ft = c_n x^n + ... with integer coefficients, c_n^(n-1) ft(x/c_n) is monic
// with coefficients C_(n-j) = c_(n-j) c_n^(j-1).
PolyZ monic_integer_model(const PolyQ& f) {
  PolyZ z = integer_image(f).poly;
  int n = z.degree();
  std::vector<Int> c(n + 1);
  Int power = 1;  // c_n^(j-1) for j = n - i
  c[n] = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[i] = z.coeff(i) * power;
    power *= z.lc();
  }
  return PolyZ::from_coeffs(std::move(c));
}

Int gcd_with_degree(const Int& c, int n) {
  Int g;
  Int nn(n);
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), nn.get_mpz_t());
  return g;
}

std::set<int> proper_outer_degrees(int n) {
  std::set<int> out;
  for (int t = 2; t * 2 <= n; ++t)
    if (n % t == 0) out.insert(t);
  return out;
}

}  // namespace

std::optional<bool> criterion_subleading(const PolyQ& f) {
  if (f.degree() < 2)
    throw std::invalid_argument("criterion_subleading: deg f must be >= 2");
  PolyZ z = integer_image(f).poly;
  int n = z.degree();
  if (gcd_with_degree(z.coeff(n - 1), n) == 1) return true;
  return std::nullopt;
}

std::set<int> criterion_outer_degree(const PolyQ& f) {
  int n = f.degree();
  if (n < 4)
    throw std::invalid_argument("criterion_outer_degree: deg f must be >= 4");
  std::set<int> all = proper_outer_degrees(n);
  PolyZ model = monic_integer_model(f);
  if (gcd_with_degree(model.coeff(n - 2), n) == 1) {
    std::set<int> constrained;
    if (all.count(2)) constrained.insert(2);
    return constrained;
  }
  if (gcd_with_degree(model.coeff(n - 3), n) == 1) {
    std::set<int> constrained;
    for (int t : {2, 3})
      if (all.count(t)) constrained.insert(t);
    return constrained;
  }
  return all;
}

std::optional<bool> derivative_irreducible_criterion(const PolyQ& f) {
  if (f.degree() < 2)
    throw std::invalid_argument(
        "derivative_irreducible_criterion: deg f must be >= 2");
  if (f.degree() == 2) return true;  // f' linear
  if (is_irreducible(derivative(f))) return true;
  return std::nullopt;
}

IndecomposabilityVerdict indecomposability_verdict(const PolyQ& f,
                                                   const VerdictOptions& opts) {
  if (f.degree() < 2)
    throw std::invalid_argument(
        "indecomposability_verdict: deg f must be >= 2");
  IndecomposabilityVerdict out;
  int n = f.degree();
  std::set<int> proper = proper_outer_degrees(n);
  if (proper.empty()) {
    out.reasons.push_back({"prime_degree", true, "degree has no proper divisor"});
    out.verdict = Verdict::INDECOMPOSABLE;
    return out;
  }
  out.outer_degrees = criterion_outer_degree(f);
  if (out.outer_degrees.empty()) {
    out.reasons.push_back({"outer_degree_constraints", true,
                           "coefficient criteria exclude every divisor"});
    out.verdict = Verdict::INDECOMPOSABLE;
    return out;
  }

  auto sub = criterion_subleading(f);
  out.reasons.push_back(
      {"subleading_gcd", sub.has_value(),
       sub ? "gcd(c_(n-1), n) = 1" : "gcd(c_(n-1), n) > 1: no verdict"});

  auto delta = delta_report(f);
  out.delta_max = delta.delta_max;
  bool delta_fired = delta.delta_max <= 1;
  out.reasons.push_back({"delta_max", delta_fired,
                         "delta_max = " + std::to_string(delta.delta_max)});

  std::optional<bool> deriv;
  if (opts.use_derivative_criterion) {
    deriv = derivative_irreducible_criterion(f);
    out.reasons.push_back({"derivative_irreducible", deriv.has_value(),
                           deriv ? "f' is irreducible"
                                 : "f' is reducible: no verdict"});
  }

  if (sub || delta_fired || (deriv && *deriv)) {
    out.verdict = Verdict::INDECOMPOSABLE;
    return out;
  }

  if (opts.decide_by_decomposition) {
    bool decomposable = !decompose_once(f).empty();
    out.reasons.push_back({"exhaustive_decomposition", true,
                           decomposable ? "a decomposition exists"
                                        : "no divisor admits a split"});
    out.verdict =
        decomposable ? Verdict::DECOMPOSABLE : Verdict::INDECOMPOSABLE;
  }
  return out;
}

PhiClass fried1_phi_classifier(const PolyQ& f) {
  int n = f.degree();
  if (n < 2)
    throw std::invalid_argument("fried1_phi_classifier: deg f must be >= 2");
  bool decomposable = !decompose_once(f).empty();
  if (decomposable) return PhiClass::PHI_REDUCIBLE;

  auto is_odd_prime = [](int m) {
    if (m < 3 || m % 2 == 0) return false;
    for (int d = 3; d * d <= m; d += 2)
      if (m % d == 0) return false;
    return true;
  };
  if (!is_odd_prime(n)) return PhiClass::PHI_IRREDUCIBLE;

  auto form = recognize_dickson(f);
  if (!form) return PhiClass::PHI_IRREDUCIBLE;
  if (n == 3) {
    // Every cubic carries a Dickson form; only the parameter decides, and the
    // a != 0 reading is ambiguous.
    if (form->a == 0) return PhiClass::PHI_REDUCIBLE;
    return PhiClass::UNDECIDED;
  }
  return PhiClass::PHI_REDUCIBLE;
}

}  // namespace polydec
