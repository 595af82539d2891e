#include "polydec/lacunary.hpp"

#include <numeric>

#include "polydec/polyq_algo.hpp"

namespace polydec {

TermList term_list(const PolyQ& f) {
  TermList out;
  for (int e = f.degree(); e >= 0; --e) {
    Rat c = f.coeff(e);
    if (c == 0) continue;
    out.terms.push_back({e, c});
    if (e >= 1) ++out.nonconstant_count;
  }
  return out;
}

ZannierReport zannier_bound_check(const PolyQ& g, const PolyQ& h) {
  if (g.degree() < 1 || h.degree() < 1)
    throw std::invalid_argument("zannier_bound_check: degrees must be >= 1");
  // Excluded shape: a*x^k + b (only top and constant terms).
  bool excluded = true;
  for (int e = 1; e < h.degree(); ++e)
    if (h.coeff(e) != 0) excluded = false;
  if (excluded)
    throw excluded_shape_error("zannier_bound_check: h has shape a*x^k + b");
  PolyQ f = compose(g, h);
  ZannierReport rep;
  rep.deg_f = f.degree();
  rep.l = term_list(f).nonconstant_count;
  rep.deg_h = h.degree();
  rep.bound = 2L * rep.l * (rep.l - 1) * rep.deg_h;
  rep.slack = rep.bound - (rep.deg_f + rep.l - 1);
  rep.holds = rep.slack >= 0;
  return rep;
}

bool hajos_check(const PolyQ& g) {
  if (g.degree() < 1)
    throw std::invalid_argument("hajos_check: degree must be >= 1");
  auto sqf = squarefree_decomposition(g);
  int max_mult = 0;
  for (auto& [factor, mult] : sqf.factors) {
    // Only multiplicities of nonzero roots count; strip a root at 0.
    PolyQ reduced = factor;
    if (reduced.coeff(0) == 0)
      reduced = exact_div(reduced, PolyQ::variable());
    if (reduced.degree() >= 1) max_mult = std::max(max_mult, mult);
  }
  int terms = static_cast<int>(term_list(g).terms.size());
  return terms >= max_mult + 1;
}

namespace {

// Shape check: exactly the expected exponents with nonzero coefficients, in
// descending order; the constant term is unconstrained.
struct SparseShape {
  std::vector<int> exponents;  // descending, all >= 1
  std::vector<Rat> coeffs;
  Rat constant;
};

SparseShape sparse_shape(const PolyQ& f, size_t max_nonconstant,
                         const char* what) {
  TermList tl = term_list(f);
  SparseShape s;
  s.constant = f.coeff(0);
  for (auto& t : tl.terms) {
    if (t.exponent == 0) continue;
    s.exponents.push_back(t.exponent);
    s.coeffs.push_back(t.coeff);
  }
  if (s.exponents.size() != max_nonconstant)
    throw std::invalid_argument(std::string(what) + ": wrong term pattern");
  return s;
}

}  // namespace

std::vector<NormalizedPair> trinomial_decompositions(const PolyQ& f) {
  SparseShape s = sparse_shape(f, 2, "trinomial_decompositions");
  int n1 = s.exponents[0], n2 = s.exponents[1];
  if (n2 < 1 || n1 <= n2)
    throw std::invalid_argument("trinomial_decompositions: bad exponents");
  std::vector<NormalizedPair> out;
  int g12 = std::gcd(n1, n2);
  Rat a1 = s.coeffs[0];
  for (int k = 2; k <= g12 && 2 * k <= n1; ++k) {
    if (g12 % k != 0) continue;
    std::vector<Rat> gc(n1 / k + 1, Rat(0));
    gc[n1 / k] = 1;
    gc[n2 / k] = s.coeffs[1] / a1;
    gc[0] += s.constant / a1;
    NormalizedPair pair{PolyQ::from_coeffs(std::move(gc)),
                        PolyQ::monomial(Rat(1), k)};
    if (compose(pair.outer, pair.inner) != f / a1)
      throw internal_error("trinomial_decompositions: recomposition");
    out.push_back(std::move(pair));
  }
  // The structure theorem says these are all splits; cross-check the engine.
  auto engine = decompose_once(f);
  if (engine.size() != out.size())
    throw internal_error("trinomial_decompositions: engine disagreement");
  for (const auto& p : out)
    if (std::find(engine.begin(), engine.end(), p) == engine.end())
      throw internal_error("trinomial_decompositions: engine disagreement");
  return out;
}

std::vector<NormalizedPair> quadrinomial_decompositions(const PolyQ& f) {
  SparseShape s = sparse_shape(f, 3, "quadrinomial_decompositions");
  int n1 = s.exponents[0], n2 = s.exponents[1], n3 = s.exponents[2];
  if (n3 < 1 || n1 <= n2 || n2 <= n3)
    throw std::invalid_argument("quadrinomial_decompositions: bad exponents");
  if (n1 + n3 <= 2 * n2)
    throw condition_not_met_error(
        "quadrinomial_decompositions: requires n1 + n3 > 2*n2");
  std::vector<NormalizedPair> out;
  int g123 = std::gcd(std::gcd(n1, n2), n3);
  Rat a1 = s.coeffs[0];
  for (int k = 2; k <= g123 && 2 * k <= n1; ++k) {
    if (g123 % k != 0) continue;
    std::vector<Rat> gc(n1 / k + 1, Rat(0));
    gc[n1 / k] = 1;
    gc[n2 / k] = s.coeffs[1] / a1;
    gc[n3 / k] += s.coeffs[2] / a1;
    gc[0] += s.constant / a1;
    NormalizedPair pair{PolyQ::from_coeffs(std::move(gc)),
                        PolyQ::monomial(Rat(1), k)};
    if (compose(pair.outer, pair.inner) != f / a1)
      throw internal_error("quadrinomial_decompositions: recomposition");
    out.push_back(std::move(pair));
  }
  auto engine = decompose_once(f);
  if (engine.size() != out.size())
    throw internal_error("quadrinomial_decompositions: engine disagreement");
  for (const auto& p : out)
    if (std::find(engine.begin(), engine.end(), p) == engine.end())
      throw internal_error("quadrinomial_decompositions: engine disagreement");
  return out;
}

}  // namespace polydec
