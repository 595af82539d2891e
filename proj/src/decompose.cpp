#include "polydec/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polydec/dickson.hpp"

namespace polydec {

NormalizeResult normalize(const PolyQ& g, const PolyQ& h) {
  if (g.degree() < 2 || h.degree() < 2)
    throw std::invalid_argument("normalize: both degrees must be >= 2");
  Rat a = h.lc();
  Rat b = h.coeff(0);
  LinearQ mu(a, b);
  PolyQ inner = compose(mu.invert().to_poly(), h);  // (h - b)/a
  PolyQ mid = compose(g, mu);
  Rat c = mid.lc();
  NormalizeResult out;
  out.pair = NormalizedPair{mid / c, inner};
  out.outer_fix = LinearQ(c, Rat(0));
  out.inner_fix = mu;
  return out;
}

std::optional<NormalizedPair> right_component_candidate(const PolyQ& f,
                                                        int k) {
  int n = f.degree();
  if (n < 2 || f.lc() != 1)
    throw std::invalid_argument("right_component_candidate: f must be monic");
  if (k < 2 || 2 * k > n || n % k != 0)
    throw std::invalid_argument(
        "right_component_candidate: k must be a proper divisor of deg f");
  int t = n / k;
  // Solve the triangular system: the x^(n-j) coefficient of h^t is
  // t*b_(k-j) plus terms in the already-determined higher coefficients.
  std::vector<Rat> hc(k + 1, Rat(0));
  hc[k] = 1;
  for (int j = 1; j <= k - 1; ++j) {
    PolyQ partial = poly_pow(PolyQ::from_coeffs(std::vector<Rat>(hc)), t);
    Rat delta = f.coeff(n - j) - partial.coeff(n - j);
    hc[k - j] = delta / Rat(t);
  }
  PolyQ h = PolyQ::from_coeffs(std::move(hc));
  auto digits = h_adic_expansion(f, h);
  std::vector<Rat> gc;
  gc.reserve(digits.size());
  for (const PolyQ& d : digits) {
    if (d.degree() > 0) return std::nullopt;
    gc.push_back(d.coeff(0));
  }
  PolyQ g = PolyQ::from_coeffs(std::move(gc));
  return NormalizedPair{g, h};
}

std::vector<NormalizedPair> decompose_once(const PolyQ& f) {
  if (f.degree() < 2)
    throw std::invalid_argument("decompose_once: deg f must be >= 2");
  PolyQ fm = monic(f);
  int n = fm.degree();
  std::vector<NormalizedPair> out;
  for (int k = 2; k * 2 <= n; ++k) {
    if (n % k != 0) continue;
    if (auto pair = right_component_candidate(fm, k)) out.push_back(*pair);
  }
  return out;
}

namespace {

struct ChainContext {
  int node_cap;
  int nodes = 0;
  std::map<std::vector<Rat>, std::vector<std::vector<PolyQ>>> memo;
};

// Chains over a monic polynomial, rightmost component chosen first among
// indecomposable canonical right components.
std::vector<std::vector<PolyQ>> chains_monic(const PolyQ& f,
                                             ChainContext& ctx) {
  if (++ctx.nodes > ctx.node_cap)
    throw input_error("complete_decompositions: node cap exceeded");
  auto it = ctx.memo.find(f.coeffs());
  if (it != ctx.memo.end()) return it->second;
  std::vector<std::vector<PolyQ>> result;
  auto splits = decompose_once(f);
  for (const NormalizedPair& p : splits) {
    if (p.inner.degree() >= 4 && !decompose_once(p.inner).empty())
      continue;  // rightmost component must be indecomposable
    for (auto chain : chains_monic(p.outer, ctx)) {
      chain.push_back(p.inner);
      result.push_back(std::move(chain));
    }
  }
  if (result.empty()) result.push_back({f});
  ctx.memo.emplace(f.coeffs(), result);
  return result;
}

std::vector<int> degree_multiset(const std::vector<PolyQ>& chain) {
  std::vector<int> d;
  d.reserve(chain.size());
  for (const PolyQ& c : chain) d.push_back(c.degree());
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::vector<Decomposition> complete_decompositions(
    const PolyQ& f, const CompleteDecompositionOptions& opts) {
  if (f.degree() < 2)
    throw std::invalid_argument("complete_decompositions: deg f must be >= 2");
  ChainContext ctx{opts.node_cap};
  auto chains = chains_monic(monic(f), ctx);
  std::vector<Decomposition> out;
  out.reserve(chains.size());
  Rat c = f.lc();
  for (auto& chain : chains) {
    Decomposition d;
    d.components = std::move(chain);
    if (c != 1) d.components.front() = d.components.front() * c;
    PolyQ check(Rat(1));
    check = d.components.front();
    for (size_t i = 1; i < d.components.size(); ++i)
      check = compose(check, d.components[i]);
    if (check != f)
      throw internal_error("complete_decompositions: chain recomposition");
    out.push_back(std::move(d));
  }
  // Ritt's first theorem: equal length and degree multiset across chains.
  for (const Decomposition& d : out) {
    if (d.components.size() != out.front().components.size() ||
        degree_multiset(d.components) !=
            degree_multiset(out.front().components))
      throw internal_error("complete_decompositions: chain invariants");
  }
  return out;
}

namespace {

// Linear l with target == l . base, i.e. target = slope*base + intercept.
std::optional<LinearQ> left_linear_link(const PolyQ& target,
                                        const PolyQ& base) {
  if (target.degree() != base.degree() || base.is_zero()) return std::nullopt;
  Rat slope = target.lc() / base.lc();
  PolyQ diff = target - base * slope;
  if (diff.degree() > 0) return std::nullopt;
  return LinearQ(slope, diff.coeff(0));
}

}  // namespace

std::optional<EquivalenceWitness> equivalent(const Decomposition& d1,
                                             const Decomposition& d2) {
  const auto& f = d1.components;
  const auto& g = d2.components;
  if (f.empty() || g.empty())
    throw std::invalid_argument("equivalent: empty chain");
  auto compose_chain = [](const std::vector<PolyQ>& c) {
    PolyQ acc = c.front();
    for (size_t i = 1; i < c.size(); ++i) acc = compose(acc, c[i]);
    return acc;
  };
  if (compose_chain(f) != compose_chain(g))
    throw std::invalid_argument("equivalent: chains compose differently");
  if (f.size() != g.size()) return std::nullopt;
  size_t m = f.size();
  if (m == 1) {
    if (f[0] == g[0]) return EquivalenceWitness{};
    return std::nullopt;
  }
  // Solve g_m = mu_(m-1)^(-1) . f_m, then walk left:
  // g_i = mu_(i-1)^(-1) . f_i . mu_i, and finally g_1 = f_1 . mu_1.
  std::vector<LinearQ> mus(m - 1);
  auto link = left_linear_link(f[m - 1], g[m - 1]);
  if (!link) return std::nullopt;
  mus[m - 2] = *link;
  for (size_t i = m - 2; i >= 1; --i) {
    PolyQ lhs = compose(f[i], mus[i].to_poly());
    auto l = left_linear_link(lhs, g[i]);
    if (!l) return std::nullopt;
    mus[i - 1] = *l;
  }
  if (compose(f[0], mus[0].to_poly()) != g[0]) return std::nullopt;
  return EquivalenceWitness{mus};
}

ConjugatePowerTest conjugate_power_test(const PolyQ& p) {
  ConjugatePowerTest out;
  int d = p.degree();
  if (d < 1) return out;
  Rat scale = p.lc();
  PolyQ g = p / scale;
  Rat shift = d >= 2 ? Rat(g.coeff(d - 1) / Rat(d)) : Rat(0);
  PolyQ w = compose(g, LinearQ(Rat(1), -shift));
  for (int e = d - 1; e >= 1; --e) {
    if (w.coeff(e) != 0) {
      out.obstruction_exponent = e;
      out.obstruction_value = w.coeff(e);
      return out;
    }
  }
  out.form = ConjugatePower{scale, shift, scale * w.coeff(0)};
  return out;
}

std::optional<std::pair<PolyQ, PolyQ>> ritt_swap(const PolyQ& g,
                                                 const PolyQ& h) {
  if (g.degree() < 2 || h.degree() < 2)
    throw std::invalid_argument("ritt_swap: both degrees must be >= 2");
  if (std::gcd(g.degree(), h.degree()) != 1)
    throw std::invalid_argument("ritt_swap: degrees must be coprime");
  bool eligible = conjugate_power_test(h).form.has_value() ||
                  conjugate_power_test(g).form.has_value() ||
                  (recognize_dickson(h).has_value() &&
                   recognize_dickson(g).has_value());
  PolyQ f = compose(g, h);
  Rat c = f.lc();
  auto rc = right_component_candidate(f / c, g.degree());
  if (!rc) return std::nullopt;
  if (!eligible)
    throw internal_error(
        "ritt_swap: swap exists but neither pattern matched");
  PolyQ outer = rc->outer * c;
  if (compose(outer, rc->inner) != f)
    throw internal_error("ritt_swap: swapped pair recomposition");
  return std::make_pair(outer, rc->inner);
}

}  // namespace polydec
