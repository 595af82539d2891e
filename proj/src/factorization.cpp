#include "polydec/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace polydec {

namespace {

// ---- arithmetic in GF(p)[x], p an odd word-sized prime -------------------

using ModPoly = std::vector<uint64_t>;  // coefficient i of x^i, trimmed

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u(uint64_t a, uint64_t p) { return powmod_u(a, p - 2, p); }

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degm(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly mul(const ModPoly& a, const ModPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + (__uint128_t)a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

ModPoly sub(ModPoly a, const ModPoly& b, uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::pair<ModPoly, ModPoly> quotrem(ModPoly a, const ModPoly& b, uint64_t p) {
  if (degm(a) < degm(b)) return {{}, std::move(a)};
  ModPoly q(degm(a) - degm(b) + 1, 0);
  uint64_t inv = invmod_u(b.back(), p);
  while (!a.empty() && degm(a) >= degm(b)) {
    uint64_t c = mulmod(a.back(), inv, p);
    size_t off = a.size() - b.size();
    q[off] = c;
    for (size_t j = 0; j < b.size(); ++j)
      a[off + j] = (a[off + j] + p - mulmod(c, b[j], p)) % p;
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

ModPoly rem(ModPoly a, const ModPoly& b, uint64_t p) {
  return quotrem(std::move(a), b, p).second;
}

ModPoly make_monic(ModPoly f, uint64_t p) {
  if (f.empty() || f.back() == 1) return f;
  uint64_t inv = invmod_u(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, uint64_t p) {
  while (!b.empty()) {
    ModPoly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

ModPoly deriv_mod(const ModPoly& f, uint64_t p) {
  if (f.size() <= 1) return {};
  ModPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], i % p, p);
  trim(d);
  return d;
}

ModPoly powmod_poly(ModPoly base, const Int& e, const ModPoly& mod,
                    uint64_t p) {
  ModPoly r{1};
  base = rem(std::move(base), mod, p);
  Int exp = e;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) r = rem(mul(r, base, p), mod, p);
    base = rem(mul(base, base, p), mod, p);
    exp >>= 1;
  }
  return r;
}

// Bezout: s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> eea_mod(const ModPoly& a, const ModPoly& b,
                                    uint64_t p) {
  ModPoly r0 = a, r1 = b;
  ModPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = quotrem(std::move(r0), r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (degm(r0) != 0) throw internal_error("eea_mod: inputs not coprime");
  uint64_t inv = invmod_u(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  return {std::move(s0), std::move(t0)};
}

ModPoly to_mod(const PolyZ& f, uint64_t p) {
  ModPoly m(f.coeffs().size());
  for (size_t i = 0; i < m.size(); ++i) {
    Int c = f.coeff(static_cast<int>(i)) % Int(static_cast<unsigned long>(p));
    if (c < 0) c += Int(static_cast<unsigned long>(p));
    m[i] = c.get_ui();
  }
  trim(m);
  return m;
}

// Distinct-degree split of squarefree monic f: (d, product of the degree-d
// irreducible factors), ascending d.
std::vector<std::pair<int, ModPoly>> ddf(const ModPoly& f, uint64_t p) {
  std::vector<std::pair<int, ModPoly>> out;
  ModPoly fstar = f;
  ModPoly h{0, 1};  // x
  Int pz(static_cast<unsigned long>(p));
  int d = 0;
  while (degm(fstar) >= 2 * (d + 1)) {
    ++d;
    h = powmod_poly(std::move(h), pz, fstar, p);  // x^(p^d) mod fstar
    ModPoly g = gcd_mod(sub(h, ModPoly{0, 1}, p), fstar, p);
    if (degm(g) > 0) {
      out.emplace_back(d, g);
      fstar = quotrem(std::move(fstar), g, p).first;
      h = rem(std::move(h), fstar, p);
    }
  }
  if (degm(fstar) > 0) out.emplace_back(degm(fstar), fstar);
  return out;
}

// Cantor-Zassenhaus equal-degree split of a product of degree-d irreducibles.
void edf(const ModPoly& f, int d, uint64_t p, std::mt19937_64& rng,
         std::vector<ModPoly>& out) {
  if (degm(f) == d) {
    out.push_back(f);
    return;
  }
  Int exponent;
  {
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), Int(static_cast<unsigned long>(p)).get_mpz_t(),
               d);
    exponent = (pd - 1) / 2;
  }
  while (true) {
    ModPoly a(degm(f));
    std::uniform_int_distribution<uint64_t> dist(0, p - 1);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (a.empty()) continue;
    ModPoly g = gcd_mod(a, f, p);
    if (degm(g) <= 0) {
      ModPoly b = powmod_poly(a, exponent, f, p);
      g = gcd_mod(sub(b, ModPoly{1}, p), f, p);
    }
    if (degm(g) > 0 && degm(g) < degm(f)) {
      edf(g, d, p, rng, out);
      edf(quotrem(ModPoly(f), g, p).first, d, p, rng, out);
      return;
    }
  }
}

// ---- arithmetic in (Z/M)[x] for Hensel lifting ---------------------------

PolyZ reduce_mod(const PolyZ& f, const Int& M) {
  std::vector<Int> c = f.coeffs();
  for (auto& x : c) {
    x %= M;
    if (x < 0) x += M;
  }
  return PolyZ::from_coeffs(std::move(c));
}

PolyZ symmetric_mod(const PolyZ& f, const Int& M) {
  std::vector<Int> c = f.coeffs();
  Int half = M / 2;
  for (auto& x : c) {
    x %= M;
    if (x < 0) x += M;
    if (x > half) x -= M;
  }
  return PolyZ::from_coeffs(std::move(c));
}

PolyZ mul_mod(const PolyZ& a, const PolyZ& b, const Int& M) {
  return reduce_mod(a * b, M);
}

PolyZ sub_mod(const PolyZ& a, const PolyZ& b, const Int& M) {
  return reduce_mod(a - b, M);
}

PolyZ add_mod(const PolyZ& a, const PolyZ& b, const Int& M) {
  return reduce_mod(a + b, M);
}

// Division by a monic b, coefficients mod M.
std::pair<PolyZ, PolyZ> quotrem_monic_mod(const PolyZ& a, const PolyZ& b,
                                          const Int& M) {
  if (b.is_zero() || b.lc() != 1)
    throw internal_error("quotrem_monic_mod: divisor must be monic");
  if (a.degree() < b.degree()) return {PolyZ(), a};
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> quot(a.degree() - b.degree() + 1, Int(0));
  for (int i = a.degree(); i >= b.degree(); --i) {
    Int c = rem[i] % M;
    if (c < 0) c += M;
    quot[i - b.degree()] = c;
    if (c != 0)
      for (int j = 0; j <= b.degree(); ++j)
        rem[i - b.degree() + j] -= c * b.coeff(j);
  }
  PolyZ q = PolyZ::from_coeffs(std::move(quot));
  PolyZ r = reduce_mod(PolyZ::from_coeffs(std::move(rem)), M);
  return {std::move(q), std::move(r)};
}

PolyZ from_mod(const ModPoly& f) {
  std::vector<Int> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Int(f[i]);
  return PolyZ::from_coeffs(std::move(c));
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
// h monic, to the same relations mod m*m.  All polynomials are returned
// reduced mod m*m; g keeps its leading coefficient.
struct HenselPair {
  PolyZ g, h, s, t;
};

HenselPair hensel_step(const PolyZ& f, const HenselPair& in, const Int& m) {
  Int m2 = m * m;
  PolyZ e = sub_mod(f, mul_mod(in.g, in.h, m2), m2);
  auto [q, r] = quotrem_monic_mod(mul_mod(in.s, e, m2), in.h, m2);
  PolyZ g2 = add_mod(in.g, add_mod(mul_mod(in.t, e, m2), mul_mod(q, in.g, m2), m2), m2);
  PolyZ h2 = add_mod(in.h, r, m2);
  PolyZ b = sub_mod(add_mod(mul_mod(in.s, g2, m2), mul_mod(in.t, h2, m2), m2),
                    PolyZ(Int(1)), m2);
  auto [c, d] = quotrem_monic_mod(mul_mod(in.s, b, m2), h2, m2);
  PolyZ s2 = sub_mod(in.s, d, m2);
  PolyZ t2 = sub_mod(in.t, add_mod(mul_mod(in.t, b, m2), mul_mod(c, g2, m2), m2), m2);
  return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// Lift the factorization F = prod(factors) (mod p) to mod M (a power of p),
// F monic, all factors monic.  Returns the lifted factors reduced mod M.
void hensel_lift(const PolyZ& F, const std::vector<ModPoly>& factors,
                 size_t lo, size_t hi, uint64_t p, const Int& M,
                 std::vector<PolyZ>& out) {
  if (hi - lo == 1) {
    out.push_back(reduce_mod(F, M));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  ModPoly g0{1}, h0{1};
  for (size_t i = lo; i < mid; ++i) g0 = mul(g0, factors[i], p);
  for (size_t i = mid; i < hi; ++i) h0 = mul(h0, factors[i], p);
  auto [s0, t0] = eea_mod(g0, h0, p);
  HenselPair cur{from_mod(g0), from_mod(h0), from_mod(s0), from_mod(t0)};
  Int m(static_cast<unsigned long>(p));
  while (m < M) {
    cur = hensel_step(F, cur, m);
    m = m * m;
  }
  PolyZ G = reduce_mod(cur.g, M);
  PolyZ H = reduce_mod(cur.h, M);
  if (reduce_mod(F - G * H, M) != PolyZ())
    throw internal_error("hensel_lift: lifted product mismatch");
  hensel_lift(G, factors, lo, mid, p, M, out);
  hensel_lift(H, factors, mid, hi, p, M, out);
}

// ---- Zassenhaus over Z ----------------------------------------------------

const uint64_t kPrimes[] = {1000000007ULL, 1000000009ULL, 1000000021ULL,
                            1000000033ULL, 1000000087ULL, 1000000093ULL,
                            1000000097ULL, 1000000103ULL};

// Exact division over Z by a monic divisor; nullopt if the remainder is
// nonzero.
std::optional<PolyZ> exact_div_monic(const PolyZ& a, const PolyZ& b) {
  if (b.is_zero() || b.lc() != 1) return std::nullopt;
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> quot(a.degree() - b.degree() + 1, Int(0));
  for (int i = a.degree(); i >= b.degree(); --i) {
    Int c = rem[i];
    quot[i - b.degree()] = c;
    if (c != 0)
      for (int j = 0; j <= b.degree(); ++j)
        rem[i - b.degree() + j] -= c * b.coeff(j);
  }
  if (!PolyZ::from_coeffs(std::move(rem)).is_zero()) return std::nullopt;
  return PolyZ::from_coeffs(std::move(quot));
}

// Mignotte-style bound: divisors of monic F have coefficients bounded by
// 2^deg(F) * ||F||_2.
Int factor_bound(const PolyZ& F) {
  Int norm2 = 0;
  for (const Int& c : F.coeffs()) norm2 += c * c;
  Int root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Int bound = root;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), F.degree());
  return bound;
}

// Factor degrees realizable mod p (subset sums of the DDF degree multiset).
uint64_t degree_mask(const PolyZ& f, uint64_t p) {
  ModPoly fp = make_monic(to_mod(f, p), p);
  std::vector<int> degs;
  for (auto& [d, block] : ddf(fp, p)) {
    int count = degm(block) / d;
    for (int i = 0; i < count; ++i) degs.push_back(d);
  }
  uint64_t mask = 1;
  for (int d : degs) mask |= mask << d;
  return mask;
}

// Full factorization of a primitive squarefree F in Z[x], monic.  Returns
// monic factors over Z.
std::vector<PolyZ> zassenhaus_monic(const PolyZ& F) {
  int n = F.degree();
  if (n <= 1) return {F};
  // Choose a prime where F stays squarefree.
  uint64_t p = 0;
  ModPoly fp;
  for (uint64_t cand : kPrimes) {
    ModPoly m = to_mod(F, cand);
    if (degm(m) != n) continue;
    if (degm(gcd_mod(m, deriv_mod(m, cand), cand)) == 0) {
      p = cand;
      fp = std::move(m);
      break;
    }
  }
  if (p == 0) throw internal_error("zassenhaus: no good prime found");

  std::mt19937_64 rng(0x5eedf00dULL);
  std::vector<ModPoly> modular;
  for (auto& [d, block] : ddf(fp, p)) edf(block, d, p, rng, modular);
  if (modular.size() == 1) return {F};

  Int bound = factor_bound(F) * 2 + 1;
  Int M(static_cast<unsigned long>(p));
  while (M < bound) M *= Int(static_cast<unsigned long>(p));
  std::vector<PolyZ> lifted;
  hensel_lift(F, modular, 0, modular.size(), p, M, lifted);

  // Subset recombination.
  std::vector<PolyZ> result;
  PolyZ current = F;
  std::vector<PolyZ> pool = std::move(lifted);
  size_t take = 1;
  long budget = 1 << 22;
  while (2 * take <= pool.size()) {
    // Iterate subsets of size `take` via index combinations.
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    bool found = false;
    while (true) {
      if (--budget < 0)
        throw internal_error("zassenhaus: recombination budget exceeded");
      PolyZ cand(Int(1));
      for (size_t i : idx) cand = reduce_mod(cand * pool[i], M);
      cand = symmetric_mod(cand, M);
      if (auto quot = exact_div_monic(current, cand)) {
        result.push_back(cand);
        current = std::move(*quot);
        std::vector<PolyZ> next_pool;
        for (size_t i = 0, j = 0; i < pool.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          next_pool.push_back(pool[i]);
        }
        pool = std::move(next_pool);
        found = true;
        break;
      }
      // Next index combination of the same size.
      size_t k = take;
      while (k > 0 && idx[k - 1] == pool.size() - (take - k) - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t i = k; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++take;
  }
  if (current.degree() > 0) result.push_back(current);
  return result;
}

// Irreducibility screen: intersect realizable factor degrees over several
// primes; conclusive when only the trivial degrees remain.
bool screen_irreducible(const PolyZ& f) {
  int n = f.degree();
  if (n <= 1) return true;
  uint64_t mask = ~0ULL;
  int good = 0;
  for (uint64_t p : kPrimes) {
    ModPoly m = to_mod(f, p);
    if (degm(m) != n) continue;  // p divides lc
    if (degm(gcd_mod(m, deriv_mod(m, p), p)) != 0) continue;
    mask &= degree_mask(f, p);
    if (++good == 4) break;
  }
  if (good == 0) return false;
  uint64_t trivial = 1ULL | (1ULL << n);
  return (mask & ~trivial) == 0;
}

// Squarefree primitive integer polynomial with positive leading coefficient:
// monic rational irreducible factors.
std::vector<PolyQ> factor_squarefree_z(const PolyZ& f) {
  int n = f.degree();
  if (n == 1) return {monic(to_rational(f))};
  if (screen_irreducible(f)) return {monic(to_rational(f))};
  // Monicize: F(x) = l^(n-1) f(x/l) is monic over Z; map factors back.
  Int l = f.lc();
  std::vector<Int> fc(n + 1);
  Int power = 1;
  for (int i = n; i >= 0; --i) {
    fc[i] = f.coeff(i) * power;
    if (i > 0) power *= l;
  }
  PolyZ F = PolyZ::from_coeffs(std::move(fc));
  std::vector<PolyQ> out;
  for (const PolyZ& gF : zassenhaus_monic(F)) {
    // Undo the substitution: g(x) = gF(l*x), then normalize monic over Q.
    std::vector<Rat> gc(gF.degree() + 1);
    Rat lp = 1;
    for (int i = 0; i <= gF.degree(); ++i) {
      gc[i] = Rat(gF.coeff(i)) * lp;
      lp *= Rat(l);
    }
    out.push_back(monic(PolyQ::from_coeffs(std::move(gc))));
  }
  return out;
}

}  // namespace

RationalFactorization factor_rational(const PolyQ& f) {
  if (f.is_zero())
    throw std::invalid_argument("factor_rational: zero polynomial");
  RationalFactorization out;
  out.lc = f.lc();
  if (f.degree() == 0) return out;
  auto sqf = squarefree_decomposition(f);
  for (auto& [part, mult] : sqf.factors) {
    PolyZ z = integer_image(part).poly;
    for (PolyQ& irr : factor_squarefree_z(z))
      out.factors.emplace_back(std::move(irr), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.coeffs() < b.first.coeffs();
            });
  // Recomposition check.
  PolyQ check(out.lc);
  for (auto& [fac, mult] : out.factors) check = check * poly_pow(fac, mult);
  if (check != f) throw internal_error("factor_rational: product mismatch");
  return out;
}

bool is_irreducible(const PolyQ& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("is_irreducible: degree must be >= 1");
  if (f.degree() == 1) return true;
  auto fact = factor_rational(f);
  return fact.factors.size() == 1 && fact.factors[0].second == 1;
}

}  // namespace polydec
