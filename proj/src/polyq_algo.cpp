#include "polydec/polyq_algo.hpp"

#include <algorithm>

namespace polydec {

Int content(const PolyZ& f) {
  Int g = 0;
  for (const Int& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PolyZ primitive_part(const PolyZ& f) {
  if (f.is_zero()) return f;
  Int g = content(f);
  if (sgn(f.lc()) < 0) g = -g;
  std::vector<Int> c = f.coeffs();
  for (auto& x : c) x /= g;
  return PolyZ::from_coeffs(std::move(c));
}

IntegerImage integer_image(const PolyQ& f) {
  IntegerImage im;
  if (f.is_zero()) {
    im.num = 0;
    return im;
  }
  Int den = 1;
  for (const Rat& c : f.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> zc;
  zc.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) {
    Rat scaled = c * den;
    zc.push_back(scaled.get_num());
  }
  PolyZ z = PolyZ::from_coeffs(std::move(zc));
  Int cont = content(z);
  if (sgn(z.lc()) < 0) cont = -cont;
  std::vector<Int> pc = z.coeffs();
  for (auto& x : pc) x /= cont;
  im.poly = PolyZ::from_coeffs(std::move(pc));
  im.num = cont;
  im.den = den;
  return im;
}

PolyQ to_rational(const PolyZ& f) {
  std::vector<Rat> c;
  c.reserve(f.coeffs().size());
  for (const Int& x : f.coeffs()) c.emplace_back(x);
  return PolyQ::from_coeffs(std::move(c));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a = q*b + r over Z; returns r.
PolyZ pseudo_rem(const PolyZ& a, const PolyZ& b) {
  int d = a.degree() - b.degree();
  if (d < 0) return a;
  std::vector<Int> rem = a.coeffs();
  const Int& blc = b.lc();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Int top = rem[i];
    for (int j = 0; j < i; ++j) rem[j] *= blc;
    if (top != 0)
      for (int j = 0; j <= b.degree(); ++j)
        rem[i - b.degree() + j] -= top * b.coeff(j);
    rem[i] = 0;
  }
  rem.resize(b.degree());
  return PolyZ::from_coeffs(std::move(rem));
}

}  // namespace

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("poly_gcd: both inputs zero");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  PolyZ u = integer_image(a).poly;
  PolyZ v = integer_image(b).poly;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    PolyZ r = pseudo_rem(u, v);
    u = v;
    v = r.is_zero() ? r : primitive_part(r);
  }
  if (u.degree() == 0) return PolyQ(Rat(1));
  return monic(to_rational(u));
}

Rat resultant(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("resultant: both inputs zero");
  if (a.is_zero() || b.is_zero()) {
    const PolyQ& nz = a.is_zero() ? b : a;
    if (nz.degree() == 0) return Rat(0);  // deg-0 vs 0: empty product times 0^0
    return Rat(0);
  }
  if (a.degree() == 0) return rat_pow(a.lc(), b.degree());
  if (b.degree() == 0) return rat_pow(b.lc(), a.degree());

  // Reduce to primitive integer images; Res(cA', c'B') scales by powers.
  IntegerImage ia = integer_image(a);
  IntegerImage ib = integer_image(b);
  Rat factor = rat_pow(Rat(ia.num, ia.den), b.degree()) *
               rat_pow(Rat(ib.num, ib.den), a.degree());
  PolyZ u = ia.poly, v = ib.poly;

  // Primitive PRS with exact tracking:
  //   Res(u, v) = (-1)^(du dv) Res(v, u)
  //   Res(v, prem(u,v)/s) = s^(-deg v) Res(v, prem(u,v))
  //   Res(v, u) = lc(v)^(du - dr) Res(v, r)   for r = u mod v.
  Rat acc = 1;
  bool negate = false;
  while (true) {
    int du = u.degree(), dv = v.degree();
    if (dv > du) {
      std::swap(u, v);
      if ((du & 1) && (dv & 1)) negate = !negate;
      continue;
    }
    if (dv == 0) {
      acc *= rat_pow(Rat(v.lc()), du);
      break;
    }
    PolyZ r = pseudo_rem(u, v);
    if (r.is_zero()) return Rat(0);  // nontrivial common factor
    // u mod v = r / lc(v)^(du-dv+1)
    Rat scale = rat_pow(Rat(v.lc()), du - dv + 1);
    Int cont = content(r);
    PolyZ rp = primitive_part(r);
    Rat rfactor = Rat(sgn(r.lc()) < 0 ? -cont : cont) / scale;
    // Res(u, v) = (-1)^(du dv) lc(v)^(du - dr) rfactor^(dv) Res(v, rp)
    if ((du & 1) && (dv & 1)) negate = !negate;
    acc *= rat_pow(Rat(v.lc()), du - rp.degree());
    acc *= rat_pow(rfactor, dv);
    u = v;
    v = rp;
  }
  Rat res = factor * acc;
  return negate ? Rat(-res) : res;
}

PolyQ interpolate(const std::vector<Rat>& points,
                  const std::vector<Rat>& values) {
  size_t n = points.size();
  if (n == 0 || values.size() != n)
    throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences.
  std::vector<Rat> dd = values;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level]);
  PolyQ result(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    PolyQ lin = PolyQ::from_coeffs({-points[i], Rat(1)});
    result = result * lin + PolyQ(dd[i]);
  }
  return result;
}

PolyQ critical_resultant(const PolyQ& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("critical_resultant: deg f must be >= 1");
  PolyQ fp = derivative(f);
  int d = fp.degree();  // degree of R in gamma
  std::vector<Rat> pts, vals;
  pts.reserve(d + 1);
  vals.reserve(d + 1);
  for (int i = 0; i <= d; ++i) {
    Rat gamma(i);
    pts.push_back(gamma);
    vals.push_back(resultant(fp, f - PolyQ(gamma)));
  }
  return interpolate(pts, vals);
}

SquarefreeDecomposition squarefree_decomposition(const PolyQ& f) {
  if (f.degree() < 1)
    throw std::invalid_argument("squarefree_decomposition: constant input");
  SquarefreeDecomposition out;
  out.lc = f.lc();
  PolyQ p = monic(f);
  // Yun's algorithm.
  PolyQ pp = derivative(p);
  PolyQ a = poly_gcd(p, pp);
  PolyQ b = exact_div(p, a);
  PolyQ c = exact_div(pp, a);
  PolyQ d = c - derivative(b);
  int i = 1;
  while (b.degree() > 0) {
    PolyQ g = poly_gcd(b, d);
    if (g.degree() > 0) out.factors.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

namespace {

int sign_at(const PolyQ& p, const Rat& x) { return sgn(p.eval(x)); }

int sign_at_pos_inf(const PolyQ& p) { return sgn(p.lc()); }

int sign_at_neg_inf(const PolyQ& p) {
  return (p.degree() % 2 == 0) ? sgn(p.lc()) : -sgn(p.lc());
}

// Primitive-integer Sturm chain of the squarefree part of f.
std::vector<PolyQ> sturm_chain(const PolyQ& f) {
  std::vector<PolyQ> chain;
  PolyQ p0 = f;
  chain.push_back(p0);
  PolyQ p1 = derivative(p0);
  while (!p1.is_zero()) {
    chain.push_back(p1);
    PolyQ r = divmod(p0, p1).second;
    if (r.is_zero()) break;
    // Negate and rescale by a positive rational; sign variations unchanged.
    PolyZ z = integer_image(r).poly;
    PolyQ next = to_rational(z);
    if (sgn(r.lc()) > 0) next = -next;
    p0 = p1;
    p1 = next;
  }
  return chain;
}

template <typename SignFn>
int variations(const std::vector<PolyQ>& chain, SignFn sign_of) {
  int var = 0, prev = 0;
  for (const PolyQ& p : chain) {
    int s = sign_of(p);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

RealRootCount real_root_count(const PolyQ& f) {
  if (f.is_zero())
    throw std::invalid_argument("real_root_count: zero polynomial");
  RealRootCount out;
  if (f.degree() == 0) return out;
  out.simple = poly_gcd(f, derivative(f)).degree() == 0;
  PolyQ sf = exact_div(f, poly_gcd(f, derivative(f)));
  auto chain = sturm_chain(sf);
  out.count = variations(chain, sign_at_neg_inf) -
              variations(chain, sign_at_pos_inf);
  return out;
}

RealRootCount real_root_count(const PolyQ& f, const Rat& lo, const Rat& hi) {
  if (f.is_zero())
    throw std::invalid_argument("real_root_count: zero polynomial");
  if (lo > hi) throw std::invalid_argument("real_root_count: empty interval");
  RealRootCount out;
  if (f.degree() == 0) return out;
  out.simple = poly_gcd(f, derivative(f)).degree() == 0;
  PolyQ sf = exact_div(f, poly_gcd(f, derivative(f)));
  auto chain = sturm_chain(sf);
  // Sturm counts roots in (lo, hi]; the interval is closed, so add lo itself.
  int count = variations(chain, [&](const PolyQ& p) { return sign_at(p, lo); }) -
              variations(chain, [&](const PolyQ& p) { return sign_at(p, hi); });
  if (sf.eval(lo) == 0) ++count;
  out.count = count;
  return out;
}

std::optional<PolyQ> poly_kth_root(const PolyQ& f, unsigned k) {
  if (k == 0) throw std::invalid_argument("poly_kth_root: k must be positive");
  if (k == 1) return f;
  if (f.is_zero()) return f;
  if (f.degree() % k != 0) return std::nullopt;
  int d = f.degree() / static_cast<int>(k);
  auto lead = rat_kth_root(f.lc(), k);
  if (!lead) return std::nullopt;
  // Solve top coefficients of P from f = P^k, one slot at a time:
  // the x^(kd - j) coefficient of P^k is k*lead^(k-1)*p_(d-j) plus terms in
  // already-known higher coefficients of P.
  std::vector<Rat> pc(d + 1, Rat(0));
  pc[d] = *lead;
  Rat denom = Rat(k) * rat_pow(*lead, k - 1);
  for (int j = 1; j <= d; ++j) {
    PolyQ partial = poly_pow(PolyQ::from_coeffs(std::vector<Rat>(pc)), k);
    Rat delta = f.coeff(f.degree() - j) - partial.coeff(f.degree() - j);
    pc[d - j] = delta / denom;
  }
  PolyQ p = PolyQ::from_coeffs(std::move(pc));
  if (poly_pow(p, k) != f) return std::nullopt;
  return p;
}

}  // namespace polydec
