#include "polydec/dickson.hpp"

namespace polydec {

PolyQ dickson_closed_form(unsigned m, const Rat& a) {
  if (m == 0) return PolyQ(Rat(2));
  std::vector<Rat> c(m + 1, Rat(0));
  for (unsigned j = 0; j <= m / 2; ++j) {
    // m/(m-j) * C(m-j, j) * (-a)^j
    Rat coef = Rat(m) / Rat(static_cast<long>(m - j));
    coef *= Rat(binomial_int(m - j, j));
    coef *= rat_pow(-a, j);
    c[m - 2 * j] = coef;
  }
  return PolyQ::from_coeffs(std::move(c));
}

PolyQ dickson(unsigned m, const Rat& a) {
  PolyQ prev(Rat(2));  // D_0
  if (m == 0) return prev;
  PolyQ cur = PolyQ::variable();  // D_1
  const PolyQ x = PolyQ::variable();
  for (unsigned i = 2; i <= m; ++i) {
    PolyQ next = x * cur - prev * a;
    prev = cur;
    cur = next;
  }
  if (cur != dickson_closed_form(m, a))
    throw internal_error("dickson: recurrence and closed form disagree");
  return cur;
}

bool verify_functional_equation(unsigned m, const Rat& a) {
  if (m == 0) return true;
  if (a == 0) {
    // Degenerate case: D_m(x, 0) = x^m directly.
    return dickson(m, a) == PolyQ::monomial(Rat(1), m);
  }
  // D_m(z + a/z, a) * z^m = sum_i d_i (z^2 + a)^i z^(m-i), a polynomial in z.
  PolyQ d = dickson(m, a);
  PolyQ zsq_plus_a = PolyQ::from_coeffs({a, Rat(0), Rat(1)});
  PolyQ lhs;
  for (int i = 0; i <= d.degree(); ++i) {
    if (d.coeff(i) == 0) continue;
    lhs = lhs + PolyQ(d.coeff(i)) * poly_pow(zsq_plus_a, i) *
                    PolyQ::monomial(Rat(1), static_cast<int>(m) - i);
  }
  PolyQ rhs = PolyQ::monomial(Rat(1), 2 * m) + PolyQ(rat_pow(a, m));
  return lhs == rhs;
}

PolyQ DicksonForm::recompose() const {
  PolyQ d = dickson(m, a);
  return compose(d, LinearQ(Rat(1), b)) * alpha + PolyQ(c);
}

DicksonRecognition recognize_dickson_detail(const PolyQ& f) {
  DicksonRecognition out;
  int m = f.degree();
  if (m < 2) return out;
  Rat alpha = f.lc();
  PolyQ g = f / alpha;  // monic
  // D_m(x+b, a) has x^(m-1) coefficient m*b; center to remove it.
  Rat b = g.coeff(m - 1) / Rat(m);
  PolyQ w = compose(g, LinearQ(Rat(1), -b));
  // Centered Dickson: x^(m-2) coefficient is -m*a.
  Rat a = -w.coeff(m - 2) / Rat(m);
  PolyQ dm = dickson_closed_form(m, a);
  // Everything above the constant slot must now agree.
  for (int e = m; e >= 1; --e) {
    if (w.coeff(e) != dm.coeff(e)) {
      out.mismatch_exponent = e;
      out.found = w.coeff(e);
      out.expected = dm.coeff(e);
      return out;
    }
  }
  Rat c = (w.coeff(0) - dm.coeff(0)) * alpha;
  DicksonForm form{alpha, b, a, c, static_cast<unsigned>(m)};
  if (form.recompose() != f)
    throw internal_error("recognize_dickson: recomposition mismatch");
  out.form = form;
  return out;
}

std::optional<DicksonForm> recognize_dickson(const PolyQ& f) {
  return recognize_dickson_detail(f).form;
}

}  // namespace polydec
