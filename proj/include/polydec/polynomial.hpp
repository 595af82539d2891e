#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polydec/rational.hpp"

namespace polydec {

// Dense univariate polynomial with coefficients of an arbitrary field (or
// ring) scalar.  Coefficient i is the coefficient of x^i; the vector never
// stores trailing zeros, and the zero polynomial stores nothing at all, so
// degree() returns the sentinel -1 for it (never used in degree arithmetic).
template <typename Scalar>
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  explicit Polynomial(const Scalar& constant) {
    if (!(constant == Scalar(0))) coeffs_.push_back(constant);
  }

  static Polynomial from_coeffs(std::vector<Scalar> coeffs) {
    Polynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static Polynomial monomial(const Scalar& c, int deg) {
    Polynomial p;
    if (c == Scalar(0)) return p;
    p.coeffs_.assign(deg + 1, Scalar(0));
    p.coeffs_[deg] = c;
    return p;
  }

  static Polynomial variable() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[i];
  }

  const Scalar& lc() const {
    if (is_zero()) throw std::invalid_argument("lc of zero polynomial");
    return coeffs_.back();
  }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  template <typename T>
  T eval(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + T(*it);
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return from_coeffs(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return from_coeffs(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> c = a.coeffs_;
    for (auto& x : c) x = -x;
    return from_coeffs(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return from_coeffs(std::move(c));
  }

  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    std::vector<Scalar> c = a.coeffs_;
    for (auto& x : c) x *= s;
    return from_coeffs(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Scalar& s) {
    return s * a;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using PolyQ = Polynomial<Rat>;
using PolyZ = Polynomial<Int>;
using PolyC = Polynomial<std::complex<double>>;

template <typename Scalar>
Polynomial<Scalar> poly_pow(const Polynomial<Scalar>& base, unsigned long e) {
  Polynomial<Scalar> r(Scalar(1));
  Polynomial<Scalar> b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& a) {
  if (a.degree() <= 0) return Polynomial<Scalar>();
  std::vector<Scalar> c(a.degree());
  for (int i = 1; i <= a.degree(); ++i) c[i - 1] = a.coeff(i) * Scalar(i);
  return Polynomial<Scalar>::from_coeffs(std::move(c));
}

// Euclidean division over a field scalar: a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(
    const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> rem(a.coeffs());
  std::vector<Scalar> quot(a.degree() - b.degree() + 1, Scalar(0));
  const Scalar& blc = b.lc();
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (rem[i] == Scalar(0)) continue;
    Scalar q = rem[i] / blc;
    quot[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] -= q * b.coeff(j);
  }
  return {Polynomial<Scalar>::from_coeffs(std::move(quot)),
          Polynomial<Scalar>::from_coeffs(std::move(rem))};
}

template <typename Scalar>
Polynomial<Scalar> operator/(const Polynomial<Scalar>& a, const Scalar& s) {
  std::vector<Scalar> c = a.coeffs();
  for (auto& x : c) x /= s;
  return Polynomial<Scalar>::from_coeffs(std::move(c));
}

// Exact division; throws if b does not divide a.
template <typename Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a,
                             const Polynomial<Scalar>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw std::invalid_argument("exact_div: remainder is nonzero");
  return q;
}

// Functional composition: returns outer(inner(x)), by Horner on inner.
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& outer,
                           const Polynomial<Scalar>& inner) {
  Polynomial<Scalar> acc;
  for (int i = outer.degree(); i >= 0; --i)
    acc = acc * inner + Polynomial<Scalar>(outer.coeff(i));
  return acc;
}

// Digits of f in base h: f = sum digits[i] * h^i with deg digits[i] < deg h.
// The expansion is unique; f = g(h) for some g iff every digit is constant.
template <typename Scalar>
std::vector<Polynomial<Scalar>> h_adic_expansion(const Polynomial<Scalar>& f,
                                                 const Polynomial<Scalar>& h) {
  if (h.degree() < 1)
    throw std::invalid_argument("h_adic_expansion: deg h must be >= 1");
  std::vector<Polynomial<Scalar>> digits;
  Polynomial<Scalar> cur = f;
  if (cur.is_zero()) digits.push_back(cur);
  while (!cur.is_zero()) {
    auto [q, r] = divmod(cur, h);
    digits.push_back(r);
    cur = q;
  }
  return digits;
}

// Degree-one polynomial slope*x + intercept with slope != 0, closed under
// functional composition and inversion.
template <typename Scalar>
struct Linear {
  Scalar slope{1};
  Scalar intercept{0};

  Linear() = default;
  Linear(Scalar s, Scalar t) : slope(std::move(s)), intercept(std::move(t)) {
    if (slope == Scalar(0))
      throw std::invalid_argument("Linear: slope must be nonzero");
  }

  static Linear identity() { return Linear(Scalar(1), Scalar(0)); }
  bool is_identity() const {
    return slope == Scalar(1) && intercept == Scalar(0);
  }

  Scalar operator()(const Scalar& x) const { return slope * x + intercept; }

  Polynomial<Scalar> to_poly() const {
    return Polynomial<Scalar>::from_coeffs({intercept, slope});
  }

  // Compositional inverse: invert(l)(l(x)) = x.
  Linear invert() const {
    return Linear(Scalar(1) / slope, -intercept / slope);
  }

  friend bool operator==(const Linear& a, const Linear& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
};

using LinearQ = Linear<Rat>;

// this(other(x))
template <typename Scalar>
Linear<Scalar> compose(const Linear<Scalar>& outer,
                       const Linear<Scalar>& inner) {
  return Linear<Scalar>(outer.slope * inner.slope,
                        outer.slope * inner.intercept + outer.intercept);
}

template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& outer,
                           const Linear<Scalar>& inner) {
  return compose(outer, inner.to_poly());
}

template <typename Scalar>
Polynomial<Scalar> compose(const Linear<Scalar>& outer,
                           const Polynomial<Scalar>& inner) {
  return inner * outer.slope + Polynomial<Scalar>(outer.intercept);
}

// f(l(x)) computed exactly.
template <typename Scalar>
Polynomial<Scalar> affine_substitute(const Polynomial<Scalar>& f,
                                     const Linear<Scalar>& l) {
  return compose(f, l);
}

template <typename Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& a) {
  if (a.is_zero()) throw std::invalid_argument("monic of zero polynomial");
  return a / a.lc();
}

}  // namespace polydec
