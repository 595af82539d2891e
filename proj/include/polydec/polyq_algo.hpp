#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polydec/polynomial.hpp"

namespace polydec {

// Primitive integer image of a rational polynomial: f = (num/den) * result
// with result primitive in Z[x] and positive leading coefficient.
struct IntegerImage {
  PolyZ poly;
  Int num{1};
  Int den{1};
};
IntegerImage integer_image(const PolyQ& f);
PolyQ to_rational(const PolyZ& f);

Int content(const PolyZ& f);
PolyZ primitive_part(const PolyZ& f);

// Monic gcd over Q, via the primitive remainder sequence on integer images.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

// Resultant with the sign convention
//   Res(A, B) = lc(A)^{deg B} * prod B(alpha_i)  over the roots alpha_i of A,
// so Res(A, B) = (-1)^{deg A deg B} Res(B, A), and Res(c, B) = c^{deg B} for
// constant c.  Computed by a primitive pseudo-remainder sequence with exact
// bookkeeping of the removed factors.  Both inputs zero is an error.
Rat resultant(const PolyQ& a, const PolyQ& b);

// R(gamma) = Res_x(f'(x), f(x) - gamma) as a polynomial in gamma, computed by
// evaluation at deg f' + 1 rational points and Newton interpolation.  The
// multiplicity of a root gamma_0 of R equals deg gcd(f - gamma_0, f').
PolyQ critical_resultant(const PolyQ& f);

// Newton interpolation through (points[i], values[i]), exact.
PolyQ interpolate(const std::vector<Rat>& points,
                  const std::vector<Rat>& values);

// Yun squarefree decomposition: f = lc * prod factors[i].first^{factors[i].second}
// with monic, pairwise coprime, squarefree factors and strictly increasing
// multiplicities.  Constant input is an error.
struct SquarefreeDecomposition {
  Rat lc;
  std::vector<std::pair<PolyQ, int>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const PolyQ& f);

// Exact count of distinct real roots by Sturm chains, on the whole line or a
// closed interval [lo, hi].  simple is true iff gcd(f, f') is constant.
struct RealRootCount {
  int count = 0;
  bool simple = true;
};
RealRootCount real_root_count(const PolyQ& f);
RealRootCount real_root_count(const PolyQ& f, const Rat& lo, const Rat& hi);

// Exact polynomial k-th root: returns P with P^k == f, if it exists.
std::optional<PolyQ> poly_kth_root(const PolyQ& f, unsigned k);

}  // namespace polydec
