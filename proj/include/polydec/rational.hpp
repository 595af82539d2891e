#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace polydec {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when a theorem-backed internal consistency check fails.  The CLI
// maps this to exit code 2; it should never fire on valid builds.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Invalid user input or violated operation precondition (CLI exit code 1).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial_int(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Exact k-th root of an integer, or nullopt if z is not a perfect k-th power.
// Negative z is allowed for odd k.
inline std::optional<Int> int_kth_root(const Int& z, unsigned k) {
  if (k == 0) throw std::invalid_argument("int_kth_root: k must be positive");
  if (k == 1) return z;
  if (sgn(z) < 0 && k % 2 == 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), z.get_mpz_t(), k);
  if (!exact) return std::nullopt;
  return r;
}

// Exact k-th root of a rational (numerator and denominator separately).
inline std::optional<Rat> rat_kth_root(const Rat& q, unsigned k) {
  auto num = int_kth_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = int_kth_root(q.get_den(), k);
  if (!den) return std::nullopt;
  Rat r(*num, *den);
  r.canonicalize();
  return r;
}

inline bool is_kth_power(const Rat& q, unsigned k) {
  return rat_kth_root(q, k).has_value();
}

inline Rat rat_pow(const Rat& q, unsigned long e) {
  Rat r = 1;
  Rat base = q;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Canonical text: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace polydec
