#pragma once
// Exact arithmetic helpers: big-integer binomials, rational powers, exact
// comparison and flooring of expressions A + B*sqrt(e) with rational A, B, e,
// and two-sided rational bounds for exp(x). These keep every borderline
// inequality decision rigorous instead of trusting floating point.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sumstruct {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructors; these funnel 64-bit counts in exactly.
inline Int int_of(long long v) {
  Int r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}
inline Rat rat_of(long long v) { return Rat(int_of(v)); }

// C(n, k); zero when k < 0 or k > n.
Int binom(long long n, long long k);

// 2^e for any sign of e.
Rat rat_pow2(long e);

// base^e, e >= 0.
Rat rat_pow(const Rat& base, unsigned long e);

// Exact value of a finite double.
Rat rat_from_double(double x);

double rat_to_double(const Rat& x);

// Sign of (A + B*sqrt(e)) - C, exact; requires e >= 0.
int cmp_a_plus_b_sqrt(const Rat& A, const Rat& B, const Rat& e, const Rat& C);

// floor(A + B*sqrt(e)), exact; requires e >= 0.
long long floor_a_plus_b_sqrt(const Rat& A, const Rat& B, const Rat& e);

// Rational bounds L <= exp(x) <= U for 0 <= x <= 1, via Taylor series with a
// geometric tail estimate; widths shrink as terms grows.
Rat exp_upper(const Rat& x, int terms);
Rat exp_lower(const Rat& x, int terms);

// Decides lhs * exp(x) <= rhs for positive integers lhs, rhs and rational
// 0 < x <= 1, first with directed-rounding logarithms, then (on a near miss)
// with exact rational exponential bounds. Returns the verdict and which
// method settled it ("directed-log" or "exact-rational").
struct ExpCompare {
  bool holds = false;
  const char* method = "directed-log";
};
ExpCompare exp_product_le(const Int& lhs, const Int& rhs, const Rat& x);

// Sign of a*ln(n) - c, exact for integer n >= 2 (a*ln(n) is then irrational
// unless a = 0, so escalating directed-rounding precision always settles it).
int cmp_mul_ln(const Rat& a, long long n, const Rat& c);

// floor(m / ln(n)) for m >= 0, n >= 2.
long long floor_div_ln(long long m, long long n);

// ceil(coef * ln(n)) for coef >= 0, n >= 2.
long long ceil_mul_ln(const Rat& coef, long long n);

// Integer square-root bounds.
long long floor_sqrt_ll(long long v);
long long ceil_sqrt_ll(long long v);

// Parses "3/4", "7", or "0.25" into an exact rational.
Rat parse_rat(const std::string& s);

}  // namespace sumstruct
