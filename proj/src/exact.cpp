#include "sumstruct/exact.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sumstruct {

Int binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Rat rat_pow2(long e) {
  Rat r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
  Rat acc(1);
  Rat b = base;
  while (e > 0) {
    if (e & 1UL) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  Rat r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

double rat_to_double(const Rat& x) { return mpq_get_d(x.get_mpq_t()); }

int cmp_a_plus_b_sqrt(const Rat& A, const Rat& B, const Rat& e, const Rat& C) {
  if (sgn(e) < 0) throw std::invalid_argument("negative radicand");
  // Sign of B*sqrt(e) - D with D = C - A.
  Rat D = C - A;
  if (sgn(B) == 0 || sgn(e) == 0) return -sgn(D);
  Rat b2e = B * B * e;
  Rat d2 = D * D;
  if (sgn(B) > 0) {
    if (sgn(D) <= 0) return +1;
    return cmp(b2e, d2);
  }
  // B < 0: value is negative.
  if (sgn(D) >= 0) return -1;
  return cmp(d2, b2e);
}

long long floor_a_plus_b_sqrt(const Rat& A, const Rat& B, const Rat& e) {
  double est = rat_to_double(A) + rat_to_double(B) * std::sqrt(rat_to_double(e));
  long long k = static_cast<long long>(std::floor(est)) - 2;
  // Slide to the exact floor: largest k with A + B*sqrt(e) >= k.
  while (cmp_a_plus_b_sqrt(A, B, e, Rat(static_cast<long>(k))) < 0) --k;
  while (cmp_a_plus_b_sqrt(A, B, e, Rat(static_cast<long>(k + 1))) >= 0) ++k;
  return k;
}

static Rat exp_partial_sum(const Rat& x, int terms, Rat* last_term) {
  Rat sum(1);
  Rat term(1);
  for (int k = 1; k <= terms; ++k) {
    term *= x;
    term /= k;
    sum += term;
  }
  *last_term = term;
  return sum;
}

Rat exp_lower(const Rat& x, int terms) {
  if (sgn(x) < 0 || x > 1) throw std::invalid_argument("exp bound needs 0 <= x <= 1");
  Rat last;
  return exp_partial_sum(x, terms, &last);
}

Rat exp_upper(const Rat& x, int terms) {
  if (sgn(x) < 0 || x > 1) throw std::invalid_argument("exp bound needs 0 <= x <= 1");
  if (terms < 1) terms = 1;
  Rat last;
  Rat sum = exp_partial_sum(x, terms, &last);
  // Tail sum_{k>terms} x^k/k! <= last * sum_{j>=1} (x/(terms+1))^j, geometric
  // with ratio x/(terms+1) <= 1/2 for terms >= 1 and x <= 1.
  Rat ratio = x / (terms + 1);
  Rat tail = last * ratio / (Rat(1) - ratio);
  return sum + tail;
}

// Directed-rounding comparison: +1 proves ln(lhs) + x <= ln(rhs),
// -1 proves the opposite strict inequality, 0 means undecided at this
// precision.
static int log_compare(const Int& lhs, const Int& rhs, const Rat& x,
                       mpfr_prec_t prec) {
  mpfr_t la, lb, xa, xb;
  mpfr_inits2(prec, la, lb, xa, xb, static_cast<mpfr_ptr>(nullptr));
  int decided = 0;

  // Upper bound for ln(lhs) + x.
  mpfr_set_z(la, lhs.get_mpz_t(), MPFR_RNDU);
  mpfr_log(la, la, MPFR_RNDU);
  mpfr_set_q(xa, x.get_mpq_t(), MPFR_RNDU);
  mpfr_add(la, la, xa, MPFR_RNDU);
  // Lower bound for ln(rhs).
  mpfr_set_z(lb, rhs.get_mpz_t(), MPFR_RNDD);
  mpfr_log(lb, lb, MPFR_RNDD);
  if (mpfr_cmp(la, lb) <= 0) {
    decided = +1;
  } else {
    // Lower bound for ln(lhs) + x vs upper bound for ln(rhs).
    mpfr_set_z(la, lhs.get_mpz_t(), MPFR_RNDD);
    mpfr_log(la, la, MPFR_RNDD);
    mpfr_set_q(xa, x.get_mpq_t(), MPFR_RNDD);
    mpfr_add(la, la, xa, MPFR_RNDD);
    mpfr_set_z(lb, rhs.get_mpz_t(), MPFR_RNDU);
    mpfr_log(lb, lb, MPFR_RNDU);
    if (mpfr_cmp(la, lb) > 0) decided = -1;
  }
  mpfr_clears(la, lb, xa, xb, static_cast<mpfr_ptr>(nullptr));
  return decided;
}

int cmp_mul_ln(const Rat& a, long long n, const Rat& c) {
  if (n < 2) throw std::invalid_argument("cmp_mul_ln needs n >= 2");
  if (sgn(a) == 0) return -sgn(c);
  // a*ln(n) is irrational for rational a != 0 and integer n >= 2, so interval
  // refinement always separates it from the rational c.
  for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t(1) << 20); prec *= 2) {
    mpfr_t L, U, lo, hi;
    mpfr_inits2(prec, L, U, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_si(L, static_cast<long>(n), MPFR_RNDD);
    mpfr_log(L, L, MPFR_RNDD);
    mpfr_set_si(U, static_cast<long>(n), MPFR_RNDU);
    mpfr_log(U, U, MPFR_RNDU);
    if (sgn(a) > 0) {
      mpfr_mul_q(lo, L, a.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(hi, U, a.get_mpq_t(), MPFR_RNDU);
    } else {
      mpfr_mul_q(lo, U, a.get_mpq_t(), MPFR_RNDD);
      mpfr_mul_q(hi, L, a.get_mpq_t(), MPFR_RNDU);
    }
    int res = 0;
    bool done = false;
    if (mpfr_cmp_q(hi, c.get_mpq_t()) < 0) {
      res = -1;
      done = true;
    } else if (mpfr_cmp_q(lo, c.get_mpq_t()) > 0) {
      res = +1;
      done = true;
    }
    mpfr_clears(L, U, lo, hi, static_cast<mpfr_ptr>(nullptr));
    if (done) return res;
  }
  throw std::runtime_error("cmp_mul_ln failed to converge");
}

long long floor_div_ln(long long m, long long n) {
  if (m < 0) throw std::invalid_argument("floor_div_ln needs m >= 0");
  if (n < 2) throw std::invalid_argument("floor_div_ln needs n >= 2");
  long long k = static_cast<long long>(
      std::floor(static_cast<double>(m) / std::log(static_cast<double>(n))));
  k = std::max(0LL, k - 2);
  const Rat mr(static_cast<long>(m));
  // Largest k with k*ln(n) <= m.
  while (cmp_mul_ln(Rat(static_cast<long>(k + 1)), n, mr) < 0) ++k;
  while (k > 0 && cmp_mul_ln(Rat(static_cast<long>(k)), n, mr) > 0) --k;
  return k;
}

long long ceil_mul_ln(const Rat& coef, long long n) {
  if (sgn(coef) < 0) throw std::invalid_argument("ceil_mul_ln needs coef >= 0");
  if (n < 2) throw std::invalid_argument("ceil_mul_ln needs n >= 2");
  if (sgn(coef) == 0) return 0;
  long long k = static_cast<long long>(
      std::ceil(rat_to_double(coef) * std::log(static_cast<double>(n)))) + 2;
  // Smallest k with coef*ln(n) <= k.
  while (k > 0 && cmp_mul_ln(coef, n, Rat(static_cast<long>(k - 1))) < 0) --k;
  while (cmp_mul_ln(coef, n, Rat(static_cast<long>(k))) > 0) ++k;
  return k;
}

long long floor_sqrt_ll(long long v) {
  if (v < 0) throw std::invalid_argument("negative radicand");
  Int r, x(static_cast<long>(v));
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r.get_si();
}

long long ceil_sqrt_ll(long long v) {
  const long long f = floor_sqrt_ll(v);
  return f * f == v ? f : f + 1;
}

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("empty rational");
  const auto dot = t.find('.');
  try {
    if (dot == std::string::npos) {
      Rat r(t);  // handles "p/q" and plain integers
      if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
      r.canonicalize();
      return r;
    }
    if (t.find('/') != std::string::npos)
      throw std::invalid_argument("mixed decimal and fraction");
    const std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    const std::size_t frac_len = t.size() - dot - 1;
    Rat r{Int(digits, 10)};  // explicit base: leading zeros must not mean octal
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    r /= Rat(den);
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + s + "'");
  }
}

ExpCompare exp_product_le(const Int& lhs, const Int& rhs, const Rat& x) {
  ExpCompare out;
  if (sgn(lhs) == 0) {
    out.holds = true;
    return out;
  }
  if (sgn(rhs) == 0) {
    out.holds = false;
    return out;
  }
  if (sgn(x) < 0 || x > 1) throw std::invalid_argument("exp compare needs 0 <= x <= 1");
  for (mpfr_prec_t prec = 128; prec <= 2048; prec *= 2) {
    int d = log_compare(lhs, rhs, x, prec);
    if (d != 0) {
      out.holds = (d > 0);
      return out;
    }
  }
  // Exact rational fallback.  lhs * e^x is irrational for rational x > 0, so
  // shrinking bounds must eventually separate it from the integer rhs; x = 0
  // is decided on the first pass below.
  out.method = "exact-rational";
  for (int terms = 8;; terms *= 2) {
    if (lhs * exp_upper(x, terms) <= Rat(rhs)) {
      out.holds = true;
      return out;
    }
    if (lhs * exp_lower(x, terms) > Rat(rhs)) {
      out.holds = false;
      return out;
    }
    if (terms > (1 << 20)) throw std::runtime_error("exp compare failed to converge");
  }
}

}  // namespace sumstruct
