#pragma once
// Executable verdicts for the sumset inequalities: the minimum-representation
// lower bound, supersaturation counting, link-graph regularity, the robust
// Kneser bound, the two-case normalized bound, robust structural stability
// over the integers, relative stability for pairs, and the binomial-product
// inequality. Each check computes both sides exactly and reports every
// quantity it used, so verdicts double as verification records.

#include <optional>
#include <string>
#include <vector>

#include "sumstruct/ap_cover.hpp"
#include "sumstruct/elem_set.hpp"
#include "sumstruct/exact.hpp"
#include "sumstruct/link_graph.hpp"

namespace sumstruct {

// max over finite subgroup sizes h of min(h, |v|, |u|+|v| - h), never negative.
Elem alpha(const ElemSet& u, const ElemSet& v);

struct PollardVerdict {
  long long t = 0;
  long long u_size = 0, v_size = 0;
  Elem alpha_used = 0;
  long long lhs = 0;  // sum over colors of min(representations, t)
  long long rhs = 0;  // t * (|u| + |v| - t - alpha)
  bool holds = false;
};

// Requires 1 <= t <= |v| <= |u|; violations throw (never silently reordered).
PollardVerdict pollard_check(const ElemSet& u, const ElemSet& v, long long t);

// Number of pairs (x, y) in a1 x a2 with x + y outside b.
long long supersat_count(const ElemSet& a1, const ElemSet& a2, const ElemSet& b);

struct SupersatVerdict {
  long long a1_size = 0, a2_size = 0, b_size = 0;
  double eps = 0;
  Elem beta_used = 0;       // largest finite subgroup size <= (1 + 4 eps)|b|
  bool hypothesis_met = false;  // |a1| + |a2| >= (1 + 2 eps)(|b| + beta)
  long long count = 0;
  double bound = 0;  // eps^2 |a1||a2|
  bool holds = false;
};

// Vacuously true when the hypothesis fails; requires 0 < eps < 1/2.
SupersatVerdict supersat_check(const ElemSet& a1, const ElemSet& a2,
                               const ElemSet& b, double eps);

struct RegularityReport {
  long long K = 0;
  long long s = 0;
  long long min_left_degree = 0;
  long long min_right_degree = 0;
  std::vector<Elem> popular_missing;  // colors with >= K representations absent from the restricted sumset
  bool is_regular = false;
};

RegularityReport regularity_report(const LinkGraph& g, long long K, long long s);

// Adds every pair whose color has at least K representations in the full
// (unrestricted) sumset; K >= 1. Idempotent.
LinkGraph popular_augment(const LinkGraph& g, long long K);

struct KneserVerdict {
  long long K = 0, s = 0;
  bool swapped = false;  // inputs reordered so that u_size <= v_size
  long long u_size = 0, v_size = 0;
  bool is_regular = false;
  bool proper_subset = false;  // restricted sumset strictly inside the full sumset
  bool hypothesis_met = false;
  long long restricted_size = 0;
  long long bound_times2 = 0;  // 2|v| + |u| - 2K - 4s, doubled to stay in integers
  bool holds = false;
};

KneserVerdict robust_kneser_check(const LinkGraph& g, long long K, long long s);

struct Almost1Verdict {
  long long K = 0, s = 0;
  long long u_size = 0, v_size = 0;
  Elem ell = 0, ell_prime = 0;  // max of u, max of v after normalization
  bool is_regular = false;
  bool hypothesis_met = false;  // regularity; structural preconditions throw instead
  bool case_two = false;        // ell > |u| + |v| - 2K - 2
  long long restricted_size = 0;
  long long bound_times2 = 0;  // doubled bound for the active case
  bool holds = false;
};

// Requires integer sets with min 0, gcd(u ∪ v) = 1, max(v) <= max(u), and g
// over exactly (u, v); K >= 2, s >= 0. Non-regular g makes the check vacuous.
Almost1Verdict almost1_check(const ElemSet& u, const ElemSet& v,
                             const LinkGraph& g, long long K, long long s);

struct StabilityWitness {
  ApWindow p, q;
  long long covered_u = 0, covered_v = 0;
};

struct StabilityVerdict {
  double eps = 0;
  long long u_size = 0, v_size = 0;
  long long n_small = 0, m_large = 0;  // min and max of the two sizes
  long long gamma_size = 0;
  long long restricted_size = 0;
  long long r = 0;  // restricted_size - u_size - v_size
  bool hypothesis_met = false;
  long long cap_p = 0, cap_q = 0;  // floor(|u| + r + 5 sqrt(eps) M), same for v
  std::optional<StabilityWitness> witness;
  bool conclusion_witnessed = false;
  bool holds = false;  // hypothesis_met implies conclusion_witnessed
};

// Integer sets only. Hypothesis: min size >= 3, max size >= 2/sqrt(eps),
// |gamma| >= (1 - eps)|u||v|, 0 < eps < 1/2, and the doubling defect
// r < N/2 - 13 sqrt(eps) M. The witness search always runs so near-miss
// instances still produce a structural report.
StabilityVerdict freiman_robust_check(const ElemSet& u, const ElemSet& v,
                                      const LinkGraph& g, double eps);

struct RelStabilityVerdict {
  double eps = 0;
  long long s1 = 0, s2 = 0;
  long long a1_size = 0, a2_size = 0, b_size = 0;
  bool hypothesis_met = false;
  long long bad_pairs = 0;
  double bad_needed = 0;  // eps^2 |a1||a2|
  bool many_bad_pairs = false;
  long long cap1 = 0, cap2 = 0;  // floor((s_i/(s1+s2))|b| + 4 sqrt(eps)|b|)
  std::optional<StabilityWitness> witness;
  bool conclusion_witnessed = false;  // AP pair meets caps and covers all but eps|a_i| of each
  bool holds = false;                 // hypothesis_met implies (many bad pairs or witness)
};

RelStabilityVerdict relative_stability_check(const ElemSet& a1, const ElemSet& a2,
                                             const ElemSet& b, long long s1,
                                             long long s2, double eps);

struct BinomVerdict {
  long long m = 0, s = 0, t = 0;
  std::string alpha_p;  // exact rationals as strings
  std::string eps;
  long long lhs_n1 = 0, lhs_n2 = 0;  // floored upper indices (diagnostic only)
  long long rhs_n1 = 0, rhs_n2 = 0;
  bool lhs_floored = false, rhs_floored = false;  // true when a real index was non-integral
  // The decision uses the exact real-valued upper indices: the left product
  // lives in Q[sqrt(eps)] and is recorded as "p + q*sqrt(eps)"; the right
  // product has rational upper indices and is recorded as an exact rational.
  std::string lhs;
  std::string rhs;
  std::string exp_arg;  // eps (s + t), the decay exponent
  std::string method;   // "exact-algebraic" or "nonpositive-lhs"
  bool holds = false;   // lhs <= e^{-exp_arg} * rhs, decided exactly
};

// Requires m >= (1 + alpha_p)(s + t), s + t >= 32/alpha_p, and eps inside
// [2^10 min(s,t)^2 / ((s+t)^2 m^2), alpha_p^2 min(s,t)^2 / (2^10 (s+t)^2)];
// out-of-range parameters are rejected with an exception.
BinomVerdict binom_lemma_check(long long m, long long s, long long t,
                               const Rat& alpha_p, const Rat& eps);

}  // namespace sumstruct
