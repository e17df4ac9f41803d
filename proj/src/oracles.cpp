#include "sumstruct/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "sumstruct/setops.hpp"

namespace sumstruct {

namespace {

void require_same_group(const ElemSet& a, const ElemSet& b, const char* what) {
  if (a.group != b.group) throw std::invalid_argument(std::string(what) + ": group mismatch");
}

void require_graph_over(const LinkGraph& g, const ElemSet& u, const ElemSet& v,
                        const char* what) {
  if (g.left != u || g.right != v)
    throw std::invalid_argument(std::string(what) + ": link graph does not match the given sets");
}

// Largest finite subgroup size h with h <= bound, exact in the rational bound.
Elem beta_exact(const GroupCtx& g, const Rat& bound) {
  Elem best = 0;
  for (Elem h : subgroup_sizes(g)) {
    if (Rat(static_cast<long>(h)) <= bound && h > best) best = h;
  }
  return best;
}

bool sqrt_coverage_ok(long long total, long long covered, const Rat& eps) {
  // covered >= (1 - sqrt(eps)) * total, i.e. (total - covered) <= sqrt(eps) * total.
  return cmp_a_plus_b_sqrt(Rat(static_cast<long>(covered - total)),
                           Rat(static_cast<long>(total)), eps, Rat(0)) >= 0;
}

}  // namespace

Elem alpha(const ElemSet& u, const ElemSet& v) {
  require_same_group(u, v, "alpha");
  const Elem su = static_cast<Elem>(u.size());
  const Elem sv = static_cast<Elem>(v.size());
  Elem best = 0;
  for (Elem h : subgroup_sizes(u.group)) {
    const Elem cand = std::min({h, sv, su + sv - h});
    if (cand > best) best = cand;
  }
  return best;
}

PollardVerdict pollard_check(const ElemSet& u, const ElemSet& v, long long t) {
  require_same_group(u, v, "pollard_check");
  if (t < 1 || t > static_cast<long long>(v.size()) || v.size() > u.size())
    throw std::invalid_argument("pollard_check needs 1 <= t <= |V| <= |U|");
  PollardVerdict out;
  out.t = t;
  out.u_size = static_cast<long long>(u.size());
  out.v_size = static_cast<long long>(v.size());
  out.alpha_used = alpha(u, v);
  for (const auto& [c, cnt] : rep_counts(u, v)) {
    (void)c;
    out.lhs += std::min(cnt, t);
  }
  out.rhs = t * (out.u_size + out.v_size - t - out.alpha_used);
  out.holds = out.lhs >= out.rhs;
  return out;
}

long long supersat_count(const ElemSet& a1, const ElemSet& a2, const ElemSet& b) {
  require_same_group(a1, a2, "supersat_count");
  require_same_group(a1, b, "supersat_count");
  long long bad = 0;
  for (const auto& [c, cnt] : rep_counts(a1, a2)) {
    if (!b.contains(c)) bad += cnt;
  }
  return bad;
}

SupersatVerdict supersat_check(const ElemSet& a1, const ElemSet& a2,
                               const ElemSet& b, double eps) {
  if (!(eps > 0 && eps < 0.5))
    throw std::invalid_argument("supersat_check needs 0 < eps < 1/2");
  SupersatVerdict out;
  out.a1_size = static_cast<long long>(a1.size());
  out.a2_size = static_cast<long long>(a2.size());
  out.b_size = static_cast<long long>(b.size());
  out.eps = eps;
  const Rat e = rat_from_double(eps);
  out.beta_used = beta_exact(a1.group, (Rat(1) + 4 * e) * static_cast<long>(out.b_size));
  out.hypothesis_met =
      Rat(static_cast<long>(out.a1_size + out.a2_size)) >=
      (Rat(1) + 2 * e) * Rat(static_cast<long>(out.b_size + out.beta_used));
  out.count = supersat_count(a1, a2, b);
  const Rat bound = e * e * static_cast<long>(out.a1_size) * static_cast<long>(out.a2_size);
  out.bound = rat_to_double(bound);
  out.holds = !out.hypothesis_met || Rat(static_cast<long>(out.count)) >= bound;
  return out;
}

RegularityReport regularity_report(const LinkGraph& g, long long K, long long s) {
  if (K < 0 || s < 0) throw std::invalid_argument("regularity_report needs K, s >= 0");
  RegularityReport out;
  out.K = K;
  out.s = s;
  out.min_left_degree = g.min_left_degree();
  out.min_right_degree = g.min_right_degree();
  const ElemSet restricted = restricted_sumset(g);
  for (const auto& [c, cnt] : rep_counts(g.left, g.right)) {
    if (cnt >= K && !restricted.contains(c)) out.popular_missing.push_back(c);
  }
  out.is_regular =
      out.min_left_degree >= static_cast<long long>(g.right.size()) - s &&
      out.min_right_degree >= static_cast<long long>(g.left.size()) - s &&
      out.popular_missing.empty();
  return out;
}

LinkGraph popular_augment(const LinkGraph& g, long long K) {
  if (K < 1) throw std::invalid_argument("popular_augment needs K >= 1");
  std::unordered_set<Elem> popular;
  for (const auto& [c, cnt] : rep_counts(g.left, g.right)) {
    if (cnt >= K) popular.insert(c);
  }
  LinkGraph out = g;
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    for (std::size_t j = 0; j < g.right.size(); ++j) {
      if (!out.has(i, j) &&
          popular.count(g.left.group.add(g.left.elems[i], g.right.elems[j])))
        out.set(i, j);
    }
  }
  return out;
}

KneserVerdict robust_kneser_check(const LinkGraph& g, long long K, long long s) {
  const bool swap_sides = g.left.size() > g.right.size();
  const LinkGraph work = swap_sides ? g.transposed() : g;
  KneserVerdict out;
  out.K = K;
  out.s = s;
  out.swapped = swap_sides;
  out.u_size = static_cast<long long>(work.left.size());
  out.v_size = static_cast<long long>(work.right.size());
  out.is_regular = regularity_report(work, K, s).is_regular;
  const ElemSet restricted = restricted_sumset(work);
  const ElemSet full = sumset(work.left, work.right);
  out.restricted_size = static_cast<long long>(restricted.size());
  out.proper_subset = restricted.size() < full.size();
  out.hypothesis_met = out.is_regular && out.proper_subset;
  out.bound_times2 = 2 * out.v_size + out.u_size - 2 * K - 4 * s;
  out.holds = !out.hypothesis_met || 2 * out.restricted_size >= out.bound_times2;
  return out;
}

Almost1Verdict almost1_check(const ElemSet& u, const ElemSet& v,
                             const LinkGraph& g, long long K, long long s) {
  require_same_group(u, v, "almost1_check");
  if (u.group.is_cyclic())
    throw std::invalid_argument("almost1_check is defined over the integers");
  if (u.empty() || v.empty()) throw std::invalid_argument("almost1_check needs nonempty sets");
  require_graph_over(g, u, v, "almost1_check");
  if (K < 2 || s < 0) throw std::invalid_argument("almost1_check needs K >= 2, s >= 0");
  if (u.min() != 0 || v.min() != 0)
    throw std::invalid_argument("almost1_check needs normalized sets (min 0)");
  Elem common = 0;
  for (Elem e : u.elems) common = std::gcd(common, e);
  for (Elem e : v.elems) common = std::gcd(common, e);
  if (common != 1)
    throw std::invalid_argument("almost1_check needs gcd(U ∪ V) = 1 after normalization");
  if (v.max() > u.max())
    throw std::invalid_argument("almost1_check needs max(V) <= max(U)");

  Almost1Verdict out;
  out.K = K;
  out.s = s;
  out.u_size = static_cast<long long>(u.size());
  out.v_size = static_cast<long long>(v.size());
  out.ell = u.max();
  out.ell_prime = v.max();
  out.is_regular = regularity_report(g, K, s).is_regular;
  out.hypothesis_met = out.is_regular;
  out.restricted_size = static_cast<long long>(restricted_sumset(g).size());
  const long long n_min = std::min(out.u_size, out.v_size);
  out.case_two = out.ell > out.u_size + out.v_size - 2 * K - 2;
  out.bound_times2 = out.case_two
                         ? 2 * (out.u_size + out.v_size) + n_min - 8 * s - 4 * K - 4
                         : 2 * (out.ell + out.v_size - 2 * s);
  out.holds = !out.hypothesis_met || 2 * out.restricted_size >= out.bound_times2;
  return out;
}

StabilityVerdict freiman_robust_check(const ElemSet& u, const ElemSet& v,
                                      const LinkGraph& g, double eps) {
  require_same_group(u, v, "freiman_robust_check");
  if (u.group.is_cyclic())
    throw std::invalid_argument("freiman_robust_check is defined over the integers");
  if (u.empty() || v.empty())
    throw std::invalid_argument("freiman_robust_check needs nonempty sets");
  require_graph_over(g, u, v, "freiman_robust_check");
  if (!(eps > 0)) throw std::invalid_argument("freiman_robust_check needs eps > 0");

  StabilityVerdict out;
  out.eps = eps;
  out.u_size = static_cast<long long>(u.size());
  out.v_size = static_cast<long long>(v.size());
  out.n_small = std::min(out.u_size, out.v_size);
  out.m_large = std::max(out.u_size, out.v_size);
  out.gamma_size = g.edge_count();
  const ElemSet restricted = restricted_sumset(g);
  out.restricted_size = static_cast<long long>(restricted.size());
  out.r = out.restricted_size - out.u_size - out.v_size;

  const Rat e = rat_from_double(eps);
  const bool h_small = out.n_small >= 3;
  // M >= 2/sqrt(eps)  <=>  M^2 eps >= 4.
  const bool h_large = Rat(static_cast<long>(out.m_large)) *
                           static_cast<long>(out.m_large) * e >= 4;
  const bool h_eps = e < Rat(1, 2);
  const bool h_gamma =
      Rat(static_cast<long>(out.gamma_size)) >=
      (Rat(1) - e) * static_cast<long>(out.u_size) * static_cast<long>(out.v_size);
  // r < N/2 - 13 sqrt(eps) M.
  const bool h_defect =
      cmp_a_plus_b_sqrt(Rat(static_cast<long>(out.n_small), 2) - static_cast<long>(out.r),
                        Rat(-13 * static_cast<long>(out.m_large)), e, Rat(0)) > 0;
  out.hypothesis_met = h_small && h_large && h_eps && h_gamma && h_defect;

  out.cap_p = floor_a_plus_b_sqrt(Rat(static_cast<long>(out.u_size + out.r)),
                                  Rat(5 * static_cast<long>(out.m_large)), e);
  out.cap_q = floor_a_plus_b_sqrt(Rat(static_cast<long>(out.v_size + out.r)),
                                  Rat(5 * static_cast<long>(out.m_large)), e);

  // The search always runs (when the caps admit any window) so that near-miss
  // instances still yield a structural report.
  if (out.cap_p >= 1 && out.cap_q >= 1) {
    const Elem hull = std::max(u.size() > 1 ? hull_len(u) : 1, v.size() > 1 ? hull_len(v) : 1);
    for (Elem d = 1; d <= hull; ++d) {
      const CoverResult c1 = best_ap_cover_for_diff(u, d, out.cap_p);
      const CoverResult c2 = best_ap_cover_for_diff(v, d, out.cap_q);
      if (sqrt_coverage_ok(out.u_size, c1.covered, e) &&
          sqrt_coverage_ok(out.v_size, c2.covered, e)) {
        out.witness = StabilityWitness{c1.win, c2.win, c1.covered, c2.covered};
        out.conclusion_witnessed = true;
        break;
      }
    }
  }
  out.holds = !out.hypothesis_met || out.conclusion_witnessed;
  return out;
}

RelStabilityVerdict relative_stability_check(const ElemSet& a1, const ElemSet& a2,
                                             const ElemSet& b, long long s1,
                                             long long s2, double eps) {
  require_same_group(a1, a2, "relative_stability_check");
  require_same_group(a1, b, "relative_stability_check");
  if (a1.group.is_cyclic())
    throw std::invalid_argument("relative_stability_check is defined over the integers");
  if (a1.empty() || a2.empty())
    throw std::invalid_argument("relative_stability_check needs nonempty sets");
  if (s1 < 1 || s2 < 1)
    throw std::invalid_argument("relative_stability_check needs s1, s2 >= 1");
  if (!(eps > 0)) throw std::invalid_argument("relative_stability_check needs eps > 0");

  RelStabilityVerdict out;
  out.eps = eps;
  out.s1 = s1;
  out.s2 = s2;
  out.a1_size = static_cast<long long>(a1.size());
  out.a2_size = static_cast<long long>(a2.size());
  out.b_size = static_cast<long long>(b.size());

  const Rat e = rat_from_double(eps);
  const Rat ssum(static_cast<long>(s1 + s2));
  const Rat share1 = Rat(static_cast<long>(s1)) / ssum;
  const Rat share2 = Rat(static_cast<long>(s2)) / ssum;
  const Rat bsz(static_cast<long>(out.b_size));
  const bool h_eps = e <= rat_pow2(-8) * share1 * share1;
  const bool h_total =
      (Rat(1) - e) * bsz <= Rat(static_cast<long>(out.a1_size + out.a2_size));
  const bool h_cap1 = cmp_a_plus_b_sqrt(share1 * bsz, 2 * bsz, e,
                                        Rat(static_cast<long>(out.a1_size))) >= 0;
  const bool h_cap2 = cmp_a_plus_b_sqrt(share2 * bsz, 2 * bsz, e,
                                        Rat(static_cast<long>(out.a2_size))) >= 0;
  out.hypothesis_met = h_eps && h_total && h_cap1 && h_cap2;

  out.bad_pairs = supersat_count(a1, a2, b);
  const Rat needed = e * e * static_cast<long>(out.a1_size) * static_cast<long>(out.a2_size);
  out.bad_needed = rat_to_double(needed);
  out.many_bad_pairs = Rat(static_cast<long>(out.bad_pairs)) >= needed;

  out.cap1 = floor_a_plus_b_sqrt(share1 * bsz, 4 * bsz, e);
  out.cap2 = floor_a_plus_b_sqrt(share2 * bsz, 4 * bsz, e);
  if (out.cap1 >= 1 && out.cap2 >= 1) {
    const Elem hull =
        std::max(a1.size() > 1 ? hull_len(a1) : 1, a2.size() > 1 ? hull_len(a2) : 1);
    for (Elem d = 1; d <= hull; ++d) {
      const CoverResult c1 = best_ap_cover_for_diff(a1, d, out.cap1);
      const CoverResult c2 = best_ap_cover_for_diff(a2, d, out.cap2);
      // All but at most eps|A_i| of each set covered.
      const bool ok1 = Rat(static_cast<long>(out.a1_size - c1.covered)) <=
                       e * static_cast<long>(out.a1_size);
      const bool ok2 = Rat(static_cast<long>(out.a2_size - c2.covered)) <=
                       e * static_cast<long>(out.a2_size);
      if (ok1 && ok2) {
        out.witness = StabilityWitness{c1.win, c2.win, c1.covered, c2.covered};
        out.conclusion_witnessed = true;
        break;
      }
    }
  }
  out.holds = !out.hypothesis_met || out.many_bad_pairs || out.conclusion_witnessed;
  return out;
}

BinomVerdict binom_lemma_check(long long m, long long s, long long t,
                               const Rat& alpha_p, const Rat& eps) {
  if (m < 1 || s < 1 || t < 1)
    throw std::invalid_argument("binom_lemma_check needs positive m, s, t");
  if (!(sgn(alpha_p) > 0 && alpha_p <= 1))
    throw std::invalid_argument("binom_lemma_check needs alpha_p in (0, 1]");
  const Rat ssum(static_cast<long>(s + t));
  if (Rat(static_cast<long>(m)) < (1 + alpha_p) * ssum)
    throw std::invalid_argument("binom_lemma_check needs m >= (1 + alpha_p)(s + t)");
  if (alpha_p * ssum < 32)
    throw std::invalid_argument("binom_lemma_check needs s + t >= 32/alpha_p");
  const Rat mn2 = Rat(static_cast<long>(std::min(s, t))) * static_cast<long>(std::min(s, t));
  const Rat lo = rat_pow2(10) * mn2 / (ssum * ssum * static_cast<long>(m) * static_cast<long>(m));
  const Rat hi = alpha_p * alpha_p * mn2 / (rat_pow2(10) * ssum * ssum);
  if (eps < lo || eps > hi)
    throw std::invalid_argument("binom_lemma_check: eps outside the admissible window");

  BinomVerdict out;
  out.m = m;
  out.s = s;
  out.t = t;
  out.alpha_p = alpha_p.get_str();
  out.eps = eps.get_str();

  const Rat mr(static_cast<long>(m));
  const Rat a1 = (Rat(static_cast<long>(t)) / ssum + 2 * eps) * mr;
  const Rat b1 = Rat(-2) * mr;
  const Rat a2 = Rat(static_cast<long>(s)) * mr / ssum;
  const Rat b2 = Rat(2) * mr;
  // Floored upper indices, kept as diagnostics. The verdict itself is decided
  // on the exact real-valued upper indices: rounding any of them to an
  // integer shifts a product of ~100 factors by more than the e^{-eps(s+t)}
  // margin and breaks tight asymmetric cells that the true inequality covers.
  out.lhs_n1 = floor_a_plus_b_sqrt(a1, b1, eps);
  out.lhs_n2 = floor_a_plus_b_sqrt(a2, b2, eps);
  out.lhs_floored =
      cmp_a_plus_b_sqrt(a1, b1, eps, Rat(static_cast<long>(out.lhs_n1))) != 0 ||
      cmp_a_plus_b_sqrt(a2, b2, eps, Rat(static_cast<long>(out.lhs_n2))) != 0;
  out.rhs_n1 = (s * m) / (s + t);
  out.rhs_n2 = (t * m) / (s + t);
  out.rhs_floored = (s * m) % (s + t) != 0 || (t * m) % (s + t) != 0;

  // Left product, exactly, in Q[sqrt(eps)]: every falling factor has the form
  // u + v*sqrt(eps) with rational u, v, and the field is closed under
  // multiplication. Track the pair (p, q) representing p + q*sqrt(eps).
  Rat p(1), q(0);
  const auto mul_factor = [&](const Rat& u, const Rat& v) {
    const Rat np = p * u + q * v * eps;
    q = p * v + q * u;
    p = np;
  };
  for (long long j = 0; j < t; ++j) mul_factor(a1 - rat_of(j), b1);
  for (long long j = 0; j < s; ++j) mul_factor(a2 - rat_of(j), b2);
  Int fact_s, fact_t;
  mpz_fac_ui(fact_s.get_mpz_t(), static_cast<unsigned long>(s));
  mpz_fac_ui(fact_t.get_mpz_t(), static_cast<unsigned long>(t));
  const Rat fact = Rat(fact_s) * Rat(fact_t);
  p /= fact;
  q /= fact;
  out.lhs = p.get_str() + " + " + q.get_str() + "*sqrt(eps)";

  // Right product: rational upper indices, so plain exact arithmetic.
  const auto binom_rat = [](const Rat& top, long long k) {
    Rat prod(1);
    for (long long j = 0; j < k; ++j) prod *= top - rat_of(j);
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rat(prod / Rat(f));
  };
  const Rat rhs = binom_rat(a2, s) * binom_rat(Rat(static_cast<long>(t)) * mr / ssum, t);
  out.rhs = rhs.get_str();

  const Rat x = eps * ssum;
  out.exp_arg = x.get_str();

  // Decide lhs * e^x <= rhs. A nonpositive left side settles it: the right
  // side is positive, since m >= (1+alpha)(s+t) makes its smallest falling
  // factor at least alpha*min(s,t) + 1.
  if (cmp_a_plus_b_sqrt(p, q, eps, Rat(0)) <= 0) {
    out.method = "nonpositive-lhs";
    out.holds = true;
    return out;
  }
  // Otherwise bracket e^x between rational bounds and tighten until the sign
  // of lhs*bound - rhs is the same on both ends; e^x is transcendental while
  // both sides live in Q[sqrt(eps)], so a tie is impossible and the
  // escalation terminates.
  out.method = "exact-algebraic";
  for (int terms = 8;; terms *= 2) {
    const Rat upper = exp_upper(x, terms);
    if (cmp_a_plus_b_sqrt(p * upper, q * upper, eps, rhs) <= 0) {
      out.holds = true;
      return out;
    }
    const Rat lower = exp_lower(x, terms);
    if (cmp_a_plus_b_sqrt(p * lower, q * lower, eps, rhs) > 0) {
      out.holds = false;
      return out;
    }
    if (terms > (1 << 16))
      throw std::runtime_error("binom_lemma_check: exponential bound failed to converge");
  }
}

}  // namespace sumstruct
