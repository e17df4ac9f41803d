#pragma once
// Independent reference implementations used only by the tests, deliberately
// built on different mechanisms than the production code: subset brute force
// with explicit additive closure for the subgroup statistic, a std::set-based
// pair census, exhaustive window search for AP covering, and a direct closed
// form for the codegree allowances.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "sumstruct/containers.hpp"
#include "sumstruct/elem_set.hpp"
#include "sumstruct/hypergraph.hpp"

namespace testref {

// Smallest additive closure size per subset cardinality in Z/n: for each
// subset W (as a bitmask), close {0} union W under addition to a fixpoint and
// record the minimum closure size achieved by any W of each size.
inline const std::vector<long long>& min_closure_table(long long n) {
  static std::map<long long, std::vector<long long>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<long long> best(static_cast<std::size_t>(n) + 1, n + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    std::uint32_t closed = mask | 1u;  // the identity is always generated
    for (;;) {
      std::uint32_t next = closed;
      for (long long a = 0; a < n; ++a) {
        if (!(closed >> a & 1)) continue;
        for (long long b = a; b < n; ++b) {
          if (closed >> b & 1) next |= std::uint32_t(1) << ((a + b) % n);
        }
      }
      if (next == closed) break;
      closed = next;
    }
    const int size = __builtin_popcount(mask);
    const int closure = __builtin_popcount(closed);
    if (closure < best[static_cast<std::size_t>(size)])
      best[static_cast<std::size_t>(size)] = closure;
  }
  return cache.emplace(n, std::move(best)).first->second;
}

// Largest |W|, W a subset of Z/n, with |W| <= v_size and the closure of W no
// bigger than u_size + v_size - |W|.
inline long long alpha_brute(long long n, long long u_size, long long v_size) {
  const auto& best = min_closure_table(n);
  long long out = 0;
  for (long long k = 0; k <= std::min(n, v_size); ++k) {
    if (best[static_cast<std::size_t>(k)] <= u_size + v_size - k) out = std::max(out, k);
  }
  return out;
}

// Sumset-size histogram over every (s1, s2)-subset pair of {0..n-1}, computed
// with plain std::set arithmetic.
inline std::vector<long long> naive_pair_hist(const sumstruct::GroupCtx& g, long long n,
                                              long long s1, long long s2) {
  std::vector<std::vector<long long>> subs1, subs2;
  const auto collect = [&](long long k, std::vector<std::vector<long long>>& out) {
    std::vector<long long> cur;
    const std::function<void(long long)> rec = [&](long long from) {
      if (static_cast<long long>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (long long v = from; v < n; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
  };
  collect(s1, subs1);
  collect(s2, subs2);

  const long long span = g.is_cyclic() ? g.modulus : std::max(1LL, 2 * n - 1);
  std::vector<long long> hist(static_cast<std::size_t>(span) + 1, 0);
  for (const auto& a : subs1) {
    for (const auto& b : subs2) {
      std::set<long long> sums;
      for (long long x : a)
        for (long long y : b) sums.insert(g.canon(x + y));
      hist[sums.size()]++;
    }
  }
  return hist;
}

// Exhaustive best single-AP coverage: every difference up to the hull length,
// every start, windows of at most max_len slots.
inline long long ap_cover_brute(const std::vector<long long>& x, long long max_len) {
  long long best = 0;
  const long long lo = *std::min_element(x.begin(), x.end());
  const long long hi = *std::max_element(x.begin(), x.end());
  const long long span = hi - lo + 1;
  for (long long d = 1; d <= std::max(1LL, span); ++d) {
    for (long long start = lo - d * max_len; start <= hi; ++start) {
      long long covered = 0;
      for (long long k = 0; k < max_len; ++k) {
        const long long v = start + k * d;
        if (std::binary_search(x.begin(), x.end(), v)) ++covered;
      }
      best = std::max(best, covered);
    }
  }
  return best;
}

// Best total coverage of two sets by windows sharing one difference.
inline long long joint_cover_brute(const std::vector<long long>& x1,
                                   const std::vector<long long>& x2, long long cap1,
                                   long long cap2) {
  const auto span_of = [](const std::vector<long long>& x) {
    return *std::max_element(x.begin(), x.end()) - *std::min_element(x.begin(), x.end()) + 1;
  };
  const auto best_for_diff = [](const std::vector<long long>& x, long long d,
                                long long cap) {
    const long long lo = *std::min_element(x.begin(), x.end());
    const long long hi = *std::max_element(x.begin(), x.end());
    long long best = 0;
    for (long long start = lo - d * cap; start <= hi; ++start) {
      long long covered = 0;
      for (long long k = 0; k < cap; ++k) {
        if (std::binary_search(x.begin(), x.end(), start + k * d)) ++covered;
      }
      best = std::max(best, covered);
    }
    return best;
  };
  long long best = 0;
  const long long dmax = std::max({1LL, span_of(x1), span_of(x2)});
  for (long long d = 1; d <= dmax; ++d)
    best = std::max(best, best_for_diff(x1, d, cap1) + best_for_diff(x2, d, cap2));
  return best;
}

// Direct closed form for the allowance at rung x of the ladder: the recursion
// unrolls into a max over which decrement steps shifted the profile,
//   max over z of 2^{|z|} (b/m)^{(c_r - x_r) - z_r}
//                 prod_{i<r} (b/|V_i|)^{(1 - x_i) - z_i} Delta_{v+z}(H)
// with z_i in {0, 1 - x_i} for i < r and z_r in {0, ..., c_r - x_r}.
inline sumstruct::Rat delta_closed_form(const sumstruct::PartedHypergraph& h,
                                        const sumstruct::ParamPack& p,
                                        const sumstruct::Profile& x,
                                        const sumstruct::Profile& v) {
  using sumstruct::Rat;
  const int r = p.r();
  std::vector<int> z(static_cast<std::size_t>(r), 0);
  Rat best(-1);
  for (;;) {
    sumstruct::Profile shifted = v;
    long long zsum = 0;
    for (int i = 0; i < r; ++i) {
      shifted[static_cast<std::size_t>(i)] += z[static_cast<std::size_t>(i)];
      zsum += z[static_cast<std::size_t>(i)];
    }
    Rat val = sumstruct::rat_pow2(static_cast<long>(zsum)) *
              sumstruct::rat_of(sumstruct::codegree_max(h, shifted));
    for (int i = 0; i < r - 1; ++i) {
      const long long steps = 1 - x[static_cast<std::size_t>(i)];
      for (long long sdown = z[static_cast<std::size_t>(i)]; sdown < steps; ++sdown)
        val *= sumstruct::rat_of(p.b) / sumstruct::rat_of(h.part_size(i));
    }
    for (long long sdown = z[static_cast<std::size_t>(r - 1)];
         sdown < p.c_r - x[static_cast<std::size_t>(r - 1)]; ++sdown)
      val *= sumstruct::rat_of(p.b) / sumstruct::rat_of(p.m);
    if (val > best) best = val;

    int i = 0;
    for (; i < r; ++i) {
      const long long cap = i < r - 1 ? 1 - x[static_cast<std::size_t>(i)]
                                      : p.c_r - x[static_cast<std::size_t>(i)];
      if (z[static_cast<std::size_t>(i)] < cap) {
        ++z[static_cast<std::size_t>(i)];
        break;
      }
      z[static_cast<std::size_t>(i)] = 0;
    }
    if (i == r) break;
  }
  return best;
}

}  // namespace testref
