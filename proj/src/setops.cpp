#include "sumstruct/setops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumstruct {

namespace {

void require_same_group(const ElemSet& a, const ElemSet& b) {
  if (a.group != b.group) throw std::invalid_argument("sets live in different groups");
}

}  // namespace

ElemSet sumset(const ElemSet& a, const ElemSet& b) {
  require_same_group(a, b);
  const GroupCtx& g = a.group;
  if (a.empty() || b.empty()) return ElemSet(g, {});

  if (g.is_cyclic() && g.modulus <= ElemSet::kBitsetCutoff) {
    BitVec out(static_cast<std::size_t>(g.modulus));
    BitVec bb(static_cast<std::size_t>(g.modulus));
    for (Elem e : b.elems) bb.set(static_cast<std::size_t>(e));
    for (Elem e : a.elems) out.or_rotated(bb, static_cast<std::size_t>(e));
    std::vector<Elem> v;
    for (Elem x = 0; x < g.modulus; ++x)
      if (out.test(static_cast<std::size_t>(x))) v.push_back(x);
    return ElemSet(g, std::move(v));
  }

  if (!g.is_cyclic()) {
    // Word-parallel shift-or convolution when the result span is small.
    const Elem lo = a.min() + b.min(), hi = g.add(a.max(), b.max());
    const Elem span = hi - lo + 1;
    if (span <= ElemSet::kBitsetCutoff) {
      BitVec out(static_cast<std::size_t>(span));
      BitVec bb(static_cast<std::size_t>(b.max() - b.min() + 1));
      for (Elem e : b.elems) bb.set(static_cast<std::size_t>(e - b.min()));
      for (Elem e : a.elems) out.or_shifted(bb, static_cast<std::size_t>(e - a.min()));
      std::vector<Elem> v;
      for (Elem x = 0; x < span; ++x)
        if (out.test(static_cast<std::size_t>(x))) v.push_back(lo + x);
      return ElemSet(g, std::move(v));
    }
  }

  std::vector<Elem> v;
  v.reserve(a.size() * b.size());
  for (Elem x : a.elems)
    for (Elem y : b.elems) v.push_back(g.add(x, y));
  return ElemSet(g, std::move(v));
}

RepCounts rep_counts(const ElemSet& u, const ElemSet& v) {
  require_same_group(u, v);
  const GroupCtx& g = u.group;
  RepCounts out;
  if (u.empty() || v.empty()) return out;

  // Dense accumulation over the result span when it is small.
  Elem lo, span;
  if (g.is_cyclic()) {
    lo = 0;
    span = g.modulus;
  } else {
    lo = u.min() + v.min();
    span = g.add(u.max(), v.max()) - lo + 1;
  }
  if (span <= ElemSet::kBitsetCutoff) {
    std::vector<long long> cnt(static_cast<std::size_t>(span), 0);
    for (Elem x : u.elems)
      for (Elem y : v.elems) ++cnt[static_cast<std::size_t>(g.add(x, y) - lo)];
    for (Elem d = 0; d < span; ++d)
      if (cnt[static_cast<std::size_t>(d)]) out.emplace_back(lo + d, cnt[static_cast<std::size_t>(d)]);
    return out;
  }

  std::vector<Elem> sums;
  sums.reserve(u.size() * v.size());
  for (Elem x : u.elems)
    for (Elem y : v.elems) sums.push_back(g.add(x, y));
  std::sort(sums.begin(), sums.end());
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    out.emplace_back(sums[i], static_cast<long long>(j - i));
    i = j;
  }
  return out;
}

NormalizedPair normalize(const ElemSet& u, const ElemSet& v) {
  require_same_group(u, v);
  if (u.group.is_cyclic()) throw std::invalid_argument("normalize is defined over the integers");
  if (u.empty() || v.empty()) throw std::invalid_argument("normalize needs nonempty sets");

  NormalizedPair out;
  out.rec.u_shift = u.min();
  out.rec.v_shift = v.min();
  Elem g = 0;
  auto shift_gcd = [&](const ElemSet& s, Elem base) {
    for (Elem e : s.elems) g = std::gcd(g, e - base);
  };
  shift_gcd(u, out.rec.u_shift);
  shift_gcd(v, out.rec.v_shift);
  if (g == 0) g = 1;  // both sets are singletons
  out.rec.divisor = g;

  auto apply = [&](const ElemSet& s, Elem base) {
    std::vector<Elem> w;
    w.reserve(s.size());
    for (Elem e : s.elems) w.push_back((e - base) / g);
    return ElemSet(s.group, std::move(w));
  };
  out.u = apply(u, out.rec.u_shift);
  out.v = apply(v, out.rec.v_shift);
  return out;
}

Elem hull_len(const ElemSet& x) {
  if (x.empty()) throw std::invalid_argument("hull of an empty set");
  if (x.group.is_cyclic()) throw std::invalid_argument("hull length is defined over the integers");
  return x.max() - x.min() + 1;
}

Elem holes(const ElemSet& x) { return hull_len(x) - static_cast<Elem>(x.size()) + 1; }

}  // namespace sumstruct
