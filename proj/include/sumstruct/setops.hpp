#pragma once
// Finite-set arithmetic: sumsets, representation counts, normalization to a
// gcd-reduced zero-based form, hull length and hole count.

#include <utility>
#include <vector>

#include "sumstruct/elem_set.hpp"

namespace sumstruct {

// Sorted (element, count) pairs; counts always sum to |U|*|V|.
using RepCounts = std::vector<std::pair<Elem, long long>>;

// Exact sumset {x+y : x in a, y in b}. Empty if either side is empty.
ElemSet sumset(const ElemSet& a, const ElemSet& b);

// r_{U,V}(x) for every x in the sumset.
RepCounts rep_counts(const ElemSet& u, const ElemSet& v);

// Record of the invertible transform applied by normalize():
// original = divisor * normalized + shift (per side); a sum x of
// normalized elements pulls back to divisor * x + u_shift + v_shift.
struct NormalizeRecord {
  Elem u_shift = 0;
  Elem v_shift = 0;
  Elem divisor = 1;
};

struct NormalizedPair {
  ElemSet u, v;
  NormalizeRecord rec;
};

// Translates each set so its minimum is 0, then divides both by
// gcd(u' unified with v'); gcd of all-zero data is taken as 1 so singletons map to {0}.
NormalizedPair normalize(const ElemSet& u, const ElemSet& v);

// Hull length max - min + 1.
Elem hull_len(const ElemSet& x);

// Hole count, by the convention hull_len - |x| + 1 (an interval counts 1).
Elem holes(const ElemSet& x);

}  // namespace sumstruct
