#pragma once
// Seeded instance generators for the structural checks. Blind sampling almost
// never hits the theorems' hypotheses, so each generator starts from a shape
// that satisfies them by construction (intervals, aligned APs, complete link
// graphs) and then perturbs within an exactly-tracked budget.

#include "sumstruct/elem_set.hpp"
#include "sumstruct/link_graph.hpp"
#include "sumstruct/util.hpp"

namespace sumstruct {

struct KneserInstance {
  LinkGraph g;
  long long K = 0;
  long long s = 0;
  long long colors_killed = 0;  // colors removed from the restricted sumset
};

// Random u, v in a small cyclic group; complete link graph minus whole color
// classes of multiplicity one, within a per-vertex deletion budget of s.
// The result is (K,s)-regular; colors_killed >= 1 makes the restricted sumset
// a proper subset of the full one.
KneserInstance gen_kneser_instance(Rng& rng);

struct Almost1Instance {
  ElemSet u, v;
  LinkGraph g;
  long long K = 0;
  long long s = 0;
};

// Normalized integer sets ({0, ell} plus random interior, joint gcd 1) with a
// complete-minus-budget link graph re-closed under popular_augment.
Almost1Instance gen_almost1_instance(Rng& rng);

struct FreimanInstance {
  ElemSet u, v;
  LinkGraph g;
  double eps = 0;
  long long deleted = 0;
};

// Aligned APs with a common difference, eps tuned to the larger size, and at
// most floor(eps |u||v|) random link deletions.
FreimanInstance gen_freiman_instance(Rng& rng);

struct RelStabInstance {
  ElemSet a1, a2, b;
  long long s1 = 0, s2 = 0;
  double eps = 0;
  long long b_removed = 0;  // points removed from a1 + a2 to form b
};

// Aligned APs with |a_i| close to the s_i-proportional share of |b|.
RelStabInstance gen_relstab_instance(Rng& rng);

}  // namespace sumstruct
