#pragma once
// Container families for pairs of sets with a small sumset. The tripartite
// "sum hypergraph" on parts (A_1, A_2, A_3) has an edge (x, y, x+y) for every
// x in A_1, y in A_2 with x+y in A_3. Starting from (F_1, F_2, F_1+F_2), each
// admissible pair (|X_1| = s_1, |X_2| = s_2, |X_1+X_2| <= m) drives a
// root-to-leaf walk: at an internal node the pair induces an independent set
// whose container becomes the next node; at a leaf the walk stops. Qualifying
// leaves (parts still >= s_i, excluded region B = F \ A_3 of size <= m) form
// the family. Every admissible pair then satisfies X_1 <= A_1, X_2 <= A_2,
// B <= X_1 + X_2 for some family entry.

#include <string>
#include <vector>

#include "sumstruct/containers.hpp"
#include "sumstruct/elem_set.hpp"
#include "sumstruct/hypergraph.hpp"

namespace sumstruct {

struct TripleHypergraph {
  ElemSet a1, a2, a3;
};

// Number of (x, y) with x in a1, y in a2, x+y in a3.
long long triple_edge_count(const TripleHypergraph& t);

// Three-part cap-(1,1,1) hypergraph whose vertex labels are the elements.
PartedHypergraph to_parted(const TripleHypergraph& t);

enum class LeafKind {
  none,             // internal node
  small_container,  // some side part dropped below its target size
  small_max,        // max side size fell under m / ln n
  small_last,       // sum part lost more than m elements
  few_edges,        // edge count fell under eps^2 |A_1||A_2|
};
const char* leaf_kind_name(LeafKind k);

struct FamilyEntry {
  ElemSet a1, a2;
  ElemSet b;  // excluded sum region F \ A_3
  LeafKind leaf_kind = LeafKind::none;
};

struct TreeStats {
  long long nodes = 0;
  long long internal_nodes = 0;
  long long leaves = 0;
  long long family_size = 0;
  long long admissible_pairs = 0;
  long long height = 0;      // longest walk, in container steps
  long long height_cap = 0;  // ceil(2^18 eps^-2 ln n)
  bool height_ok = true;
  long long max_branching = 0;
  bool children_bound_ok = true;  // each node's fan-out <= n^{4b}
  long long q = 0;                // max(1, floor(m / ln n))
  long long b = 0;                // ceil(sqrt(q))
  bool regime_s2 = true;          // ln n <= s2 <= m
  bool regime_m = true;           // m <= s1^2 ln n
  bool any_m_clamped = false;     // some node ran with m cut to |A_3|
  bool any_b_clamped = false;     // some node ran with b or q cut to fit its parts
  long long leaf_small_container = 0;
  long long leaf_small_max = 0;
  long long leaf_small_last = 0;
  long long leaf_few_edges = 0;
  double family_log_bound = 0.0;  // 2^20 eps^-2 sqrt(m) (ln n)^{3/2}
  bool family_size_ok = true;     // |family| <= exp(family_log_bound)
};

struct FamilyResult {
  std::vector<FamilyEntry> family;
  TreeStats stats;
};

// Builds the container family for ground sets f1, f2 (equal sizes >= 2).
// The working-regime bounds (ln n <= s2 <= m <= s1^2 ln n) are recorded in
// the stats rather than enforced. Throws when |f1| != |f2|, sizes or m are
// nonpositive, eps is outside (0,1), or the pair space exceeds the
// enumeration budget.
FamilyResult build_family(const GroupCtx& g, const ElemSet& f1, const ElemSet& f2,
                          long long s1, long long s2, long long m, double eps);

struct FamilyReport {
  long long entries = 0;
  long long pairs_checked = 0;
  long long uncovered_pairs = 0;        // admissible pair matching no entry
  long long size_violations = 0;        // entry with |A_i| < s_i or |B| > m
  long long property2_failures = 0;     // entry with big sides and many escaping pairs
  bool size_bound_ok = true;
  long long essential_entries = 0;      // unique cover of at least one pair
  long long redundant_entries = 0;      // removable without losing coverage
  bool ok() const {
    return uncovered_pairs == 0 && size_violations == 0 && property2_failures == 0 &&
           size_bound_ok;
  }
};

// Re-derives every guarantee from scratch: full coverage of the admissible
// pairs, per-entry size bounds, the "small max or few escaping pairs"
// alternative, and the family-size bound; also classifies entries as
// essential or redundant.
FamilyReport verify_family(const std::vector<FamilyEntry>& family, const GroupCtx& g,
                           const ElemSet& f1, const ElemSet& f2, long long s1,
                           long long s2, long long m, double eps);

}  // namespace sumstruct
