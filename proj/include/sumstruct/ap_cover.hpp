#pragma once
// Arithmetic-progression fitting over the integers: the best single AP of
// bounded length covering a set, and the best pair of APs sharing a common
// difference covering two sets. Deterministic tie-breaking: more coverage
// first, then smaller difference, then smaller start.

#include "sumstruct/elem_set.hpp"

namespace sumstruct {

struct ApWindow {
  Elem start = 0;
  Elem diff = 1;      // positive; 1 for singleton windows
  long long len = 1;  // slots from first to last covered point

  Elem member(long long k) const { return start + k * diff; }
  bool operator==(const ApWindow& o) const { return start == o.start && diff == o.diff && len == o.len; }
};

struct CoverResult {
  ApWindow win;
  long long covered = 0;
};

struct JointCoverResult {
  ApWindow p1, p2;
  long long covered1 = 0, covered2 = 0;
  long long total() const { return covered1 + covered2; }
};

// Best AP with at most max_len slots covering x.
CoverResult best_ap_cover(const ElemSet& x, long long max_len);

// Best window restricted to one fixed difference d >= 1.
CoverResult best_ap_cover_for_diff(const ElemSet& x, Elem d, long long max_len);

// Best pair of APs with one shared difference, maximizing joint coverage
// subject to per-set length caps.
JointCoverResult best_joint_ap_cover(const ElemSet& x1, const ElemSet& x2,
                                     long long max_len1, long long max_len2);

}  // namespace sumstruct
