#include "sumstruct/ap_cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "sumstruct/setops.hpp"

namespace sumstruct {

namespace {

void require_fit_input(const ElemSet& x) {
  if (x.group.is_cyclic()) throw std::invalid_argument("AP fitting is defined over the integers");
  if (x.empty()) throw std::invalid_argument("AP fitting needs a nonempty set");
}

// Best window of difference d and at most max_len slots. Ties within one
// difference are resolved toward the smaller start.
CoverResult best_for_diff(const ElemSet& x, Elem d, long long max_len) {
  CoverResult best;
  best.covered = 0;
  std::unordered_map<Elem, std::vector<Elem>> buckets;  // residue -> ascending slot index
  for (Elem e : x.elems) {
    Elem r = e % d;
    if (r < 0) r += d;
    buckets[r].push_back((e - r) / d);
  }
  for (auto& [r, q] : buckets) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      while (q[j] - q[i] + 1 > max_len) ++i;
      const long long cov = static_cast<long long>(j - i + 1);
      const Elem start = q[i] * d + r;
      if (cov > best.covered || (cov == best.covered && start < best.win.start)) {
        best.covered = cov;
        best.win.start = start;
        best.win.diff = cov == 1 ? 1 : d;
        best.win.len = q[j] - q[i] + 1;
      }
    }
  }
  return best;
}

CoverResult singleton_cover(const ElemSet& x) {
  CoverResult c;
  c.covered = 1;
  c.win = ApWindow{x.min(), 1, 1};
  return c;
}

}  // namespace

CoverResult best_ap_cover_for_diff(const ElemSet& x, Elem d, long long max_len) {
  require_fit_input(x);
  if (d < 1) throw std::invalid_argument("difference must be >= 1");
  if (max_len < 1) throw std::invalid_argument("length cap must be >= 1");
  return best_for_diff(x, d, max_len);
}

CoverResult best_ap_cover(const ElemSet& x, long long max_len) {
  require_fit_input(x);
  if (max_len < 1) throw std::invalid_argument("length cap must be >= 1");
  CoverResult best = singleton_cover(x);
  if (max_len == 1 || x.size() == 1) return best;
  const Elem hull = hull_len(x);
  for (Elem d = 1; d <= hull; ++d) {
    const CoverResult c = best_for_diff(x, d, max_len);
    if (c.covered > best.covered) best = c;
    if (best.covered == static_cast<long long>(x.size())) break;  // cannot improve; smallest d wins
  }
  return best;
}

JointCoverResult best_joint_ap_cover(const ElemSet& x1, const ElemSet& x2,
                                     long long max_len1, long long max_len2) {
  require_fit_input(x1);
  require_fit_input(x2);
  if (max_len1 < 1 || max_len2 < 1) throw std::invalid_argument("length caps must be >= 1");

  JointCoverResult best;
  best.covered1 = 1;
  best.covered2 = 1;
  best.p1 = singleton_cover(x1).win;
  best.p2 = singleton_cover(x2).win;

  const Elem hull = std::max(x1.size() > 1 ? hull_len(x1) : 1, x2.size() > 1 ? hull_len(x2) : 1);
  for (Elem d = 1; d <= hull; ++d) {
    const CoverResult c1 = best_for_diff(x1, d, max_len1);
    const CoverResult c2 = best_for_diff(x2, d, max_len2);
    if (c1.covered + c2.covered > best.total()) {
      best.p1 = c1.win;
      best.p2 = c2.win;
      best.covered1 = c1.covered;
      best.covered2 = c2.covered;
    }
    if (best.total() == static_cast<long long>(x1.size() + x2.size())) break;
  }
  return best;
}

}  // namespace sumstruct
