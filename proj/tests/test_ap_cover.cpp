#include <doctest.h>

#include "sumstruct/ap_cover.hpp"
#include "sumstruct/util.hpp"
#include "test_support.hpp"

using namespace sumstruct;

namespace {
const GroupCtx Z = make_group(GroupKind::Integers);
}

TEST_CASE("single AP cover on fixed examples") {
  const CoverResult self = best_ap_cover(make_ap(Z, 0, 3, 5), 5);
  CHECK(self.covered == 5);
  CHECK(self.win.diff == 3);
  CHECK(self.win.start == 0);

  const CoverResult four = best_ap_cover(ElemSet(Z, {0, 2, 4, 6, 100}), 4);
  CHECK(four.covered == 4);
  CHECK(four.win == ApWindow{0, 2, 4});

  const CoverResult point = best_ap_cover(ElemSet(Z, {0, 1}), 1);
  CHECK(point.covered == 1);
}

TEST_CASE("joint AP cover on fixed examples") {
  const JointCoverResult aligned =
      best_joint_ap_cover(make_ap(Z, 0, 2, 4), make_ap(Z, 1, 2, 6), 4, 6);
  CHECK(aligned.covered1 == 4);
  CHECK(aligned.covered2 == 6);

  // Two candidates tie at total 4; the smaller shared difference wins.
  const JointCoverResult tie =
      best_joint_ap_cover(ElemSet(Z, {0, 5, 10}), ElemSet(Z, {0, 3, 6}), 3, 3);
  CHECK(tie.total() == 4);
  CHECK(tie.covered2 == 3);
  CHECK(tie.p2.diff == 3);

  const JointCoverResult dots =
      best_joint_ap_cover(ElemSet(Z, {0}), ElemSet(Z, {0}), 1, 1);
  CHECK(dots.total() == 2);
}

TEST_CASE("window reports are internally consistent") {
  Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const auto raw = rng.pick_k_of_n(20, rng.range(1, 6));
    const ElemSet x(Z, std::vector<Elem>(raw.begin(), raw.end()));
    const long long cap = rng.range(1, 7);
    const CoverResult c = best_ap_cover(x, cap);
    CHECK(c.win.len <= cap);
    CHECK(c.win.diff >= 1);
    long long recount = 0;
    for (long long k = 0; k < c.win.len; ++k)
      if (x.contains(c.win.member(k))) ++recount;
    CHECK(recount == c.covered);
    // The first and last slots of a best window always hit the set.
    CHECK(x.contains(c.win.member(0)));
    CHECK(x.contains(c.win.member(c.win.len - 1)));
  }
}

TEST_CASE("single cover matches exhaustive search on random small sets") {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto raw = rng.pick_k_of_n(15, rng.range(1, 6));
    const std::vector<long long> x(raw.begin(), raw.end());
    const ElemSet xs(Z, std::vector<Elem>(x.begin(), x.end()));
    for (long long cap : {1LL, 2LL, 4LL, 6LL}) {
      CHECK(best_ap_cover(xs, cap).covered == testref::ap_cover_brute(x, cap));
    }
  }
}

TEST_CASE("joint cover matches exhaustive search on random small sets") {
  Rng rng(29);
  for (int trial = 0; trial < 150; ++trial) {
    const auto raw1 = rng.pick_k_of_n(13, rng.range(1, 5));
    const auto raw2 = rng.pick_k_of_n(13, rng.range(1, 5));
    const std::vector<long long> x1(raw1.begin(), raw1.end());
    const std::vector<long long> x2(raw2.begin(), raw2.end());
    const ElemSet s1(Z, std::vector<Elem>(x1.begin(), x1.end()));
    const ElemSet s2(Z, std::vector<Elem>(x2.begin(), x2.end()));
    const long long cap1 = rng.range(1, 5), cap2 = rng.range(1, 5);
    const JointCoverResult j = best_joint_ap_cover(s1, s2, cap1, cap2);
    CHECK(j.total() == testref::joint_cover_brute(x1, x2, cap1, cap2));
  }
}

TEST_CASE("fixed-difference cover is dominated by the free search") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto raw = rng.pick_k_of_n(18, rng.range(2, 6));
    const ElemSet x(Z, std::vector<Elem>(raw.begin(), raw.end()));
    const CoverResult free = best_ap_cover(x, 5);
    for (Elem d = 1; d <= 6; ++d) {
      const CoverResult fixed = best_ap_cover_for_diff(x, d, 5);
      CHECK(fixed.covered <= free.covered);
      if (d == free.win.diff) CHECK(fixed.covered == free.covered);
    }
  }
}
