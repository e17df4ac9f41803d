#include "sumstruct/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "sumstruct/exact.hpp"
#include "sumstruct/oracles.hpp"
#include "sumstruct/setops.hpp"

namespace sumstruct {

namespace {

ElemSet random_subset_cyclic(Rng& rng, const GroupCtx& g, long long size) {
  std::vector<Elem> elems;
  for (long long idx : rng.pick_k_of_n(g.modulus, size)) elems.push_back(idx);
  return ElemSet(g, std::move(elems));
}

// {0, ell} plus each interior point with probability 1/2.
ElemSet random_anchored_set(Rng& rng, const GroupCtx& g, Elem ell) {
  std::vector<Elem> elems{0, ell};
  for (Elem e = 1; e < ell; ++e) {
    if (rng.coin()) elems.push_back(e);
  }
  return ElemSet(g, std::move(elems));
}

}  // namespace

KneserInstance gen_kneser_instance(Rng& rng) {
  const GroupCtx g = make_group(GroupKind::Cyclic, rng.range(6, 12));
  const long long K = 2;
  const long long s = rng.range(1, 2);
  for (;;) {
    const ElemSet u = random_subset_cyclic(rng, g, rng.range(2, g.modulus));
    const ElemSet v = random_subset_cyclic(rng, g, rng.range(2, g.modulus));
    LinkGraph graph = LinkGraph::complete(u, v);

    // Colors with exactly one representation can be removed wholesale without
    // touching condition (ii); per-vertex budgets keep the degree floors.
    std::vector<Elem> single_colors;
    for (const auto& [color, cnt] : rep_counts(u, v)) {
      if (cnt == 1) single_colors.push_back(color);
    }
    std::vector<std::pair<std::size_t, std::size_t>> singles;
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        const Elem c = g.add(u.elems[i], v.elems[j]);
        if (std::binary_search(single_colors.begin(), single_colors.end(), c))
          singles.emplace_back(i, j);
      }
    }
    rng.shuffle(singles);
    std::vector<long long> left_budget(u.size(), s), right_budget(v.size(), s);
    long long killed = 0;
    const long long want = rng.range(1, 3);
    for (const auto& [i, j] : singles) {
      if (killed == want) break;
      if (left_budget[i] > 0 && right_budget[j] > 0) {
        graph.reset(i, j);
        --left_budget[i];
        --right_budget[j];
        ++killed;
      }
    }
    if (killed == 0) continue;  // no removable color; resample the sets
    graph = popular_augment(graph, K);  // no-op here, kept as the construction's final step
    return KneserInstance{std::move(graph), K, s, killed};
  }
}

Almost1Instance gen_almost1_instance(Rng& rng) {
  const GroupCtx g = make_group(GroupKind::Integers);
  const long long K = 2;
  const long long s = rng.range(0, 2);
  for (;;) {
    const Elem ell = rng.range(5, 12);
    const Elem ell2 = std::min<Elem>(ell, rng.range(2, ell));
    ElemSet u = random_anchored_set(rng, g, ell);
    ElemSet v = random_anchored_set(rng, g, ell2);
    const NormalizedPair np = normalize(u, v);
    u = np.u;
    v = np.v;
    if (v.max() > u.max()) std::swap(u, v);

    LinkGraph graph = LinkGraph::complete(u, v);
    std::vector<long long> left_cnt(u.size(), 0), right_cnt(v.size(), 0);
    const long long tries = rng.range(0, 2 * s);
    for (long long a = 0; a < tries; ++a) {
      const std::size_t i = static_cast<std::size_t>(rng.below(u.size()));
      const std::size_t j = static_cast<std::size_t>(rng.below(v.size()));
      if (graph.has(i, j) && left_cnt[i] < s && right_cnt[j] < s) {
        graph.reset(i, j);
        ++left_cnt[i];
        ++right_cnt[j];
      }
    }
    graph = popular_augment(graph, K);
    if (!regularity_report(graph, K, s).is_regular) continue;
    return Almost1Instance{std::move(u), std::move(v), std::move(graph), K, s};
  }
}

FreimanInstance gen_freiman_instance(Rng& rng) {
  const GroupCtx g = make_group(GroupKind::Integers);
  const Elem d = rng.range(1, 3);
  const long long n_small = rng.range(55, 80);
  const long long m_large = rng.range(n_small, 100);
  const bool u_is_small = rng.coin();
  const long long su = u_is_small ? n_small : m_large;
  const long long sv = u_is_small ? m_large : n_small;
  const ElemSet u = make_ap(g, rng.range(-50, 50), d, su);
  const ElemSet v = make_ap(g, rng.range(-50, 50), d, sv);

  // Smallest double eps with M^2 eps >= 4 exactly, so the size hypothesis
  // cannot be lost to rounding.
  double eps = 4.0 / static_cast<double>(m_large * m_large);
  while (rat_from_double(eps) * static_cast<long>(m_large) * static_cast<long>(m_large) < 4)
    eps = std::nextafter(eps, 1.0);

  LinkGraph graph = LinkGraph::complete(u, v);
  const Rat budget_r = rat_from_double(eps) * static_cast<long>(su) * static_cast<long>(sv);
  const long long budget =
      static_cast<long long>(mpz_class(budget_r.get_num() / budget_r.get_den()).get_si());
  long long deleted = 0;
  const long long want = rng.range(0, budget);
  while (deleted < want) {
    const std::size_t i = static_cast<std::size_t>(rng.below(u.size()));
    const std::size_t j = static_cast<std::size_t>(rng.below(v.size()));
    if (graph.has(i, j)) {
      graph.reset(i, j);
      ++deleted;
    }
  }
  return FreimanInstance{u, v, std::move(graph), eps, deleted};
}

RelStabInstance gen_relstab_instance(Rng& rng) {
  const GroupCtx g = make_group(GroupKind::Integers);
  const long long s1 = rng.range(3, 6);
  const long long s2 = rng.range(s1, 8);
  const Elem d = rng.range(1, 3);
  const long long L = rng.range(100, 160);
  const long long len1 = s1 * L / (s1 + s2);
  const long long len2 = s2 * L / (s1 + s2);
  const ElemSet a1 = make_ap(g, rng.range(-30, 30), d, len1);
  const ElemSet a2 = make_ap(g, rng.range(-30, 30), d, len2);
  ElemSet b = sumset(a1, a2);

  // Largest double eps within the admissibility cap 2^-8 (s1/(s1+s2))^2.
  const Rat cap = rat_pow2(-8) * Rat(static_cast<long>(s1)) * static_cast<long>(s1) /
                  (Rat(static_cast<long>(s1 + s2)) * static_cast<long>(s1 + s2));
  double eps = rat_to_double(cap);
  while (rat_from_double(eps) > cap) eps = std::nextafter(eps, 0.0);

  long long removed = 0;
  if (rng.below(3) == 0 && b.size() > 4) {
    // Punch a few interior holes: a near-complete b exercises the bad-pair arm.
    std::vector<Elem> elems = b.elems;
    const long long k = rng.range(1, 3);
    for (long long a = 0; a < k; ++a) {
      const std::size_t at = 1 + static_cast<std::size_t>(rng.below(elems.size() - 2));
      elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(at));
      ++removed;
    }
    b = ElemSet(g, std::move(elems));
  }
  return RelStabInstance{a1, a2, std::move(b), s1, s2, eps, removed};
}

}  // namespace sumstruct
