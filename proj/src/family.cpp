#include "sumstruct/family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sumstruct/exact.hpp"
#include "sumstruct/oracles.hpp"
#include "sumstruct/setops.hpp"

namespace sumstruct {

namespace {

constexpr long long kPairBudget = 5'000'000;

using TripleKey = std::array<std::vector<Elem>, 3>;

TripleKey key_of(const TripleHypergraph& t) {
  return {t.a1.elems, t.a2.elems, t.a3.elems};
}

// Ascending-index k-subset enumeration of base.
void each_subset(const std::vector<Elem>& base, long long k,
                 const std::function<void(const std::vector<Elem>&)>& fn) {
  const long long n = static_cast<long long>(base.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn({});
    return;
  }
  std::vector<long long> idx(k);
  std::iota(idx.begin(), idx.end(), 0LL);
  std::vector<Elem> cur(k);
  while (true) {
    for (long long i = 0; i < k; ++i) cur[i] = base[idx[i]];
    fn(cur);
    long long i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool subset_of(const ElemSet& x, const ElemSet& y) {
  return std::includes(y.elems.begin(), y.elems.end(), x.elems.begin(), x.elems.end());
}

void check_ground_sets(const GroupCtx& g, const ElemSet& f1, const ElemSet& f2,
                       long long s1, long long s2, long long m, double eps) {
  if (f1.group != g || f2.group != g)
    throw std::invalid_argument("ground sets must live in the given group");
  if (f1.size() != f2.size()) throw std::invalid_argument("ground sets must have equal size");
  if (f1.size() < 2) throw std::invalid_argument("need at least two elements per side");
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("target sizes must be positive");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const long long n = static_cast<long long>(f1.size());
  if (binom(n, s1) * binom(n, s2) > Int(static_cast<long>(kPairBudget)))
    throw std::invalid_argument("pair space exceeds the enumeration budget");
}

}  // namespace

long long triple_edge_count(const TripleHypergraph& t) {
  long long total = 0;
  for (const auto& [elem, cnt] : rep_counts(t.a1, t.a2))
    if (t.a3.contains(elem)) total += cnt;
  return total;
}

PartedHypergraph to_parted(const TripleHypergraph& t) {
  PartedHypergraph h({t.a1.elems, t.a2.elems, t.a3.elems}, {1, 1, 1});
  const GroupCtx& g = t.a1.group;
  const int n1 = static_cast<int>(t.a1.size());
  const int n2 = static_cast<int>(t.a2.size());
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const Elem z = g.canon(g.add(t.a1.elems[i], t.a2.elems[j]));
      const auto it = std::lower_bound(t.a3.elems.begin(), t.a3.elems.end(), z);
      if (it == t.a3.elems.end() || *it != z) continue;
      const int k = static_cast<int>(it - t.a3.elems.begin());
      h.add_edge({i, n1 + j, n1 + n2 + k});
    }
  }
  return h;
}

const char* leaf_kind_name(LeafKind k) {
  switch (k) {
    case LeafKind::none: return "internal";
    case LeafKind::small_container: return "small_container";
    case LeafKind::small_max: return "small_max";
    case LeafKind::small_last: return "small_last";
    case LeafKind::few_edges: return "few_edges";
  }
  return "?";
}

FamilyResult build_family(const GroupCtx& g, const ElemSet& f1, const ElemSet& f2,
                          long long s1, long long s2, long long m, double eps) {
  check_ground_sets(g, f1, f2, s1, s2, m, eps);
  const long long n = static_cast<long long>(f1.size());
  const Rat eps_r = rat_from_double(eps);
  const Rat eps2 = eps_r * eps_r;
  const Rat R = Rat(1) / eps2;
  const ElemSet F = sumset(f1, f2);
  const long long f_size = static_cast<long long>(F.size());

  FamilyResult result;
  TreeStats& st = result.stats;
  st.q = std::max(1LL, floor_div_ln(m, n));
  st.b = ceil_sqrt_ll(st.q);
  st.height_cap = ceil_mul_ln(rat_pow2(18) * R, n);
  st.regime_s2 = cmp_mul_ln(Rat(1), n, Rat(static_cast<long>(s2))) <= 0 && s2 <= m;
  st.regime_m = cmp_mul_ln(Rat(static_cast<long>(s1 * s1)), n,
                           Rat(static_cast<long>(m))) >= 0;
  st.family_log_bound = std::pow(2.0, 20) / (eps * eps) * std::sqrt(static_cast<double>(m)) *
                        std::pow(std::log(static_cast<double>(n)), 1.5);

  struct Node {
    TripleHypergraph triple;
    LeafKind kind = LeafKind::none;
    bool qualifies = false;
    std::unique_ptr<PartedHypergraph> parted;
    std::unique_ptr<ParamPack> params;
    std::unique_ptr<DeltaTable> table;
    std::set<int> children;
    long long b_eff = 0;
  };
  std::vector<Node> nodes;
  std::map<TripleKey, int> index;

  const auto intern = [&](TripleHypergraph t) -> int {
    TripleKey key = key_of(t);
    const auto it = index.find(key);
    if (it != index.end()) return it->second;
    Node nd;
    nd.triple = std::move(t);
    const long long sz1 = static_cast<long long>(nd.triple.a1.size());
    const long long sz2 = static_cast<long long>(nd.triple.a2.size());
    const long long sz3 = static_cast<long long>(nd.triple.a3.size());
    if (sz1 < s1 || sz2 < s2) {
      nd.kind = LeafKind::small_container;
    } else if (cmp_mul_ln(Rat(static_cast<long>(std::max(sz1, sz2))), n,
                          Rat(static_cast<long>(m))) < 0) {
      nd.kind = LeafKind::small_max;
    } else if (sz3 < f_size - m) {
      nd.kind = LeafKind::small_last;
    } else if (Rat(static_cast<long>(triple_edge_count(nd.triple))) <
               eps2 * Rat(static_cast<long>(sz1 * sz2))) {
      nd.kind = LeafKind::few_edges;
    }
    nd.qualifies = nd.kind != LeafKind::none && sz1 >= s1 && sz2 >= s2 && f_size - sz3 <= m;
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(nd));
    index.emplace(std::move(key), id);
    return id;
  };

  const auto expand = [&](int node_id, const ElemSet& x1, const ElemSet& x2,
                          const ElemSet& s12) -> int {
    Node& nd = nodes[node_id];
    if (!nd.parted) {
      nd.parted = std::make_unique<PartedHypergraph>(to_parted(nd.triple));
      const long long sz1 = static_cast<long long>(nd.triple.a1.size());
      const long long sz2 = static_cast<long long>(nd.triple.a2.size());
      const long long sz3 = static_cast<long long>(nd.triple.a3.size());
      const long long m_eff = std::min(m, sz3);
      const long long q_eff = std::min(st.q, m_eff);
      const long long b_eff = std::min({ceil_sqrt_ll(q_eff), sz1, sz2, m_eff});
      if (m_eff < m) st.any_m_clamped = true;
      if (q_eff < st.q || b_eff < st.b) st.any_b_clamped = true;
      nd.b_eff = b_eff;
      nd.params = std::make_unique<ParamPack>(make_params(*nd.parted, m, b_eff, q_eff, R));
      nd.table = std::make_unique<DeltaTable>(*nd.parted, *nd.params);
    }
    const PartedHypergraph& h = *nd.parted;
    std::vector<int> I;
    long long found1 = 0, found2 = 0;
    for (int vid : h.parts[0])
      if (x1.contains(h.label[vid])) {
        I.push_back(vid);
        ++found1;
      }
    for (int vid : h.parts[1])
      if (x2.contains(h.label[vid])) {
        I.push_back(vid);
        ++found2;
      }
    if (found1 != static_cast<long long>(x1.size()) ||
        found2 != static_cast<long long>(x2.size()))
      throw std::logic_error("walk invariant broken: pair escaped its node");
    for (int vid : h.parts[2])
      if (!s12.contains(h.label[vid])) I.push_back(vid);

    const ContainerRecord rec = build_container(h, I, *nd.params, *nd.table);
    TripleHypergraph child;
    const GroupCtx& grp = nd.triple.a1.group;
    std::vector<Elem> l1, l2, l3;
    for (int vid : rec.container[0]) l1.push_back(h.label[vid]);
    for (int vid : rec.container[1]) l2.push_back(h.label[vid]);
    for (int vid : rec.container[2]) l3.push_back(h.label[vid]);
    child.a1 = ElemSet(grp, std::move(l1));
    child.a2 = ElemSet(grp, std::move(l2));
    child.a3 = ElemSet(grp, std::move(l3));
    const int cid = intern(std::move(child));
    nodes[node_id].children.insert(cid);
    return cid;
  };

  const int root = intern(TripleHypergraph{f1, f2, F});
  std::set<int> family_ids;

  each_subset(f1.elems, s1, [&](const std::vector<Elem>& e1) {
    const ElemSet x1(g, e1);
    each_subset(f2.elems, s2, [&](const std::vector<Elem>& e2) {
      const ElemSet x2(g, e2);
      const ElemSet s12 = sumset(x1, x2);
      if (static_cast<long long>(s12.size()) > m) return;
      st.admissible_pairs++;
      int cur = root;
      long long depth = 0;
      while (nodes[cur].kind == LeafKind::none) {
        cur = expand(cur, x1, x2, s12);
        ++depth;
        if (depth > st.height_cap) st.height_ok = false;
        if (depth > 4 * st.height_cap + 64)
          throw std::logic_error("family walk failed to reach a leaf");
      }
      st.height = std::max(st.height, depth);
      if (nodes[cur].qualifies) family_ids.insert(cur);
    });
  });

  st.nodes = static_cast<long long>(nodes.size());
  Int n_pow;
  mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(4 * st.b));
  for (const Node& nd : nodes) {
    if (nd.kind == LeafKind::none) {
      st.internal_nodes++;
      const long long fan = static_cast<long long>(nd.children.size());
      st.max_branching = std::max(st.max_branching, fan);
      if (nd.parted) {
        Int cap(1);
        for (int i = 0; i < 3; ++i) {
          Int per(0);
          for (long long k = 0; k <= nd.b_eff; ++k)
            per += binom(nd.parted->part_size(i), k);
          cap *= per;
        }
        if (Int(static_cast<long>(fan)) > cap || Int(static_cast<long>(fan)) > n_pow)
          st.children_bound_ok = false;
      }
    } else {
      st.leaves++;
      switch (nd.kind) {
        case LeafKind::small_container: st.leaf_small_container++; break;
        case LeafKind::small_max: st.leaf_small_max++; break;
        case LeafKind::small_last: st.leaf_small_last++; break;
        case LeafKind::few_edges: st.leaf_few_edges++; break;
        case LeafKind::none: break;
      }
    }
  }

  for (int id : family_ids) {
    const Node& nd = nodes[id];
    std::vector<Elem> missing;
    for (Elem z : F.elems)
      if (!nd.triple.a3.contains(z)) missing.push_back(z);
    FamilyEntry entry;
    entry.a1 = nd.triple.a1;
    entry.a2 = nd.triple.a2;
    entry.b = ElemSet(g, std::move(missing));
    entry.leaf_kind = nd.kind;
    result.family.push_back(std::move(entry));
  }
  st.family_size = static_cast<long long>(result.family.size());
  if (st.family_size > 0)
    st.family_size_ok =
        std::log(static_cast<double>(st.family_size)) <= st.family_log_bound;
  return result;
}

FamilyReport verify_family(const std::vector<FamilyEntry>& family, const GroupCtx& g,
                           const ElemSet& f1, const ElemSet& f2, long long s1,
                           long long s2, long long m, double eps) {
  check_ground_sets(g, f1, f2, s1, s2, m, eps);
  const long long n = static_cast<long long>(f1.size());
  const Rat eps_r = rat_from_double(eps);
  const Rat eps2 = eps_r * eps_r;

  FamilyReport rep;
  rep.entries = static_cast<long long>(family.size());

  for (const FamilyEntry& e : family) {
    const long long sz1 = static_cast<long long>(e.a1.size());
    const long long sz2 = static_cast<long long>(e.a2.size());
    if (sz1 < s1 || sz2 < s2 || static_cast<long long>(e.b.size()) > m)
      rep.size_violations++;
    const bool small_max = cmp_mul_ln(Rat(static_cast<long>(std::max(sz1, sz2))), n,
                                      Rat(static_cast<long>(m))) <= 0;
    const bool few_escape = Rat(static_cast<long>(supersat_count(e.a1, e.a2, e.b))) <=
                            eps2 * Rat(static_cast<long>(sz1 * sz2));
    if (!small_max && !few_escape) rep.property2_failures++;
  }

  std::vector<bool> essential(family.size(), false);
  each_subset(f1.elems, s1, [&](const std::vector<Elem>& e1) {
    const ElemSet x1(g, e1);
    each_subset(f2.elems, s2, [&](const std::vector<Elem>& e2) {
      const ElemSet x2(g, e2);
      const ElemSet s12 = sumset(x1, x2);
      if (static_cast<long long>(s12.size()) > m) return;
      rep.pairs_checked++;
      long long cover = 0;
      std::size_t last = 0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        const FamilyEntry& e = family[i];
        if (subset_of(x1, e.a1) && subset_of(x2, e.a2) && subset_of(e.b, s12)) {
          ++cover;
          last = i;
        }
      }
      if (cover == 0)
        rep.uncovered_pairs++;
      else if (cover == 1)
        essential[last] = true;
    });
  });

  for (bool ess : essential) (ess ? rep.essential_entries : rep.redundant_entries)++;
  const double bound = std::pow(2.0, 20) / (eps * eps) *
                       std::sqrt(static_cast<double>(m)) *
                       std::pow(std::log(static_cast<double>(n)), 1.5);
  rep.size_bound_ok =
      rep.entries == 0 || std::log(static_cast<double>(rep.entries)) <= bound;
  return rep;
}

}  // namespace sumstruct
