#include "sumstruct/containers.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sumstruct {

namespace {

std::string profile_str(const Profile& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

// Nonzero profiles v with 0 <= v <= x, lexicographically ascending.
std::vector<Profile> profiles_below(const Profile& x) {
  std::vector<Profile> out;
  Profile v(x.size(), 0);
  while (true) {
    // Advance the odometer.
    std::size_t i = v.size();
    while (i > 0) {
      --i;
      if (v[i] < x[i]) {
        v[i]++;
        std::fill(v.begin() + static_cast<long>(i) + 1, v.end(), 0);
        break;
      }
      if (i == 0) return out;
    }
    out.push_back(v);
  }
}

}  // namespace

Rat ParamPack::delta() const {
  const long long e = (c_r + r() - 1) * (2 * c_r + r());
  return rat_pow2(-e) / R;
}

Rat ParamPack::alpha_at(long long s) const { return rat_pow2(-s * (2 * c_r + r())); }

Rat ParamPack::beta_at(long long s) const {
  Rat out = alpha_at(s);
  const long long side = std::min<long long>(r() - 1, s);
  for (long long j = 0; j < side; ++j) out *= rat_of(b) / rat_of(w[j]);
  const long long last = std::max<long long>(0, s - r() + 1);
  out *= rat_pow(rat_of(b) / rat_of(m), static_cast<unsigned long>(last));
  return out;
}

ParamPack make_params(const PartedHypergraph& h, long long m, long long b, long long q, Rat R) {
  const int r = h.num_parts;
  if (r < 2) throw std::invalid_argument("need at least two parts");
  for (int i = 0; i < r - 1; ++i)
    if (h.cap[i] != 1) throw std::invalid_argument("start cap must be (1,...,1,c_r)");
  if (h.cap[r - 1] < 1) throw std::invalid_argument("last-part cap must be at least 1");
  for (int i = 0; i < r; ++i)
    if (h.part_size(i) < 1) throw std::invalid_argument("every part must be nonempty");

  ParamPack p;
  p.c_r = h.cap[r - 1];
  if (m < 1) throw std::invalid_argument("m must be positive");
  p.m_clamped = m > h.part_size(r - 1);
  p.m = std::min(m, h.part_size(r - 1));
  if (q < 1 || q > p.m) throw std::invalid_argument("q must satisfy 1 <= q <= m");
  p.q = q;
  long long cap_b = p.m;
  for (int i = 0; i < r - 1; ++i) cap_b = std::min(cap_b, h.part_size(i));
  if (b < 1 || b > cap_b)
    throw std::invalid_argument("b must satisfy 1 <= b <= min(|V_1|,...,|V_{r-1}|,m)");
  p.b = b;
  if (R <= 0) throw std::invalid_argument("R must be positive");
  p.R = std::move(R);
  for (int i = 0; i < r - 1; ++i) p.w.push_back(h.part_size(i));
  p.w.push_back(p.m);
  return p;
}

DegreeCheck check_degree_condition(const PartedHypergraph& h, const ParamPack& p) {
  if (h.edges.empty()) throw std::invalid_argument("degree condition needs a nonempty hypergraph");
  const int r = p.r();
  const Rat e_h = rat_of(h.edge_count());

  DegreeCheck out;
  Rat best(-1);
  Profile y(r, 0);
  while (true) {
    const long long weight = std::accumulate(y.begin(), y.end(), 0LL);
    Rat allowance = p.R * e_h;
    // b^{|y| - 1}
    allowance *= rat_pow(rat_of(p.b), static_cast<unsigned long>(weight));
    allowance /= rat_of(p.b);
    if (y[r - 1] > 0) allowance *= rat_of(p.m) / rat_of(p.q);
    allowance /= rat_pow(rat_of(p.m), static_cast<unsigned long>(y[r - 1]));
    for (int i = 0; i < r - 1; ++i)
      if (y[i]) allowance /= rat_of(p.w[i]);

    const long long deg = (weight == 0) ? h.edge_count() : codegree_max(h, y);
    const Rat ratio = rat_of(deg) / allowance;
    if (ratio > best) {
      best = ratio;
      out.worst_y = y;
    }

    // Advance y through {0,1}^{r-1} x {0..c_r}.
    int i = r - 1;
    const auto limit = [&](int k) { return k == r - 1 ? static_cast<int>(p.c_r) : 1; };
    while (i >= 0 && y[i] == limit(i)) y[i--] = 0;
    if (i < 0) break;
    y[i]++;
  }

  out.holds = best <= 1;
  out.ratio = rat_to_double(best);
  out.ratio_exact = best.get_str();
  return out;
}

int DeltaTable::peel_index(const Profile& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) return static_cast<int>(i);
  return -1;
}

DeltaTable::DeltaTable(const PartedHypergraph& h, const ParamPack& p) {
  Profile x = h.cap;
  if (peel_index(x) < 0) throw std::invalid_argument("cap must be nonzero");
  ladder_.push_back(x);
  while (true) {
    const int ip = peel_index(x);
    Profile nx = x;
    nx[ip]--;
    if (peel_index(nx) < 0) break;
    ladder_.push_back(nx);
    x = nx;
  }

  profiles_.resize(ladder_.size());
  val_.resize(ladder_.size());

  profiles_[0] = profiles_below(ladder_[0]);
  for (const Profile& v : profiles_[0]) val_[0].emplace(v, rat_of(codegree_max(h, v)));

  for (std::size_t s = 0; s + 1 < ladder_.size(); ++s) {
    const int ip = peel_index(ladder_[s]);
    profiles_[s + 1] = profiles_below(ladder_[s + 1]);
    for (const Profile& v : profiles_[s + 1]) {
      Profile up = v;
      up[ip]++;
      const Rat a = Rat(2) * val_[s].at(up);
      const Rat b = (rat_of(p.b) / rat_of(p.w[ip])) * val_[s].at(v);
      val_[s + 1].emplace(v, std::max(a, b));
    }
  }
}

std::size_t DeltaTable::stage_of(const Profile& x) const {
  for (std::size_t s = 0; s < ladder_.size(); ++s)
    if (ladder_[s] == x) return s;
  throw std::invalid_argument("cap vector " + profile_str(x) + " is not on the ladder");
}

const std::vector<Profile>& DeltaTable::profiles(std::size_t stage) const {
  return profiles_.at(stage);
}

const Rat& DeltaTable::at(std::size_t stage, const Profile& v) const {
  const auto& m = val_.at(stage);
  const auto it = m.find(v);
  if (it == m.end())
    throw std::invalid_argument("no allowance for profile " + profile_str(v));
  return it->second;
}

bool is_independent(const PartedHypergraph& h, const std::vector<int>& I) {
  std::vector<char> in(h.num_vertices(), 0);
  for (int vid : I) {
    if (vid < 0 || vid >= h.num_vertices())
      throw std::invalid_argument("vertex id out of range");
    in[vid] = 1;
  }
  for (const auto& e : h.edges) {
    bool inside = true;
    for (int vid : e.verts)
      if (!in[vid]) {
        inside = false;
        break;
      }
    if (inside) return false;  // includes the empty edge
  }
  return true;
}

RoundOutput algorithm_round(const PartedHypergraph& g, const Profile& x,
                            const std::vector<int>& I, const ParamPack& p,
                            const DeltaTable& table) {
  if (g.num_parts != p.r()) throw std::invalid_argument("part count mismatch");
  const std::size_t stage = table.stage_of(x);
  for (const auto& e : g.edges) {
    const Profile prof = g.profile_of(e.verts);
    for (int i = 0; i < g.num_parts; ++i)
      if (prof[i] > x[i]) throw std::invalid_argument("graph has an edge beyond cap x");
  }
  if (!is_independent(g, I)) throw std::invalid_argument("I must be independent");

  const int ip = DeltaTable::peel_index(x);
  Profile xp = x;
  xp[ip]--;

  // Allowance-halves for the next rung; empty when x' = 0.
  std::map<Profile, Rat> threshold;
  if (stage + 1 < table.stages())
    for (const Profile& v : table.profiles(stage + 1))
      threshold.emplace(v, table.at(stage + 1, v) / 2);

  std::vector<char> in_i(g.num_vertices(), 0);
  for (int vid : I) in_i[vid] = 1;

  // Working copy of the edge list with liveness flags and incidence lists.
  std::vector<Placement> verts;
  std::vector<long long> mult;
  std::vector<char> alive;
  std::vector<std::vector<int>> incident(g.num_vertices());
  long long live_edges = 0;
  for (const auto& e : g.edges) {
    const int idx = static_cast<int>(verts.size());
    verts.push_back(e.verts);
    mult.push_back(e.mult);
    alive.push_back(1);
    ++live_edges;
    for (int vid : e.verts) incident[vid].push_back(idx);
  }

  std::vector<long long> deg(g.num_vertices(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int vid : verts[i])
      if (g.part_of[vid] == ip) deg[vid] += mult[i];

  const auto kill = [&](int idx) {
    alive[idx] = 0;
    --live_edges;
    for (int vid : verts[idx])
      if (g.part_of[vid] == ip) deg[vid] -= mult[idx];
  };

  std::map<Placement, long long> star_edges;
  std::map<Placement, long long> star_deg;
  std::set<Placement> banned;

  RoundOutput out;
  out.i_prime = ip;

  const long long hard_cap = g.part_size(ip) + 1;
  for (long long j = 0;; ++j) {
    if (j > hard_cap) throw std::logic_error("round failed to terminate");
    if (static_cast<long long>(out.S.size()) == p.b || live_edges == 0) {
      out.L = j;
      break;
    }

    // Pick the part-i' vertex of maximum degree, ties by order_rank.
    int u = -1;
    for (int vid : g.parts[ip]) {
      if (u == -1 || deg[vid] > deg[u] ||
          (deg[vid] == deg[u] && g.order_rank[vid] < g.order_rank[u]))
        u = vid;
    }
    if (u == -1 || deg[u] == 0) {
      // Live edges remain but none meets part i'; no further pick can change
      // anything, so the round ends here.
      out.L = j;
      out.inert_stop = true;
      break;
    }
    out.u_seq.push_back(u);

    std::vector<Placement> newly_banned;
    if (in_i[u]) {
      out.S.push_back(j);
      long long added = 0;
      for (int idx : incident[u]) {
        if (!alive[idx]) continue;
        Placement rest;
        rest.reserve(verts[idx].size() - 1);
        for (int vid : verts[idx])
          if (vid != u) rest.push_back(vid);
        if (rest.empty())
          throw std::logic_error("independent I cannot shrink an edge to nothing");
        star_edges[rest] += mult[idx];
        added += mult[idx];
        // Every nonempty subset of the shrunk edge has a profile below x',
        // so each gets its codegree bumped and tested against the allowance.
        const std::size_t k = rest.size();
        for (std::size_t sub = 1; sub < (std::size_t(1) << k); ++sub) {
          Placement t;
          for (std::size_t bit = 0; bit < k; ++bit)
            if (sub >> bit & 1) t.push_back(rest[bit]);
          const long long d = (star_deg[t] += mult[idx]);
          if (!banned.count(t)) {
            const auto th = threshold.find(g.profile_of(t));
            if (th == threshold.end())
              throw std::logic_error("shrunk placement fell outside the next rung");
            if (rat_of(d) >= th->second) {
              banned.insert(t);
              newly_banned.push_back(t);
            }
          }
        }
      }
      if (added != deg[u])
        throw std::logic_error("shrink total must match the pick's degree");
    } else {
      out.W.push_back(j);
    }

    for (int idx : incident[u])
      if (alive[idx]) kill(idx);
    if (!newly_banned.empty()) {
      for (std::size_t idx = 0; idx < verts.size(); ++idx) {
        if (!alive[idx]) continue;
        for (const Placement& t : newly_banned) {
          if (std::includes(verts[idx].begin(), verts[idx].end(), t.begin(), t.end())) {
            kill(static_cast<int>(idx));
            break;
          }
        }
      }
    }
  }

  out.g_star = g.empty_like(xp);
  for (const auto& [pl, mu] : star_edges) out.g_star.add_edge(pl, mu);
  return out;
}

ContainerRecord build_container(const PartedHypergraph& h, const std::vector<int>& I,
                                const ParamPack& p, const DeltaTable& table) {
  const DegreeCheck dc = check_degree_condition(h, p);
  if (!dc.holds)
    throw std::invalid_argument("degree condition fails at profile " + profile_str(dc.worst_y) +
                                " with ratio " + dc.ratio_exact);
  {
    std::vector<char> in(h.num_vertices(), 0);
    for (int vid : I) {
      if (vid < 0 || vid >= h.num_vertices())
        throw std::invalid_argument("vertex id out of range");
      in[vid] = 1;
    }
    long long last_in = 0;
    for (int vid : h.parts[h.num_parts - 1]) last_in += in[vid];
    if (last_in < h.part_size(h.num_parts - 1) - p.m)
      throw std::invalid_argument("I must keep all but m vertices of the last part");
  }
  if (!is_independent(h, I)) throw std::invalid_argument("I must be independent");

  const int r = p.r();
  const long long e_h = h.edge_count();
  std::vector<std::set<int>> finger(r);
  ContainerRecord rec;

  PartedHypergraph cur = h;
  for (std::size_t stage = 0; stage < table.stages(); ++stage) {
    const Profile& x = table.ladder()[stage];
    const int ip = DeltaTable::peel_index(x);

    // Entry guarantees: allowances bound the live codegrees, and the live
    // edge count clears the stage floor.
    for (const Profile& v : table.profiles(stage))
      if (rat_of(codegree_max(cur, v)) > table.at(stage, v))
        throw std::logic_error("stage allowance violated at profile " + profile_str(v));
    if (rat_of(cur.edge_count()) < p.beta_at(static_cast<long long>(stage)) * rat_of(e_h))
      throw std::logic_error("stage edge floor violated");

    RoundOutput round = algorithm_round(cur, x, I, p, table);
    for (long long j : round.S) finger[ip].insert(round.u_seq[j]);

    if (!is_independent(round.g_star, I))
      throw std::logic_error("I must stay independent in the remainder");
    if (stage + 1 < table.stages()) {
      for (const Profile& v : table.profiles(stage + 1))
        if (rat_of(codegree_max(round.g_star, v)) > table.at(stage + 1, v))
          throw std::logic_error("next-stage allowance violated at profile " + profile_str(v));
    } else if (round.g_star.edge_count() != 0) {
      throw std::logic_error("final rung must leave an empty remainder");
    }

    // Guaranteed trichotomy for the round.
    const Rat alpha = p.alpha_at(static_cast<long long>(stage));
    Profile xp = x;
    xp[ip]--;
    long long sum_x = std::accumulate(x.begin(), x.end(), 0LL);
    Rat p1_floor = rat_pow2(-(sum_x + x[r - 1] + 1)) * alpha * rat_of(e_h);
    for (int i = 0; i < r - 1; ++i)
      if (xp[i] == 0) p1_floor *= rat_of(p.b) / rat_of(p.w[i]);
    p1_floor *= rat_pow(rat_of(p.b) / rat_of(p.m),
                        static_cast<unsigned long>(p.c_r - xp[r - 1]));
    const bool p1 = rat_of(round.g_star.edge_count()) >= p1_floor;
    bool p2 = false, p3 = false;
    const Rat w_count = rat_of(static_cast<long long>(round.W.size()));
    if (ip < r - 1)
      p2 = w_count >= rat_pow2(-(ip + 2)) * alpha * rat_of(h.part_size(ip)) / p.R;
    else
      p3 = w_count >= rat_pow2(-(r + p.c_r + 1)) * alpha * rat_of(p.q) / p.R;
    if (!p1 && !p2 && !p3)
      throw std::logic_error("round produced neither a dense remainder nor many discards");

    RoundStats st;
    st.stage = static_cast<int>(stage);
    st.i_prime = ip;
    st.iterations = round.L;
    st.picked_in = static_cast<long long>(round.S.size());
    st.picked_out = static_cast<long long>(round.W.size());
    st.edges_in = cur.edge_count();
    st.edges_out = round.g_star.edge_count();
    st.kept_density = p1;
    st.big_discard_side = p2;
    st.big_discard_last = p3;
    st.inert_stop = round.inert_stop;
    rec.rounds.push_back(st);

    // Stop rule: the remainder lost the next stage's edge floor.
    if (rat_of(round.g_star.edge_count()) <
        p.beta_at(static_cast<long long>(stage) + 1) * rat_of(e_h)) {
      std::set<int> dropped;
      for (long long j : round.W) dropped.insert(round.u_seq[j]);
      rec.container.resize(r);
      for (int i = 0; i < r; ++i) {
        for (int vid : h.parts[i])
          if (i != ip || !dropped.count(vid)) rec.container[i].push_back(vid);
      }
      rec.fingerprint.resize(r);
      for (int i = 0; i < r; ++i)
        rec.fingerprint[i] = std::vector<int>(finger[i].begin(), finger[i].end());
      rec.stop_stage = static_cast<int>(stage);
      rec.stop_part = ip;
      return rec;
    }
    cur = std::move(round.g_star);
  }
  throw std::logic_error("stop rule failed to trigger on the ladder");
}

ContainerRecord build_container(const PartedHypergraph& h, const std::vector<int>& I,
                                const ParamPack& p) {
  const DeltaTable table(h, p);
  return build_container(h, I, p, table);
}

ContainerPropertyReport verify_container_properties(const PartedHypergraph& h,
                                                    const ParamPack& p,
                                                    const std::vector<std::vector<int>>& sample) {
  const int r = p.r();
  const Rat delta = p.delta();
  const DeltaTable table(h, p);

  ContainerPropertyReport rep;
  rep.delta_exact = delta.get_str();

  for (const std::vector<int>& I : sample) {
    const ContainerRecord rec = build_container(h, I, p, table);
    rep.checked++;

    std::vector<char> in_i(h.num_vertices(), 0);
    for (int vid : I) in_i[vid] = 1;

    bool contained = true;
    for (int i = 0; i < r && contained; ++i) {
      std::vector<char> in_a(h.num_vertices(), 0);
      for (int vid : rec.container[i]) in_a[vid] = 1;
      for (int vid : h.parts[i])
        if (in_i[vid] && !in_a[vid]) {
          contained = false;
          break;
        }
    }
    if (!contained) rep.containment_failures++;

    // Which parts shrank by the guaranteed margin?
    std::vector<bool> shrunk(r, false);
    for (int i = 0; i < r - 1; ++i)
      shrunk[i] = rat_of(static_cast<long long>(rec.container[i].size())) <=
                  (Rat(1) - delta) * rat_of(h.part_size(i));
    shrunk[r - 1] = rat_of(static_cast<long long>(rec.container[r - 1].size())) <=
                    rat_of(h.part_size(r - 1)) - delta * rat_of(p.q);
    bool any = false;
    for (int i = 0; i < r; ++i) any = any || shrunk[i];
    if (!any) rep.shrink_failures++;

    bool finger_in = true;
    bool side_ok = true;
    bool all_empty = true;
    for (int i = 0; i < r; ++i) {
      if (rec.fingerprint[i].empty()) continue;
      all_empty = false;
      for (int vid : rec.fingerprint[i])
        if (!in_i[vid] || h.part_of[vid] != i) finger_in = false;
      bool later = shrunk[r - 1];
      for (int j = i; j < r - 1 && !later; ++j) later = later || shrunk[j];
      if (!later) side_ok = false;
    }
    if (!finger_in) rep.fingerprint_outside_i++;
    if (!side_ok) rep.side_condition_failures++;
    if (all_empty) rep.fingerprint_all_empty++;
  }
  return rep;
}

}  // namespace sumstruct
