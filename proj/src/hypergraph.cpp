#include "sumstruct/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sumstruct {

PartedHypergraph::PartedHypergraph(std::vector<std::vector<Elem>> part_labels, Profile cap_in,
                                   std::optional<std::vector<int>> order) {
  num_parts = static_cast<int>(part_labels.size());
  if (num_parts < 1) throw std::invalid_argument("hypergraph needs at least one part");
  if (cap_in.size() != part_labels.size())
    throw std::invalid_argument("cap length must equal the number of parts");
  for (int c : cap_in)
    if (c < 0) throw std::invalid_argument("cap entries must be nonnegative");
  cap = std::move(cap_in);

  parts.resize(num_parts);
  for (int p = 0; p < num_parts; ++p) {
    std::unordered_set<Elem> seen;
    for (Elem lab : part_labels[p]) {
      if (!seen.insert(lab).second)
        throw std::invalid_argument("labels must be distinct within a part");
      const int vid = static_cast<int>(part_of.size());
      parts[p].push_back(vid);
      part_of.push_back(p);
      label.push_back(lab);
    }
  }

  const int n = num_vertices();
  if (order) {
    if (static_cast<int>(order->size()) != n)
      throw std::invalid_argument("order must list every vertex exactly once");
    order_rank.assign(n, -1);
    for (int rank = 0; rank < n; ++rank) {
      const int vid = (*order)[rank];
      if (vid < 0 || vid >= n || order_rank[vid] != -1)
        throw std::invalid_argument("order must be a permutation of the vertex ids");
      order_rank[vid] = rank;
    }
  } else {
    std::vector<int> by(n);
    std::iota(by.begin(), by.end(), 0);
    std::sort(by.begin(), by.end(), [&](int a, int b) {
      if (part_of[a] != part_of[b]) return part_of[a] < part_of[b];
      return label[a] < label[b];
    });
    order_rank.assign(n, 0);
    for (int rank = 0; rank < n; ++rank) order_rank[by[rank]] = rank;
  }
}

long long PartedHypergraph::edge_count() const {
  long long total = 0;
  for (const Edge& e : edges) total += e.mult;
  return total;
}

void PartedHypergraph::add_edge(Placement verts, long long mult) {
  if (mult < 1) throw std::invalid_argument("edge multiplicity must be positive");
  if (verts.empty()) throw std::invalid_argument("edge needs at least one vertex");
  std::sort(verts.begin(), verts.end());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] < 0 || verts[i] >= num_vertices())
      throw std::invalid_argument("edge references an unknown vertex");
    if (i > 0 && verts[i] == verts[i - 1])
      throw std::invalid_argument("edge vertices must be distinct");
  }
  if (!within_cap(profile_of(verts)))
    throw std::invalid_argument("edge exceeds the per-part placement cap");

  for (Edge& e : edges) {
    if (e.verts == verts) {
      e.mult += mult;
      return;
    }
  }
  edges.push_back(Edge{std::move(verts), mult});
}

Profile PartedHypergraph::profile_of(const Placement& pl) const {
  Profile v(num_parts, 0);
  for (int vid : pl) v[part_of.at(vid)]++;
  return v;
}

bool PartedHypergraph::within_cap(const Profile& v) const {
  if (v.size() != cap.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > cap[i]) return false;
  return true;
}

PartedHypergraph PartedHypergraph::empty_like(Profile new_cap) const {
  if (new_cap.size() != cap.size())
    throw std::invalid_argument("cap length must equal the number of parts");
  for (int c : new_cap)
    if (c < 0) throw std::invalid_argument("cap entries must be nonnegative");
  PartedHypergraph h;
  h.num_parts = num_parts;
  h.parts = parts;
  h.part_of = part_of;
  h.label = label;
  h.cap = std::move(new_cap);
  h.order_rank = order_rank;
  return h;
}

long long PartedHypergraph::vertex_degree(int vid) const {
  long long d = 0;
  for (const Edge& e : edges)
    if (std::binary_search(e.verts.begin(), e.verts.end(), vid)) d += e.mult;
  return d;
}

bool PartedHypergraph::operator==(const PartedHypergraph& o) const {
  if (num_parts != o.num_parts || parts != o.parts || part_of != o.part_of ||
      label != o.label || cap != o.cap || order_rank != o.order_rank)
    return false;
  // Edge order is an insertion artifact; compare canonically.
  auto canon = [](const std::vector<Edge>& es) {
    std::map<Placement, long long> m;
    for (const Edge& e : es) m[e.verts] += e.mult;
    return m;
  };
  return canon(edges) == canon(o.edges);
}

namespace {

// Enumerates every sub-placement of `by_part` with per-part counts `v`,
// invoking fn on each (as a sorted id list).
void each_sub_placement(const std::vector<std::vector<int>>& by_part, const Profile& v,
                        std::size_t part, Placement& acc,
                        const std::function<void(const Placement&)>& fn) {
  if (part == by_part.size()) {
    fn(acc);
    return;
  }
  const int need = v[part];
  const auto& pool = by_part[part];
  if (need == 0) {
    each_sub_placement(by_part, v, part + 1, acc, fn);
    return;
  }
  // Choose `need` of pool (ascending), recursing per combination.
  std::vector<int> idx(need);
  std::function<void(int, int)> choose = [&](int start, int k) {
    if (k == need) {
      for (int i : idx) acc.push_back(pool[i]);
      each_sub_placement(by_part, v, part + 1, acc, fn);
      acc.resize(acc.size() - need);
      return;
    }
    for (int i = start; i <= static_cast<int>(pool.size()) - (need - k); ++i) {
      idx[k] = i;
      choose(i + 1, k + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

long long codegree_max(const PartedHypergraph& h, const Profile& v) {
  if (static_cast<int>(v.size()) != h.num_parts)
    throw std::invalid_argument("profile length must equal the number of parts");
  bool nonzero = false;
  for (int i = 0; i < h.num_parts; ++i) {
    if (v[i] < 0 || v[i] > h.cap[i])
      throw std::invalid_argument("profile must satisfy 0 <= v_i <= cap_i");
    nonzero = nonzero || v[i] > 0;
  }
  if (!nonzero) throw std::invalid_argument("profile must be nonzero");

  std::map<Placement, long long> deg;
  std::vector<std::vector<int>> by_part(h.num_parts);
  for (const auto& e : h.edges) {
    for (auto& g : by_part) g.clear();
    for (int vid : e.verts) by_part[h.part_of[vid]].push_back(vid);
    bool feasible = true;
    for (int i = 0; i < h.num_parts; ++i)
      if (static_cast<int>(by_part[i].size()) < v[i]) {
        feasible = false;
        break;
      }
    if (!feasible) continue;
    Placement acc;
    each_sub_placement(by_part, v, 0, acc,
                       [&](const Placement& pl) { deg[pl] += e.mult; });
  }
  long long best = 0;
  for (const auto& [pl, d] : deg) best = std::max(best, d);
  return best;
}

namespace {

std::string next_content_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] == '#') continue;
    return line;
  }
  throw std::invalid_argument("hypergraph text ended early");
}

}  // namespace

PartedHypergraph parse_hypergraph(std::istream& in) {
  std::string head = next_content_line(in);
  std::istringstream hs(head);
  std::string kw;
  int r = 0;
  if (!(hs >> kw >> r) || kw != "parts" || r < 1)
    throw std::invalid_argument("expected 'parts <r>' header");

  // Part label lines are positional: blank means an empty part, so they are
  // read raw rather than skipped.
  std::vector<std::vector<Elem>> part_labels(r);
  for (int p = 0; p < r; ++p) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("missing part label line");
    std::istringstream ls(line);
    Elem lab;
    while (ls >> lab) part_labels[p].push_back(lab);
  }

  std::string capline = next_content_line(in);
  std::istringstream cs(capline);
  Profile cap(r);
  if (!(cs >> kw) || kw != "cap") throw std::invalid_argument("expected 'cap' line");
  for (int i = 0; i < r; ++i)
    if (!(cs >> cap[i])) throw std::invalid_argument("cap line needs one entry per part");

  std::optional<std::vector<int>> order;
  std::vector<std::string> edge_lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream probe(line);
    std::string first;
    probe >> first;
    if (first == "order") {
      std::vector<int> ord;
      int vid;
      while (probe >> vid) ord.push_back(vid);
      order = std::move(ord);
    } else {
      edge_lines.push_back(line);
    }
  }

  PartedHypergraph h(std::move(part_labels), std::move(cap), std::move(order));
  for (const std::string& el : edge_lines) {
    std::istringstream es(el);
    long long mult;
    if (!(es >> mult)) throw std::invalid_argument("edge line must start with a multiplicity");
    Placement verts;
    int vid;
    while (es >> vid) verts.push_back(vid);
    h.add_edge(std::move(verts), mult);
  }
  return h;
}

PartedHypergraph parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return parse_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const PartedHypergraph& h) {
  out << "parts " << h.num_parts << '\n';
  for (int p = 0; p < h.num_parts; ++p) {
    for (std::size_t i = 0; i < h.parts[p].size(); ++i)
      out << (i ? " " : "") << h.label[h.parts[p][i]];
    out << '\n';
  }
  out << "cap";
  for (int c : h.cap) out << ' ' << c;
  out << '\n';

  // The order line is emitted only when it differs from the (part, label) default.
  std::vector<std::vector<Elem>> labs(h.num_parts);
  for (int p = 0; p < h.num_parts; ++p)
    for (int vid : h.parts[p]) labs[p].push_back(h.label[vid]);
  PartedHypergraph fresh(labs, h.cap);
  if (fresh.order_rank != h.order_rank) {
    std::vector<int> by(h.num_vertices());
    for (int vid = 0; vid < h.num_vertices(); ++vid) by[h.order_rank[vid]] = vid;
    out << "order";
    for (int vid : by) out << ' ' << vid;
    out << '\n';
  }

  std::map<Placement, long long> canon;
  for (const auto& e : h.edges) canon[e.verts] += e.mult;
  for (const auto& [verts, mult] : canon) {
    out << mult;
    for (int vid : verts) out << ' ' << vid;
    out << '\n';
  }
}

std::string hypergraph_to_string(const PartedHypergraph& h) {
  std::ostringstream out;
  write_hypergraph(out, h);
  return out.str();
}

}  // namespace sumstruct
