#include "sumstruct/link_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace sumstruct {

LinkGraph::LinkGraph(ElemSet u, ElemSet v, bool full) : left(std::move(u)), right(std::move(v)) {
  if (left.group != right.group) throw std::invalid_argument("link graph sides live in different groups");
  stride = (right.size() + 63) / 64;
  bits.assign(left.size() * stride, 0);
  if (full) {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) set(i, j);
  }
}

long long LinkGraph::edge_count() const {
  long long c = 0;
  for (std::uint64_t x : bits) c += __builtin_popcountll(x);
  return c;
}

long long LinkGraph::left_degree(std::size_t i) const {
  long long c = 0;
  for (std::size_t k = 0; k < stride; ++k) c += __builtin_popcountll(bits[i * stride + k]);
  return c;
}

long long LinkGraph::right_degree(std::size_t j) const {
  long long c = 0;
  for (std::size_t i = 0; i < rows(); ++i) c += has(i, j) ? 1 : 0;
  return c;
}

long long LinkGraph::min_left_degree() const {
  if (rows() == 0) return static_cast<long long>(cols());
  long long m = std::numeric_limits<long long>::max();
  for (std::size_t i = 0; i < rows(); ++i) m = std::min(m, left_degree(i));
  return m;
}

long long LinkGraph::min_right_degree() const {
  if (cols() == 0) return static_cast<long long>(rows());
  long long m = std::numeric_limits<long long>::max();
  for (std::size_t j = 0; j < cols(); ++j) m = std::min(m, right_degree(j));
  return m;
}

LinkGraph LinkGraph::transposed() const {
  LinkGraph t = LinkGraph::empty(right, left);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (has(i, j)) t.set(j, i);
  return t;
}

ElemSet restricted_sumset(const LinkGraph& g) {
  const GroupCtx& grp = g.left.group;
  std::vector<Elem> v;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g.has(i, j)) v.push_back(grp.add(g.left.elems[i], g.right.elems[j]));
  return ElemSet(grp, std::move(v));
}

RepCounts restricted_rep_counts(const LinkGraph& g) {
  const GroupCtx& grp = g.left.group;
  std::map<Elem, long long> cnt;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g.has(i, j)) ++cnt[grp.add(g.left.elems[i], g.right.elems[j])];
  return RepCounts(cnt.begin(), cnt.end());
}

}  // namespace sumstruct
