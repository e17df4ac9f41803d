#pragma once
// Link graphs Gamma, a subset of U x V stored as a bit matrix. The restricted
// sumset U +^Gamma V takes sums only along present pairs.

#include <cstdint>
#include <vector>

#include "sumstruct/elem_set.hpp"
#include "sumstruct/setops.hpp"

namespace sumstruct {

struct LinkGraph {
  ElemSet left, right;
  std::vector<std::uint64_t> bits;  // row-major, one row per left element
  std::size_t stride = 0;           // words per row

  LinkGraph() = default;
  LinkGraph(ElemSet u, ElemSet v, bool full);

  static LinkGraph complete(const ElemSet& u, const ElemSet& v) { return {u, v, true}; }
  static LinkGraph empty(const ElemSet& u, const ElemSet& v) { return {u, v, false}; }

  std::size_t rows() const { return left.size(); }
  std::size_t cols() const { return right.size(); }

  bool has(std::size_t i, std::size_t j) const {
    return (bits[i * stride + (j >> 6)] >> (j & 63)) & 1;
  }
  void set(std::size_t i, std::size_t j) { bits[i * stride + (j >> 6)] |= std::uint64_t(1) << (j & 63); }
  void reset(std::size_t i, std::size_t j) { bits[i * stride + (j >> 6)] &= ~(std::uint64_t(1) << (j & 63)); }

  long long edge_count() const;
  long long left_degree(std::size_t i) const;
  long long right_degree(std::size_t j) const;
  long long min_left_degree() const;   // |right| when there are no left vertices
  long long min_right_degree() const;  // |left| when there are no right vertices

  LinkGraph transposed() const;

  bool operator==(const LinkGraph& o) const {
    return left == o.left && right == o.right && bits == o.bits;
  }
};

// {u + v : (u,v) present}.
ElemSet restricted_sumset(const LinkGraph& g);

// Representation counts along present pairs only.
RepCounts restricted_rep_counts(const LinkGraph& g);

}  // namespace sumstruct
