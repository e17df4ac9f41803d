#pragma once
// Multipartite multihypergraphs with a per-part placement cap. Vertices carry
// integer labels and are split into r parts; an edge is a sorted list of
// distinct vertex ids with a positive multiplicity, picking at most cap[i]
// vertices from part i. Parallel edges merge by adding multiplicities.
//
// A "placement" is a sorted list of distinct vertex ids; its "profile" counts
// how many ids fall in each part. codegree_max(h, v) is the largest total
// multiplicity of edges containing a common placement of profile exactly v.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumstruct/group.hpp"

namespace sumstruct {

using Placement = std::vector<int>;  // sorted distinct vertex ids
using Profile = std::vector<int>;    // one count per part

struct PartedHypergraph {
  struct Edge {
    Placement verts;       // sorted, distinct
    long long mult = 1;    // >= 1
    bool operator==(const Edge& o) const { return verts == o.verts && mult == o.mult; }
  };

  int num_parts = 0;
  std::vector<std::vector<int>> parts;  // part -> ascending vertex ids
  std::vector<int> part_of;             // vertex id -> part
  std::vector<Elem> label;              // vertex id -> label (distinct within a part)
  Profile cap;                          // per-part placement cap, entries >= 0
  std::vector<int> order_rank;          // vertex id -> tie-break rank (0 = preferred)
  std::vector<Edge> edges;              // merged; insertion order preserved

  PartedHypergraph() = default;
  // part_labels[i] lists the labels of part i. `order`, when given, is a
  // permutation of all vertex ids, most-preferred first; the default order
  // sorts by (part, label).
  PartedHypergraph(std::vector<std::vector<Elem>> part_labels, Profile cap_in,
                   std::optional<std::vector<int>> order = std::nullopt);

  int num_vertices() const { return static_cast<int>(part_of.size()); }
  long long part_size(int i) const { return static_cast<long long>(parts.at(i).size()); }
  long long edge_count() const;  // multiplicity-weighted

  // Validates ids, sorts, rejects repeated vertices and cap overflow, merges
  // with an existing parallel edge.
  void add_edge(Placement verts, long long mult = 1);

  Profile profile_of(const Placement& pl) const;
  bool within_cap(const Profile& v) const;  // v <= cap pointwise
  // Same vertices, labels and order, no edges, new cap.
  PartedHypergraph empty_like(Profile new_cap) const;
  // Total multiplicity of edges containing the vertex.
  long long vertex_degree(int vid) const;

  bool operator==(const PartedHypergraph& o) const;
  bool operator!=(const PartedHypergraph& o) const { return !(*this == o); }
};

// Largest codegree over placements of profile exactly v. Requires
// 0 <= v_i <= cap_i and v != 0; returns 0 when no placement is covered.
long long codegree_max(const PartedHypergraph& h, const Profile& v);

// Line format:
//   parts <r>
//   <labels of part 0, whitespace separated; blank line for an empty part>
//   ... (r lines)
//   cap <c_0> ... <c_{r-1}>
//   [order <vid> ... <vid>]          (omitted when the default order applies)
//   <mult> <vid> ... <vid>           (one line per edge)
PartedHypergraph parse_hypergraph(std::istream& in);
PartedHypergraph parse_hypergraph(const std::string& text);
void write_hypergraph(std::ostream& out, const PartedHypergraph& h);
std::string hypergraph_to_string(const PartedHypergraph& h);

}  // namespace sumstruct
