#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "sumstruct/hypergraph.hpp"

using namespace sumstruct;

namespace {

PartedHypergraph triple_graph() {
  // Three parts with labels 0..2 / 10..11 / 20..23, cap (1,1,2).
  PartedHypergraph h({{0, 1, 2}, {10, 11}, {20, 21, 22, 23}}, {1, 1, 2});
  h.add_edge({0, 3, 5, 6});   // one vertex from each of parts 0,1 and two from 2
  h.add_edge({1, 4, 7});      // profile (1,1,1)
  h.add_edge({5, 6}, 3);      // profile (0,0,2), multiplicity 3
  return h;
}

}  // namespace

TEST_CASE("hypergraph construction assigns ids part by part") {
  const PartedHypergraph h = triple_graph();
  CHECK(h.num_parts == 3);
  CHECK(h.num_vertices() == 9);
  CHECK(h.part_size(0) == 3);
  CHECK(h.part_size(1) == 2);
  CHECK(h.part_size(2) == 4);
  CHECK(h.part_of[0] == 0);
  CHECK(h.part_of[3] == 1);
  CHECK(h.part_of[5] == 2);
  CHECK(h.label[4] == 11);
  CHECK(h.label[8] == 23);
  // Default preference order follows (part, label).
  for (int v = 0; v < h.num_vertices(); ++v) CHECK(h.order_rank[v] == v);
}

TEST_CASE("edge insertion validates, sorts, and merges parallels") {
  PartedHypergraph h({{0, 1, 2}, {10, 11}}, {1, 1});
  h.add_edge({3, 1});  // unsorted input is fine
  CHECK(h.edges.size() == 1);
  CHECK(h.edges[0].verts == Placement{1, 3});
  h.add_edge({1, 3}, 4);  // merges with the parallel edge
  CHECK(h.edges.size() == 1);
  CHECK(h.edges[0].mult == 5);
  CHECK(h.edge_count() == 5);

  CHECK_THROWS_AS(h.add_edge({1, 1}), std::invalid_argument);   // repeated vertex
  CHECK_THROWS_AS(h.add_edge({0, 1}), std::invalid_argument);   // cap overflow in part 0
  CHECK_THROWS_AS(h.add_edge({99}), std::invalid_argument);     // unknown id
  CHECK_THROWS_AS(h.add_edge({}), std::invalid_argument);       // empty placement
  CHECK_THROWS_AS(h.add_edge({1}, 0), std::invalid_argument);   // non-positive multiplicity
}

TEST_CASE("profiles and caps") {
  const PartedHypergraph h = triple_graph();
  CHECK(h.profile_of({0, 3, 5, 6}) == Profile{1, 1, 2});
  CHECK(h.profile_of({5}) == Profile{0, 0, 1});
  CHECK(h.within_cap({1, 1, 2}));
  CHECK(h.within_cap({0, 0, 0}));
  CHECK_FALSE(h.within_cap({2, 0, 0}));
  CHECK_FALSE(h.within_cap({0, 0, 3}));
}

TEST_CASE("vertex degrees are multiplicity weighted") {
  const PartedHypergraph h = triple_graph();
  CHECK(h.vertex_degree(5) == 4);  // edge {0,3,5,6} once, edge {5,6} thrice
  CHECK(h.vertex_degree(0) == 1);
  CHECK(h.vertex_degree(2) == 0);
  CHECK(h.edge_count() == 5);
}

TEST_CASE("largest codegree by exact profile") {
  const PartedHypergraph h = triple_graph();
  // Placements of profile (0,0,2): {5,6} is covered by the mult-3 edge and by
  // {0,3,5,6}.
  CHECK(codegree_max(h, {0, 0, 2}) == 4);
  // Single vertices in part 2: vertex 5 with degree 4.
  CHECK(codegree_max(h, {0, 0, 1}) == 4);
  CHECK(codegree_max(h, {1, 0, 0}) == 1);
  // Full-profile placements are whole edges.
  CHECK(codegree_max(h, {1, 1, 2}) == 1);
  CHECK(codegree_max(h, {1, 1, 1}) == 1);

  CHECK_THROWS_AS(codegree_max(h, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(codegree_max(h, {2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(codegree_max(h, {1, 1}), std::invalid_argument);
}

TEST_CASE("codegree is zero when no placement of the profile is covered") {
  PartedHypergraph h({{0, 1}, {5}}, {2, 1});
  h.add_edge({0, 2});
  CHECK(codegree_max(h, {2, 0}) == 0);  // the only (2,0) placement {0,1} is uncovered
  CHECK(codegree_max(h, {1, 1}) == 1);
}

TEST_CASE("empty_like keeps vertices and order but drops edges") {
  const PartedHypergraph h = triple_graph();
  const PartedHypergraph e = h.empty_like({1, 0, 1});
  CHECK(e.num_vertices() == h.num_vertices());
  CHECK(e.label == h.label);
  CHECK(e.order_rank == h.order_rank);
  CHECK(e.cap == Profile{1, 0, 1});
  CHECK(e.edges.empty());
  CHECK_THROWS_AS(h.empty_like({1, 1}), std::invalid_argument);
}

TEST_CASE("hypergraph text round trip") {
  const PartedHypergraph h = triple_graph();
  const std::string text = hypergraph_to_string(h);
  const PartedHypergraph back = parse_hypergraph(text);
  CHECK(back == h);
  CHECK(hypergraph_to_string(back) == text);
}

TEST_CASE("hypergraph text round trip with custom order and empty part") {
  PartedHypergraph h({{4, 2}, {}, {7}}, {1, 0, 1},
                     std::vector<int>{2, 0, 1});
  h.add_edge({0, 2}, 2);
  CHECK(h.order_rank[2] == 0);  // vertex 2 (label 7) is most preferred
  CHECK(h.order_rank[0] == 1);
  const std::string text = hypergraph_to_string(h);
  CHECK(text.find("order") != std::string::npos);
  const PartedHypergraph back = parse_hypergraph(text);
  CHECK(back == h);
}

TEST_CASE("hypergraph parsing accepts the documented format") {
  const std::string text =
      "parts 2\n"
      "3 1 2\n"
      "10 11\n"
      "cap 1 1\n"
      "1 0 3\n"
      "2 2 4\n";
  const PartedHypergraph h = parse_hypergraph(text);
  CHECK(h.num_parts == 2);
  // Ids follow the label line order; the default preference order sorts by
  // (part, label).
  CHECK(h.label[0] == 3);
  CHECK(h.label[1] == 1);
  CHECK(h.label[2] == 2);
  CHECK(h.order_rank[1] == 0);
  CHECK(h.order_rank[2] == 1);
  CHECK(h.order_rank[0] == 2);
  CHECK(h.edge_count() == 3);
  CHECK(codegree_max(h, {1, 1}) == 2);
}

TEST_CASE("hypergraph parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_hypergraph("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("parts 0\ncap\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("parts 1\n0 0\ncap 1\n"),
                  std::invalid_argument);  // duplicate label in a part
  CHECK_THROWS_AS(parse_hypergraph("parts 1\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("parts 2\n0 1\n2\ncap 1\n"),
                  std::invalid_argument);  // too few cap entries
  CHECK_THROWS_AS(parse_hypergraph("parts 1\n0 1\ncap 1\n1 0 1\n"),
                  std::invalid_argument);  // edge violates the cap
  CHECK_THROWS_AS(parse_hypergraph("parts 1\n0 1\ncap 1\norder 0\n"),
                  std::invalid_argument);  // order must list every vertex
}

TEST_CASE("hypergraph equality covers caps, order, and multiplicities") {
  PartedHypergraph a({{0, 1}}, {1});
  PartedHypergraph b({{0, 1}}, {1});
  CHECK(a == b);
  b.add_edge({0});
  CHECK(a != b);
  a.add_edge({0});
  CHECK(a == b);
  a.add_edge({0});  // multiplicity differs now
  CHECK(a != b);

  const PartedHypergraph c({{0, 1}}, {1}, std::vector<int>{1, 0});
  CHECK(PartedHypergraph({{0, 1}}, {1}) != c);
}
