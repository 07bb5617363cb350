#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "commute/families.hpp"
#include "commute/graph.hpp"

using namespace commute;

namespace {
CommutingGraph d8_graph() {
  return CommutingGraph::commuting(construct(FamilySpec::dihedral(4), {}));
}
}  // namespace

TEST_CASE("commuting graph of D_8", "[graph]") {
  CommutingGraph g = d8_graph();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3);
  CHECK(g.name() == "D_8");

  // Vertices are the non-central elements in ascending element order.
  CHECK(g.vertex_label(0) == "a");
  CHECK(g.vertex_label(1) == "b");
  CHECK(g.vertex_label(2) == "a b");
  CHECK(g.vertex_label(3) == "a^3 b");
  CHECK(g.vertex_label(4) == "a^3");
  CHECK(g.vertex_label(5) == "a^2 b");

  // a commutes with a^3 only (among non-central elements).
  CHECK(g.has_edge(0, 4));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.degree(0) == 1);
  CHECK(g.neighbors(0) == std::vector<std::size_t>{4});

  CliqueDecomposition dec = g.clique_decomposition();
  CHECK(dec.is_clique_union);
  CHECK(dec.component_sizes == std::vector<std::uint64_t>{2, 2, 2});
}

TEST_CASE("graph dump is label TAB neighbor labels, one line per vertex",
          "[graph]") {
  CHECK(d8_graph().dump() ==
        "a\ta^3\n"
        "b\ta^2 b\n"
        "a b\ta^3 b\n"
        "a^3 b\ta b\n"
        "a^3\ta\n"
        "a^2 b\tb\n");
}

TEST_CASE("complement graph flips every non-loop pair", "[graph]") {
  CommutingGraph g = d8_graph();
  CommutingGraph c = g.complement();
  CHECK(c.vertex_count() == 6);
  CHECK(c.edge_count() == 15 - 3);
  for (std::uint32_t i = 0; i < 6; ++i) {
    CHECK_FALSE(c.has_edge(i, i));
    for (std::uint32_t j = 0; j < 6; ++j) {
      if (i != j) CHECK(c.has_edge(i, j) == !g.has_edge(i, j));
    }
  }
  // The complement of a disjoint clique union is connected here, so it is
  // certainly not a clique union itself.
  CHECK_FALSE(c.clique_decomposition().is_clique_union);
}

TEST_CASE("commuting graph rejects abelian groups", "[graph]") {
  FiniteGroup z6 = construct(FamilySpec::cyclic(6), {});
  CHECK_THROWS_AS(CommutingGraph::commuting(z6), ConstraintError);
}

TEST_CASE("non-clique-union graphs are detected", "[graph]") {
  FiniteGroup s4 = construct(FamilySpec::sym(4), {});
  CommutingGraph g = CommutingGraph::commuting(s4);
  CHECK(g.vertex_count() == 23);
  CHECK(g.edge_count() == 25);
  CliqueDecomposition dec = g.clique_decomposition();
  CHECK_FALSE(dec.is_clique_union);
}

TEST_CASE("adjacency matrix is symmetric with zero diagonal", "[graph]") {
  CommutingGraph g = d8_graph();
  std::vector<double> m = g.adjacency_matrix();
  REQUIRE(m.size() == 36);
  for (std::uint32_t i = 0; i < 6; ++i) {
    CHECK(m[i * 6 + i] == 0.0);
    for (std::uint32_t j = 0; j < 6; ++j) {
      CHECK(m[i * 6 + j] == m[j * 6 + i]);
      CHECK(m[i * 6 + j] == (g.has_edge(i, j) ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("vertices map back to group elements", "[graph]") {
  FiniteGroup d8 = construct(FamilySpec::dihedral(4), {});
  CommutingGraph g = CommutingGraph::commuting(d8);
  // Element indices 0 and 3 are central; the vertex list is everything else.
  CHECK(g.vertex_group_element(0) == 1);
  CHECK(g.vertex_group_element(1) == 2);
  CHECK(g.vertex_group_element(5) == 7);
}
