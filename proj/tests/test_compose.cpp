#include "catch_amalgamated.hpp"

#include <set>

#include "cordial/compose.hpp"
#include "cordial/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cordial;

TEST_CASE("bijections must be permutations") {
  CHECK_THROWS_AS(VertexBijection({0, 0}), StructureError);
  CHECK_THROWS_AS(VertexBijection({0, 2}), StructureError);
  const VertexBijection b({2, 0, 1});
  CHECK(b(0) == 2);
  CHECK(b.inverse()(2) == 0);
  CHECK(b.inverse().inverse() == b);
}

TEST_CASE("phi counts agreements through the bijection") {
  const VertexLabeling f({0, 1, 1, 0});
  const VertexLabeling g({1, 1, 0, 0});
  CHECK(phi(f, g, VertexBijection::identity(4)) == 2);
  CHECK(phi(f, g, VertexBijection({2, 0, 1, 3})) == 4);
  CHECK(phi(f, complement(f), VertexBijection::identity(4)) == 0);
  CHECK_THROWS_AS(phi(f, VertexLabeling({0, 1}), VertexBijection::identity(4)), DimensionError);
}

TEST_CASE("phi of complements") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 20));
    const VertexLabeling f = gen.labeling(n);
    const VertexLabeling g = gen.labeling(n);
    const VertexBijection b(gen.permutation(n));
    CHECK(phi(f, g, b) + phi(f, complement(g), b) == n);
    CHECK(phi(complement(f), complement(g), b) == phi(f, g, b));
    CHECK(phi(g, f, b.inverse()) == phi(f, g, b));
  }
}

TEST_CASE("bijection table lookup") {
  const BijectionTable table = fixtures::bijections();
  CHECK(table.contains("AB"));
  CHECK_THROWS_AS(table.at("XY"), ConfigurationError);
  CHECK(table.for_pair("A", "A", 8) == VertexBijection::identity(8));
  CHECK(table.for_pair("A", "B", 8).has_value());
  CHECK(table.for_pair("B", "A", 8).has_value());
  CHECK_FALSE(table.for_pair("A", "Z", 8).has_value());

  BijectionTable custom;
  custom.add("XY", {"X", "Y", VertexBijection({1, 2, 0})});
  CHECK(custom.for_pair("Y", "X", 3) == VertexBijection({1, 2, 0}).inverse());
}

TEST_CASE("phi table matches the reference values") {
  const PhiTable t = phi_table(fixtures::phi_table_cubes(), fixtures::bijections());
  CHECK(t.names == std::vector<std::string>{"~A", "A", "~B", "B", "~C", "C"});
  CHECK(t.values == fixtures::reference_phi_table());
  CHECK(t.values[0][3] == 6);
}

TEST_CASE("phi table needs a bijection for every pair") {
  CHECK_THROWS_AS(phi_table(fixtures::phi_table_cubes(), BijectionTable{}), ConfigurationError);
}

TEST_CASE("fig5 assembly counts") {
  const PartialOrientedCube p = assemble(fixtures::arrangement("fig5_4D"));
  CHECK(p.vertex_count == 16);
  CHECK(p.inter_slot_edges == 8);
  CHECK(p.inter_slot_zeros == 2);
  CHECK(p.free_edges.size() == 6);
  CHECK(p.fixed_arcs.size() == 24 + 2);
  CHECK(p.fixed_lambda() == LambdaTriple{8, 8, 10});

  const BalancedCube b = balance_free_arcs(p);
  CHECK(b.lambda == LambdaTriple{11, 11, 10});
  const auto t = testing::recount(b.graph.graph.arcs(), b.graph.labeling.bits());
  CHECK(LambdaTriple{t.plus, t.minus, t.zero} == b.lambda);
  CHECK(is_23_cordial_pair(b.graph.graph, b.graph.labeling));
  CHECK(as_oriented_hypercube(b.graph.graph).has_value());
}

TEST_CASE("free edges join unequal labels across slots") {
  for (const std::string& name : {"fig5_4D", "fig8a_6D", "fig8b_6D"}) {
    const PartialOrientedCube p = assemble(fixtures::arrangement(name));
    for (const FreeEdge& e : p.free_edges) {
      CHECK(p.labeling[e.low] != p.labeling[e.high]);
      CHECK(std::popcount(e.low ^ e.high) == 1);
      CHECK((e.low >> 3) != (e.high >> 3));
    }
    // Canonical edge order of the assembled cube.
    const int dim = std::countr_zero(p.vertex_count);
    std::vector<std::size_t> indices;
    for (const FreeEdge& e : p.free_edges) {
      indices.push_back(OrientedHypercube::edge_index(dim, e.low, std::countr_zero(e.low ^ e.high)));
    }
    CHECK(std::is_sorted(indices.begin(), indices.end()));
  }
}

TEST_CASE("balancing orients the first q free edges upward in label") {
  const PartialOrientedCube p = assemble(fixtures::arrangement("fig5_4D"));
  const BalancedCube b = balance_free_arcs(p);
  const auto& arcs = b.graph.graph.arcs();
  REQUIRE(arcs.size() == p.fixed_arcs.size() + p.free_edges.size());
  std::size_t up = 0;
  bool seen_down = false;
  for (std::size_t i = 0; i < p.free_edges.size(); ++i) {
    const Arc a = arcs[p.fixed_arcs.size() + i];
    const FreeEdge e = p.free_edges[i];
    CHECK(std::set<Vertex>{a.tail, a.head} == std::set<Vertex>{e.low, e.high});
    if (b.graph.labeling[a.head] == 1) {
      CHECK_FALSE(seen_down);
      ++up;
    } else {
      seen_down = true;
    }
  }
  CHECK(up == 3);
}

TEST_CASE("infeasible arrangements report the best triple") {
  for (const std::string& name : {"fig7a_4D", "fig7b_4D"}) {
    const PartialOrientedCube p = assemble(fixtures::arrangement(name));
    CHECK(p.inter_slot_zeros == 4);
    CHECK(p.free_edges.size() == 4);
    try {
      balance_free_arcs(p);
      FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
      CHECK(e.best() == LambdaTriple{10, 10, 12});
    }
  }
}

TEST_CASE("6D and 7D assemblies") {
  for (const std::string& name : {"fig8a_6D", "fig8b_6D"}) {
    const PartialOrientedCube p = assemble(fixtures::arrangement(name));
    CHECK(p.inter_slot_edges == 96);
    CHECK(p.inter_slot_zeros == 32);
    CHECK(balance_free_arcs(p).lambda == LambdaTriple{64, 64, 64});
  }
  const PartialOrientedCube p = assemble(fixtures::arrangement("fig9_7D"));
  CHECK(p.inter_slot_edges == 64);
  CHECK(p.inter_slot_zeros == 22);
  const BalancedCube b = balance_free_arcs(p);
  CHECK(b.lambda == LambdaTriple{149, 149, 150});
  CHECK(is_23_cordial_pair(b.graph.graph, b.graph.labeling));
}

TEST_CASE("assemble validates the arrangement") {
  const CubeArrangement good = fixtures::arrangement("fig5_4D");

  CubeArrangement a = good;
  a.slots.push_back({"A", false});
  CHECK_THROWS_AS(assemble(a), StructureError);

  a = good;
  a.meta_arcs.clear();
  CHECK_THROWS_AS(assemble(a), StructureError);

  a = good;
  a.meta_arcs.push_back(a.meta_arcs.front());
  CHECK_THROWS_AS(assemble(a), StructureError);

  a = good;
  a.meta_arcs[0].bijection = "AC";
  CHECK_THROWS_AS(assemble(a), StructureError);

  a = good;
  a.meta_arcs[0].bijection = "nope";
  CHECK_THROWS_AS(assemble(a), ConfigurationError);

  a = good;
  a.slots[1].cube = "Z";
  CHECK_THROWS_AS(assemble(a), ConfigurationError);

  a = good;
  a.meta_dimension = 0;
  CHECK_THROWS_AS(assemble(a), StructureError);

  a = good;
  a.cubes["B"] = fixtures::cube("C2").expand();
  CHECK_THROWS_AS(assemble(a), StructureError);
}

TEST_CASE("reversed meta-arc runs connectors the other way") {
  CubeArrangement a = fixtures::arrangement("fig5_4D");
  std::swap(a.meta_arcs[0].from, a.meta_arcs[0].to);
  const PartialOrientedCube p = assemble(a);
  CHECK(p.inter_slot_zeros == 2);
  std::size_t backward = 0;
  for (const Arc& arc : p.fixed_arcs) {
    if (arc.tail >= 8 && arc.head < 8) ++backward;
  }
  CHECK(backward == 2);
}
