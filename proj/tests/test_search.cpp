#include "catch_amalgamated.hpp"

#include <set>

#include "cordial/fixtures.hpp"
#include "cordial/search.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cordial;

TEST_CASE("signed permutations") {
  const auto group = SignedPermutation::all(3);
  CHECK(group.size() == 48);
  std::set<std::pair<std::vector<int>, Vertex>> distinct;
  for (const auto& g : group) distinct.insert({g.axis_perm, g.flip_mask});
  CHECK(distinct.size() == 48);
  CHECK(group.front() == SignedPermutation::identity(3));

  const SignedPermutation g{{1, 2, 0}, 0b001};
  // 0b011 ^ 0b001 = 0b010; bit 1 moves to bit 2.
  CHECK(g.apply(0b011) == 0b100);
}

TEST_CASE("automorphisms preserve adjacency") {
  for (int dim = 1; dim <= 4; ++dim) {
    for (const SignedPermutation& g : SignedPermutation::all(dim)) {
      for (Vertex v = 0; v < (Vertex{1} << dim); ++v) {
        for (int i = 0; i < dim; ++i) {
          CHECK(std::popcount(g.apply(v) ^ g.apply(v ^ (Vertex{1} << i))) == 1);
        }
      }
    }
  }
}

TEST_CASE("applying an automorphism maps arcs and labels consistently") {
  testing::Gen gen(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = gen.integer(1, 4);
    const auto group = SignedPermutation::all(dim);
    const SignedPermutation& g = group[gen.next() % group.size()];
    const OrientedHypercube q = gen.cube(dim);
    const VertexLabeling f = gen.labeling(q.vertex_count());

    const OrientedHypercube gq = apply(g, q);
    const VertexLabeling gf = apply(g, f);
    std::set<Arc> expected;
    const Digraph qg = hypercube_digraph(q);
    for (const Arc& a : qg.arcs()) expected.insert({g.apply(a.tail), g.apply(a.head)});
    const std::vector<Arc> image_arcs = hypercube_digraph(gq).arcs();
    CHECK(std::set<Arc>(image_arcs.begin(), image_arcs.end()) == expected);
    for (Vertex v = 0; v < q.vertex_count(); ++v) CHECK(gf[g.apply(v)] == f[v]);
    CHECK(lambda(hypercube_digraph(gq), gf) == lambda(hypercube_digraph(q), f));
  }
}

TEST_CASE("friendly labeling enumeration") {
  for (std::size_t n = 0; n <= 9; ++n) {
    std::set<std::vector<std::uint8_t>> seen;
    const auto visited = for_each_friendly_labeling(n, [&](const VertexLabeling& f) {
      CHECK(is_friendly(f));
      seen.insert(f.bits());
      return true;
    });
    CHECK(visited == friendly_labeling_count(n));
    CHECK(seen.size() == visited);
  }
  CHECK(friendly_labeling_count(8) == 70);
  CHECK(friendly_labeling_count(7) == 70);
  CHECK(friendly_labeling_count(6) == 20);
  CHECK(friendly_labeling_count(1000) == std::numeric_limits<std::uint64_t>::max());

  std::uint64_t calls = 0;
  CHECK(for_each_friendly_labeling(8, [&](const VertexLabeling&) { return ++calls < 5; }) == 5);
}

TEST_CASE("cordial search on fixtures") {
  const CordialSearchResult c3 = find_cordial_labeling(hypercube_digraph(fixtures::cube("C3").cube));
  REQUIRE(c3.witness);
  CHECK(is_23_cordial_pair(hypercube_digraph(fixtures::cube("C3").cube), *c3.witness));

  const OrientedHypercube v = fixtures::cube_v();
  for (const OrientedHypercube& q : {v, reverse(v)}) {
    const CordialSearchResult r = find_cordial_labeling(hypercube_digraph(q));
    CHECK_FALSE(r.witness);
    CHECK(r.labelings_examined == 70);
  }
  CHECK_THROWS_AS(find_cordial_labeling(Digraph(2, {{0, 1}, {1, 0}})), DomainError);
}

TEST_CASE("cordial search agrees with brute force") {
  testing::Gen gen(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph g = gen.digraph(static_cast<std::size_t>(gen.integer(1, 7)));
    if (!is_digon_free(g)) continue;
    const CordialSearchResult r = find_cordial_labeling(g);
    CHECK(r.witness.has_value() == testing::has_cordial_labeling(g.vertex_count(), g.arcs()));
    if (r.witness) CHECK(is_23_cordial_pair(g, *r.witness));
  }
}

TEST_CASE("canonical form is an orbit invariant") {
  testing::Gen gen(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = gen.integer(1, 4);
    const OrientedHypercube q = gen.cube(dim);
    const auto group = SignedPermutation::all(dim);
    const OrientedHypercube moved = apply(group[gen.next() % group.size()], q);
    const OrientedHypercube c = canonical_form(q);
    CHECK(c == canonical_form(moved));
    CHECK(c.orientation() <= q.orientation());
    CHECK(canonical_form(c) == c);
    CHECK(testing::orbit_key(dim, hypercube_digraph(c).arcs()) ==
          testing::orbit_key(dim, hypercube_digraph(q).arcs()));
  }
}

TEST_CASE("class counts match the Burnside oracle") {
  for (int dim = 1; dim <= 3; ++dim) {
    std::uint64_t visited = 0;
    const auto classes = enumerate_classes(dim, 1, &visited);
    CHECK(visited == (std::uint64_t{1} << OrientedHypercube::edge_count(dim)));
    CHECK(classes.size() == testing::burnside_orbit_count(dim));
    CHECK(std::is_sorted(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
      return a.orientation() < b.orientation();
    }));
  }
  CHECK(testing::burnside_orbit_count(1) == 1);
  CHECK(testing::burnside_orbit_count(2) == 4);
  CHECK_THROWS_AS(enumerate_classes(4), ArgumentError);
  CHECK_THROWS_AS(enumerate_classes(0), ArgumentError);
}

TEST_CASE("classification in low dimensions") {
  const ClassificationReport q1 = classify_cordiality(1);
  CHECK(q1.isomorphism_class_count == 1);
  CHECK(q1.non_cordial_class_representatives.empty());

  const ClassificationReport q3 = classify_cordiality(3);
  const auto oracle = testing::non_cordial_orbits(3);
  std::set<std::vector<Arc>> found;
  for (const auto& rep : q3.non_cordial_class_representatives) {
    found.insert(testing::orbit_key(3, hypercube_digraph(rep).arcs()));
  }
  CHECK(found == oracle);
  CHECK(q3.non_cordial_class_representatives.size() == 2);

  const ClassificationReport q2 = classify_cordiality(2);
  std::set<std::vector<Arc>> found2;
  for (const auto& rep : q2.non_cordial_class_representatives) {
    found2.insert(testing::orbit_key(2, hypercube_digraph(rep).arcs()));
  }
  CHECK(found2 == testing::non_cordial_orbits(2));
}

TEST_CASE("classification is independent of the job count") {
  const ClassificationReport one = classify_cordiality(3, 1);
  for (unsigned jobs : {2U, 3U, 8U, 64U}) CHECK(classify_cordiality(3, jobs) == one);
}

TEST_CASE("x graphs") {
  const UndirectedGraph x6 = x_graph(6);
  CHECK(x6.vertex_count() == 6);
  CHECK(x6.edges().size() == 3);
  CHECK_THROWS_AS(x_graph(5), ArgumentError);

  // Every friendly labeling of six vertices yields 0 or 2 monochromatic edges.
  std::uint64_t labelings = 0;
  for_each_friendly_labeling(6, [&](const VertexLabeling& f) {
    int zeros = 0;
    for (const UndirectedEdge& e : x6.edges()) zeros += f[e.u] == f[e.v] ? 1 : 0;
    CHECK((zeros == 0 || zeros == 2));
    ++labelings;
    return true;
  });
  CHECK(labelings == 20);
}

TEST_CASE("orientation search on x graphs") {
  const auto x6 = find_23_orientation(x_graph(6));
  CHECK_FALSE(x6.witness);
  CHECK(x6.orientations_examined == 8);

  const auto x7 = find_23_orientation(x_graph(7));
  CHECK_FALSE(x7.witness);
  CHECK(x7.searched_vertices == 6);

  const auto x7_full = find_23_orientation(x_graph(7), {.keep_isolated = true});
  REQUIRE(x7_full.witness);
  CHECK(x7_full.searched_vertices == 7);
  CHECK(is_23_cordial_pair(x7_full.witness->digraph, x7_full.witness->labeling));
}

TEST_CASE("orientation search agrees with brute force") {
  testing::Gen gen(13);
  for (int trial = 0; trial < 40; ++trial) {
    const UndirectedGraph g = gen.undirected(static_cast<std::size_t>(gen.integer(2, 6)));
    const auto r = find_23_orientation(g, {.keep_isolated = true});
    bool any = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edges().size()) && !any; ++mask) {
      std::vector<Arc> arcs;
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto [u, v] = g.edges()[e];
        arcs.push_back((mask >> e) & 1U ? Arc{v, u} : Arc{u, v});
      }
      any = testing::has_cordial_labeling(g.vertex_count(), arcs);
    }
    CHECK(r.witness.has_value() == any);
    if (r.witness) CHECK(is_23_cordial_pair(r.witness->digraph, r.witness->labeling));
  }
}

TEST_CASE("orientation search budget") {
  CHECK_THROWS_AS(find_23_orientation(x_graph(6), {.budget = 100}), BudgetError);
  CHECK_NOTHROW(find_23_orientation(x_graph(6), {.budget = 160}));
}

TEST_CASE("random exploration is reproducible") {
  const ExplorationReport a = explore_random(4, 5, 42, 2000);
  const ExplorationReport b = explore_random(4, 5, 42, 2000);
  CHECK(a.cordial_found == b.cordial_found);
  CHECK(a.first_unresolved == b.first_unresolved);
  CHECK(a.samples == 5);

  const ExplorationReport q3 = explore_random(3, 50, 1, 100);
  CHECK(q3.cordial_found <= 50);
  CHECK_THROWS_AS(explore_random(11, 1, 1, 1), ArgumentError);
}
