#include <doctest.h>

#include <random>

#include "locdelta/analysis.hpp"
#include "locdelta/cayley.hpp"
#include "oracles.hpp"

using namespace locdelta;

TEST_CASE("distances and diameter") {
  const Graph c = oracle::cube(4);
  CHECK(bfs_distances(c, 0) == oracle::distances(c, 0));
  CHECK(diameter(c) == 4);
  CHECK(diameter(oracle::petersen()) == 2);
  CHECK(diameter(oracle::cycle(9)) == 4);
  const Graph split(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
  CHECK_FALSE(diameter(split).has_value());
}

TEST_CASE("intersection arrays and srg parameters") {
  CHECK(intersection_array(oracle::cube(3), 0, false)->to_string() == "{3,2,1;1,2,3}");
  CHECK(intersection_array(oracle::petersen(), 0, false)->to_string() == "{3,2;1,1}");
  CHECK(srg_params(oracle::petersen())->to_string() == "srg(10,3,0,1)");
  CHECK_FALSE(srg_params(oracle::cube(3)).has_value());
  CHECK(intersection_array(oracle::cycle(7), 0, false)->to_string() == "{2,1,1;1,1,1}");

  // A path is not distance-regular.
  const Graph path(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(intersection_array(path, 0, false).has_value());

  const auto ia = IntersectionArray::parse("{6,4,2,1;1,1,4,6}");
  CHECK(ia.to_string() == "{6,4,2,1;1,1,4,6}");
  CHECK(ia.diameter() == 4);
  CHECK(ia.valency() == 6);
  CHECK(ia.layer_sizes() == std::vector<std::size_t>{1, 6, 24, 12, 2});
  CHECK_THROWS(IntersectionArray::parse("{1,2;3"));
}

TEST_CASE("equitable refinement satisfies the diagram identities") {
  const Graph graphs[] = {oracle::cube(3), oracle::cube(5), oracle::petersen(), oracle::cycle(8)};
  const std::size_t expected_cells[] = {4, 6, 3, 5};
  for (std::size_t i = 0; i < 4; ++i) {
    const QuotientDiagram d = equitable_refinement(graphs[i], 0);
    CHECK(d.cell_count() == expected_cells[i]);
    CHECK_FALSE(d.consistency_error().has_value());
    CHECK(d.vertex_count() == graphs[i].vertex_count());
    // Equitability checked directly on the graph.
    for (Vertex v = 0; v < graphs[i].vertex_count(); ++v) {
      std::vector<std::size_t> counts(d.cell_count(), 0);
      for (Vertex w : graphs[i].neighbors(v)) ++counts[d.cell_of[w]];
      for (std::size_t j = 0; j < d.cell_count(); ++j) CHECK(counts[j] == d.mult[d.cell_of[v]][j]);
    }
  }
}

TEST_CASE("diagram fixtures compare up to relabelling") {
  const QuotientDiagram a = make_diagram({1, 3, 3, 1}, {{0, 1, 3}, {1, 0, 1}, {1, 2, 2}, {2, 1, 2}, {2, 3, 1}, {3, 2, 3}});
  CHECK_FALSE(a.consistency_error().has_value());
  CHECK(diagrams_match(a, equitable_refinement(oracle::cube(3), 0)));
  const QuotientDiagram swapped =
      make_diagram({1, 3, 1, 3}, {{0, 1, 3}, {1, 0, 1}, {1, 3, 2}, {3, 1, 2}, {3, 2, 1}, {2, 3, 3}});
  CHECK(diagrams_match(a, swapped));
  const QuotientDiagram wrong =
      make_diagram({1, 3, 3, 1}, {{0, 1, 3}, {1, 0, 1}, {1, 2, 2}, {2, 1, 2}, {2, 3, 1}, {3, 2, 2}});
  CHECK(wrong.consistency_error().has_value());
  CHECK_FALSE(diagrams_match(a, wrong));

  const auto j = to_json(a);
  CHECK(j["cells"].size() == 4);
  CHECK(j["cells"][1]["size"] == 3);
  CHECK(j["edges"].size() == 6);
  CHECK(to_dot(a).find("\"3 (0)\"") != std::string::npos);
}

TEST_CASE("isomorphism search returns verified maps") {
  std::mt19937_64 rng(5);
  for (const Graph& g : {oracle::petersen(), oracle::cube(4), oracle::cycle(11), collinearity_graph(schlafli_gq24())}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto perm = oracle::random_permutation(rng, g.vertex_count());
      const Graph h = relabel(g, perm);
      const auto map = isomorphic(g, h);
      REQUIRE(map.has_value());
      CHECK(verify_isomorphism(g, h, *map));
      for (auto [u, v] : g.edges()) CHECK(h.adjacent((*map)[u], (*map)[v]));
    }
  }
  // Same degree sequence, different graphs.
  const Graph hexagon = oracle::cycle(6);
  const Graph two_triangles(6, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(isomorphic(hexagon, two_triangles).has_value());
  // Petersen against the 5-prism: both cubic on 10 vertices.
  const Graph prism = oracle::graph_from_predicate(10, [](Vertex u, Vertex v) {
    if (u / 5 != v / 5) return u % 5 == v % 5;
    const Vertex d = (v - u) % 5;
    return d == 1 || d == 4;
  });
  CHECK_FALSE(isomorphic(oracle::petersen(), prism).has_value());
  std::vector<Vertex> bad(10, 0);
  CHECK_FALSE(verify_isomorphism(prism, prism, bad));
}

TEST_CASE("antipodality") {
  const auto cube = antipodal_check(oracle::cube(3), 3);
  REQUIRE(cube.has_value());
  CHECK(cube->classes_are_pairs);
  REQUIRE(cube->swap.has_value());
  for (Vertex v = 0; v < 8; ++v) CHECK((*cube->swap)[v] == (v ^ 7u));
  CHECK_FALSE(antipodal_check(oracle::cycle(7), 3).has_value());

  const CayleyGamma cayley(3, {1, 2, 4});
  const auto implicit = antipodal_check(cayley, 3);
  REQUIRE(implicit.has_value());
  CHECK(implicit->swap == cube->swap);
}

TEST_CASE("locally checks") {
  // The octahedron is locally a 4-cycle; the icosahedron locally a 5-cycle.
  const Graph octahedron = oracle::graph_from_predicate(6, [](Vertex u, Vertex v) { return u / 2 != v / 2; });
  CHECK(is_locally(octahedron, oracle::cycle(4), false).ok);
  CHECK_FALSE(is_locally(octahedron, oracle::cycle(5), false).ok);
  CHECK_FALSE(is_locally(oracle::cube(3), oracle::cycle(3), false).ok);

  const QuotientData q(grid_gq21());
  const CayleyGamma g = build_gamma(q);
  const auto all = is_locally(g, collinearity_graph(grid_gq21()), false, 2);
  CHECK(all.ok);
  CHECK(all.vertices_checked == 16);
  CHECK(is_locally(g, collinearity_graph(grid_gq21()), true).vertices_checked == 1);
}
