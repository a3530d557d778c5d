#include <doctest.h>

#include <sstream>

#include "locdelta/graph.hpp"
#include "oracles.hpp"

using namespace locdelta;

TEST_CASE("construction and queries") {
  const Graph g(4, std::vector<std::pair<Vertex, Vertex>>{{2, 0}, {0, 1}, {1, 2}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(2) == 3);
  CHECK(g.adjacent(3, 2));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.regular_degree() == -1);
  CHECK(oracle::cube(3).regular_degree() == 3);
  CHECK(std::is_sorted(g.neighbors(2).begin(), g.neighbors(2).end()));
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}});

  CHECK_THROWS(Graph(3, std::vector<std::pair<Vertex, Vertex>>{{1, 1}}));
  CHECK_THROWS(Graph(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 0}}));
  CHECK_THROWS(Graph(3, std::vector<std::pair<Vertex, Vertex>>{{0, 5}}));
  CHECK_THROWS(Graph::from_adjacency({{1}, {}}));
}

TEST_CASE("relabel and induced subgraph") {
  std::mt19937_64 rng(1);
  const Graph c = oracle::cube(4);
  const auto perm = oracle::random_permutation(rng, 16);
  const Graph r = relabel(c, perm);
  for (auto [u, v] : c.edges()) CHECK(r.adjacent(perm[u], perm[v]));
  CHECK(r.edge_count() == c.edge_count());

  const std::vector<Vertex> keep{0, 1, 3, 2};
  const Graph square = induced_subgraph(c, keep);
  CHECK(square.edge_count() == 4);
  CHECK(square.regular_degree() == 2);
}

TEST_CASE("edge list format") {
  std::ostringstream out;
  write_edge_list(out, oracle::cycle(4));
  CHECK(out.str() == "# vertices 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(to_graph(oracle::cycle(5)) == oracle::cycle(5));
}
