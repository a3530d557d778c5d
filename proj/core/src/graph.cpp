#include "locdelta/graph.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace locdelta {

Graph::Graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<std::vector<Vertex>> adjacency(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  *this = from_adjacency(adjacency);
}

Graph Graph::from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  Graph g;
  g.offsets_.reserve(adjacency.size() + 1);
  g.offsets_.push_back(0);
  for (Vertex v = 0; v < adjacency.size(); ++v) {
    std::vector<Vertex> nbrs = adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("Graph: duplicate edge at vertex " + std::to_string(v));
    }
    for (Vertex w : nbrs) {
      if (w == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(v));
      if (w >= adjacency.size()) throw std::out_of_range("Graph: neighbour out of range");
    }
    g.targets_.insert(g.targets_.end(), nbrs.begin(), nbrs.end());
    g.offsets_.push_back(g.targets_.size());
  }
  for (Vertex v = 0; v < adjacency.size(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (!g.adjacent(w, v)) throw std::invalid_argument("Graph: adjacency is not symmetric");
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

long Graph::regular_degree() const {
  if (vertex_count() == 0) return 0;
  const std::size_t k = degree(0);
  for (Vertex v = 1; v < vertex_count(); ++v) {
    if (degree(v) != k) return -1;
  }
  return static_cast<long>(k);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex w : neighbors(u)) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::vector<Vertex>> adjacency(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  return Graph::from_adjacency(adjacency);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<std::vector<Vertex>> adjacency(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) adjacency[perm[v]].push_back(perm[w]);
  }
  return Graph::from_adjacency(adjacency);
}

void write_edge_list_impl(std::ostream& out, std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  out << "# vertices " << n << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace locdelta
