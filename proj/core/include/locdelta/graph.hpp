#ifndef LOCDELTA_GRAPH_HPP
#define LOCDELTA_GRAPH_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace locdelta {

using Vertex = std::uint32_t;

/// Anything that can enumerate the neighbours of a vertex. Implemented by the
/// explicit Graph below and by implicit graphs such as CayleyGamma.
template <class G>
concept NeighborGraph = requires(const G& g, Vertex v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  g.for_each_neighbor(v, [](Vertex) {});
};

/// Simple undirected graph in compressed adjacency form; neighbour lists sorted.
class Graph {
 public:
  Graph() = default;
  /// Builds from an undirected edge list. Loops and duplicate edges are rejected.
  Graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);
  /// Builds from symmetric adjacency lists (each edge listed at both ends).
  static Graph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (Vertex w : neighbors(v)) f(w);
  }

  /// Degree if every vertex has the same degree, otherwise -1.
  long regular_degree() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Materializes any neighbour source into an explicit Graph.
template <NeighborGraph G>
Graph to_graph(const G& g) {
  std::vector<std::vector<Vertex>> adjacency(g.vertex_count());
  for (Vertex v = 0; v < adjacency.size(); ++v) {
    g.for_each_neighbor(v, [&](Vertex w) { adjacency[v].push_back(w); });
  }
  return Graph::from_adjacency(adjacency);
}

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Applies a vertex relabelling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

void write_edge_list_impl(std::ostream& out, std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

/// `# vertices <n>` header then one `u v` line per edge with u < v, sorted.
template <NeighborGraph G>
void write_edge_list(std::ostream& out, const G& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    std::vector<Vertex> higher;
    g.for_each_neighbor(u, [&](Vertex w) {
      if (u < w) higher.push_back(w);
    });
    std::sort(higher.begin(), higher.end());
    for (Vertex w : higher) edges.emplace_back(u, w);
  }
  write_edge_list_impl(out, g.vertex_count(), edges);
}

}  // namespace locdelta

#endif  // LOCDELTA_GRAPH_HPP
