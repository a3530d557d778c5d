#ifndef LOCDELTA_ANALYSIS_HPP
#define LOCDELTA_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "locdelta/cayley.hpp"
#include "locdelta/graph.hpp"
#include "locdelta/parallel.hpp"

namespace locdelta {

inline constexpr int kUnreached = -1;

using ProgressFn = std::function<void(std::string_view)>;

template <NeighborGraph G>
std::vector<int> bfs_distances(const G& g, Vertex base) {
  std::vector<int> dist(g.vertex_count(), kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[base] = 0;
  queue.push_back(base);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    g.for_each_neighbor(u, [&](Vertex w) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

/// Largest distance from base, or nullopt when some vertex is unreachable.
template <NeighborGraph G>
std::optional<int> eccentricity(const G& g, Vertex base) {
  const auto dist = bfs_distances(g, base);
  int ecc = 0;
  for (int d : dist) {
    if (d == kUnreached) return std::nullopt;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

/// Diameter of a vertex-transitive graph: the eccentricity of vertex 0.
/// Only valid for graphs known to be vertex-transitive (e.g. Cayley graphs).
template <NeighborGraph G>
std::optional<int> diameter_vt(const G& g) {
  return eccentricity(g, 0);
}

/// Diameter by BFS from every vertex; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

/// {b_0, ..., b_{d-1}; c_1, ..., c_d}.
struct IntersectionArray {
  std::vector<std::size_t> b;
  std::vector<std::size_t> c;

  std::size_t diameter() const noexcept { return b.size(); }
  std::size_t valency() const noexcept { return b.empty() ? 0 : b.front(); }
  /// k_i, the number of vertices at distance i: k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}.
  std::vector<std::size_t> layer_sizes() const;
  /// "{4,2,1;1,1,4}".
  std::string to_string() const;
  static IntersectionArray parse(std::string_view text);

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Path counts seen from `base`: nullopt unless every vertex at distance i has the
/// same numbers of neighbours at distances i-1 and i+1 from base.
template <NeighborGraph G>
std::optional<IntersectionArray> intersection_array_from(const G& g, Vertex base) {
  const auto dist = bfs_distances(g, base);
  const int diam = *std::max_element(dist.begin(), dist.end());
  if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) return std::nullopt;
  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<std::size_t> b(diam + 1, kUnset), c(diam + 1, kUnset);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const int i = dist[u];
    std::size_t down = 0, up = 0;
    g.for_each_neighbor(u, [&](Vertex w) {
      if (dist[w] == i - 1) ++down;
      if (dist[w] == i + 1) ++up;
    });
    if (b[i] == kUnset) {
      b[i] = up;
      c[i] = down;
    } else if (b[i] != up || c[i] != down) {
      return std::nullopt;
    }
  }
  IntersectionArray out;
  for (int i = 0; i < diam; ++i) out.b.push_back(b[i]);
  for (int i = 1; i <= diam; ++i) out.c.push_back(c[i]);
  return out;
}

/// With assume_vt only `base` is examined; otherwise every vertex must yield the
/// same array.
template <NeighborGraph G>
std::optional<IntersectionArray> intersection_array(const G& g, Vertex base, bool assume_vt) {
  auto first = intersection_array_from(g, base);
  if (!first || assume_vt) return first;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == base) continue;
    auto other = intersection_array_from(g, v);
    if (!other || *other != *first) return std::nullopt;
  }
  return first;
}

struct SrgParameters {
  std::size_t v = 0, k = 0, lambda = 0, mu = 0;
  std::string to_string() const;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// (v, k, lambda, mu) when g is strongly regular and neither complete nor edgeless.
std::optional<SrgParameters> srg_params(const Graph& g);

/// Equitable partition with its quotient: mult[i][j] is the number of neighbours in
/// cell j of any vertex of cell i; the loop of cell i is mult[i][i].
struct QuotientDiagram {
  std::vector<std::size_t> sizes;
  std::vector<std::vector<std::size_t>> mult;
  std::vector<std::uint32_t> cell_of;  // vertex -> cell, empty for fixtures

  std::size_t cell_count() const noexcept { return sizes.size(); }
  std::size_t loop(std::size_t i) const { return mult[i][i]; }
  std::size_t vertex_count() const;

  /// Sizes sum to the vertex count, size(i) mult(i,j) = size(j) mult(j,i), and every
  /// row sums to the same degree. Returns a description of the first failure.
  std::optional<std::string> consistency_error() const;
};

/// A fixture diagram from the cell sizes and the i->j multiplicities; unlisted pairs
/// are zero.
QuotientDiagram make_diagram(std::vector<std::size_t> sizes,
                             const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& arrows);

/// True when some relabelling of cells that fixes cell 0 maps a onto b exactly.
bool diagrams_match(const QuotientDiagram& a, const QuotientDiagram& b);

nlohmann::json to_json(const QuotientDiagram& d);
std::string to_dot(const QuotientDiagram& d, std::string_view name = "diagram");
std::string to_text(const QuotientDiagram& d);

namespace detail {
QuotientDiagram finish_diagram(const std::vector<std::uint32_t>& raw_cells, std::size_t cell_count,
                               const std::vector<Vertex>& bfs_order,
                               const std::function<void(Vertex, const std::function<void(Vertex)>&)>& neighbors);
}

/// Coarsest equitable partition refining ({seed}, rest), by iterated splitting on
/// neighbour-cell signatures. Cells are numbered by BFS discovery from the seed.
template <NeighborGraph G>
QuotientDiagram equitable_refinement(const G& g, Vertex seed, const ProgressFn& progress = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> cell(n, 1);
  cell[seed] = 0;
  std::size_t cells = n > 1 ? 2 : 1;

  std::vector<std::uint32_t> key;
  std::vector<std::uint32_t> next(n);
  for (int round = 1;; ++round) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::vector<std::uint32_t>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      key.clear();
      key.push_back(cell[v]);
      g.for_each_neighbor(v, [&](Vertex w) { key.push_back(cell[w]); });
      std::sort(key.begin() + 1, key.end());
      keys[v] = key;
      ids.emplace(key, 0);
    }
    std::uint32_t id = 0;
    for (auto& [k, value] : ids) value = id++;
    for (Vertex v = 0; v < n; ++v) next[v] = ids.at(keys[v]);
    if (progress) {
      progress("refinement round " + std::to_string(round) + ": " + std::to_string(ids.size()) + " cells over " +
               std::to_string(n) + " vertices");
    }
    const bool stable = ids.size() == cells;
    cell.swap(next);
    cells = ids.size();
    if (stable) break;
  }

  std::vector<Vertex> order;
  order.reserve(n);
  {
    std::vector<bool> seen(n, false);
    seen[seed] = true;
    order.push_back(seed);
    for (std::size_t head = 0; head < order.size(); ++head) {
      g.for_each_neighbor(order[head], [&](Vertex w) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      });
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!seen[v]) order.push_back(v);
    }
  }
  return detail::finish_diagram(cell, cells, order, [&](Vertex v, const std::function<void(Vertex)>& f) {
    g.for_each_neighbor(v, f);
  });
}

/// Antipodal classes: each vertex with the vertices at distance `diameter` from it.
struct Antipodality {
  std::vector<std::vector<Vertex>> classes;
  /// When every class is a pair and swapping within pairs preserves adjacency.
  std::optional<std::vector<Vertex>> swap;
  bool classes_are_pairs = false;
};

/// Requires the at-distance-diameter relation (plus equality) to be an equivalence
/// relation; nullopt otherwise. Uses BFS from every vertex.
std::optional<Antipodality> antipodal_check(const Graph& g, int diameter);

/// Cayley-graph variant: distances are translation invariant, so the relation is
/// read off vertex 0 and the swap map, when classes are pairs, is a translation that
/// is then verified on every edge.
std::optional<Antipodality> antipodal_check(const CayleyGamma& g, int diameter);

/// A vertex bijection f with u~v iff f(u)~f(v), found by joint colour refinement and
/// individualisation with backtracking. Returned maps are verified edge by edge.
std::optional<std::vector<Vertex>> isomorphic(const Graph& g, const Graph& h);

/// Edge-by-edge check that `map` is an isomorphism from g onto h.
bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map);

struct LocallyResult {
  bool ok = true;
  std::size_t vertices_checked = 0;
  std::optional<Vertex> failing_vertex;
  explicit operator bool() const noexcept { return ok; }
};

/// Subgraph induced on the neighbours of v, in neighbour-enumeration order.
template <NeighborGraph G>
Graph neighborhood_graph(const G& g, Vertex v, std::vector<int>& scratch) {
  scratch.resize(g.vertex_count(), -1);
  std::vector<Vertex> nbrs;
  g.for_each_neighbor(v, [&](Vertex w) { nbrs.push_back(w); });
  for (std::size_t i = 0; i < nbrs.size(); ++i) scratch[nbrs[i]] = static_cast<int>(i);
  std::vector<std::vector<Vertex>> adjacency(nbrs.size());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    g.for_each_neighbor(nbrs[i], [&](Vertex x) {
      if (scratch[x] >= 0) adjacency[i].push_back(static_cast<Vertex>(scratch[x]));
    });
  }
  for (Vertex w : nbrs) scratch[w] = -1;
  return Graph::from_adjacency(adjacency);
}

/// Every vertex neighbourhood (only vertex 0 with assume_vt) induces a graph
/// isomorphic to delta. Vertices are checked in parallel on `jobs` workers; the
/// reported failing vertex is the smallest one.
template <NeighborGraph G>
LocallyResult is_locally(const G& g, const Graph& delta, bool assume_vt, unsigned jobs = 1) {
  const std::size_t count = assume_vt ? std::min<std::size_t>(1, g.vertex_count()) : g.vertex_count();
  std::vector<char> ok(count, 0);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1)));
  const std::size_t block = (count + workers - 1) / std::max(1u, workers);
  parallel_for(workers, workers, [&](std::size_t w) {
    std::vector<int> scratch;
    for (std::size_t i = w * block; i < std::min(count, (w + 1) * block); ++i) {
      const Graph local = neighborhood_graph(g, static_cast<Vertex>(i), scratch);
      ok[i] = isomorphic(local, delta).has_value() ? 1 : 0;
    }
  });
  LocallyResult result;
  result.vertices_checked = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (!ok[i]) {
      result.ok = false;
      result.failing_vertex = static_cast<Vertex>(i);
      break;
    }
  }
  return result;
}

}  // namespace locdelta

#endif  // LOCDELTA_ANALYSIS_HPP
