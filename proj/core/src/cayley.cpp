#include "locdelta/cayley.hpp"

#include <algorithm>

namespace locdelta {

CayleyGamma::CayleyGamma(unsigned m, std::vector<std::uint32_t> connection)
    : m_(m), connection_(std::move(connection)) {
  if (m > kMaxDimension) {
    throw std::length_error("CayleyGamma: dimension " + std::to_string(m) + " exceeds cap " +
                            std::to_string(kMaxDimension));
  }
  in_connection_.assign(vertex_count(), false);
  for (std::uint32_t s : connection_) {
    if (s == 0) throw std::invalid_argument("CayleyGamma: zero in connection set");
    if (s >= vertex_count()) throw std::invalid_argument("CayleyGamma: connection element out of range");
    if (in_connection_[s]) throw std::invalid_argument("CayleyGamma: repeated connection element");
    in_connection_[s] = true;
  }
}

bool CayleyGamma::adjacent(Vertex u, Vertex v) const {
  const std::uint32_t s = u ^ v;
  return s < vertex_count() && in_connection_[s];
}

std::vector<Vertex> CayleyGamma::neighbors(Vertex v) const {
  if (v >= vertex_count()) {
    throw std::out_of_range("CayleyGamma::neighbors: vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Vertex> out;
  out.reserve(connection_.size());
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  return out;
}

Graph CayleyGamma::materialize(std::size_t cap) const {
  if (vertex_count() > cap) {
    throw std::length_error("CayleyGamma::materialize: " + std::to_string(vertex_count()) +
                            " vertices exceed cap " + std::to_string(cap));
  }
  return to_graph(*this);
}

CayleyGamma build_gamma(const QuotientData& q) {
  if (q.dimension() > CayleyGamma::kMaxDimension) {
    throw std::length_error("build_gamma: dim V = " + std::to_string(q.dimension()) + " exceeds cap " +
                            std::to_string(CayleyGamma::kMaxDimension));
  }
  if (auto w2 = check_weight2(q); !w2) {
    throw DegenerateQuotient("degenerate quotient: dim V = " + std::to_string(q.dimension()) + ", points " +
                             std::to_string(w2.witness->first) + " and " + std::to_string(w2.witness->second) +
                             " have the same image");
  }
  std::vector<std::uint32_t> connection;
  connection.reserve(q.point_count());
  for (Point x = 0; x < q.point_count(); ++x) {
    const auto code = static_cast<std::uint32_t>(q.phi(x).to_u64());
    if (code == 0) {
      throw DegenerateQuotient("degenerate quotient: point " + std::to_string(x) + " maps to zero");
    }
    connection.push_back(code);
  }
  return CayleyGamma(static_cast<unsigned>(q.dimension()), std::move(connection));
}

LocalGraph local_graph(const CayleyGamma& gamma, const QuotientData& q) {
  LocalGraph out;
  out.gamma_vertex = gamma.neighbors(0);
  const std::size_t n = out.gamma_vertex.size();
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (gamma.adjacent(out.gamma_vertex[i], out.gamma_vertex[j])) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  out.graph = Graph::from_adjacency(adjacency);
  if (n != q.point_count()) throw std::logic_error("local_graph: connection set does not match the points");
  return out;
}

bool local_graph_matches_collinearity(const LocalGraph& local, const PartialLinearSpace& space) {
  // Point i is local vertex i, so the map is the identity on indices.
  return local.graph == collinearity_graph(space);
}

}  // namespace locdelta
