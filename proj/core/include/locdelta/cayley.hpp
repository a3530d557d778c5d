#ifndef LOCDELTA_CAYLEY_HPP
#define LOCDELTA_CAYLEY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "locdelta/graph.hpp"
#include "locdelta/quotient.hpp"

namespace locdelta {

/// Raised when phi has a zero image or is not injective, so the quotient does
/// not give a graph with |X| neighbours per vertex.
class DegenerateQuotient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cayley graph on F_2^m with connection set S: u ~ v iff u xor v in S.
/// Vertices are the integers 0..2^m-1, bit i being coordinate i.
class CayleyGamma {
 public:
  static constexpr unsigned kMaxDimension = 28;
  static constexpr std::size_t kDefaultMaterializeCap = std::size_t{1} << 14;

  /// S must consist of distinct nonzero elements below 2^m.
  CayleyGamma(unsigned m, std::vector<std::uint32_t> connection);

  unsigned dimension() const noexcept { return m_; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << m_; }
  std::size_t degree() const noexcept { return connection_.size(); }
  std::span<const std::uint32_t> connection() const noexcept { return connection_; }
  bool adjacent(Vertex u, Vertex v) const;

  /// The |S| vertices v xor s in connection-set order. Throws std::out_of_range.
  std::vector<Vertex> neighbors(Vertex v) const;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (std::uint32_t s : connection_) f(v ^ s);
  }

  /// Explicit adjacency; refuses graphs with more than `cap` vertices.
  Graph materialize(std::size_t cap = kDefaultMaterializeCap) const;

 private:
  unsigned m_;
  std::vector<std::uint32_t> connection_;
  std::vector<bool> in_connection_;
};

/// Gamma(G, G', X): connection set phi(X) in point order. Throws DegenerateQuotient
/// when phi is not injective or has a zero image, and std::length_error when
/// dim V exceeds CayleyGamma::kMaxDimension.
CayleyGamma build_gamma(const QuotientData& q);

/// Neighbourhood of vertex 0: vertex i of `graph` is phi(point i).
struct LocalGraph {
  Graph graph;
  std::vector<Vertex> gamma_vertex;  // point -> vertex of Gamma
};

LocalGraph local_graph(const CayleyGamma& gamma, const QuotientData& q);

/// Checks that point -> phi(point) is an isomorphism from the collinearity graph onto
/// the local graph, edge by edge in both directions.
bool local_graph_matches_collinearity(const LocalGraph& local, const PartialLinearSpace& space);

}  // namespace locdelta

#endif  // LOCDELTA_CAYLEY_HPP
