#ifndef LOCDELTA_KNESER_HPP
#define LOCDELTA_KNESER_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "locdelta/cayley.hpp"
#include "locdelta/graph.hpp"
#include "locdelta/subsets.hpp"

namespace locdelta {

inline constexpr std::uint64_t kKneserVertexCap = 1'000'000;
inline constexpr unsigned kEvenWeightLogCap = 20;

/// K(n,d): d-subsets of {0..n-1} in colex rank order, adjacent when disjoint.
/// Throws std::length_error above kKneserVertexCap vertices.
Graph kneser(unsigned n, unsigned d);

struct ClassicLocalResult {
  bool ok = true;
  std::size_t vertices_checked = 0;
  std::optional<Vertex> failing_vertex;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks at every vertex A of K(n+d,d) that the neighbourhood, identified with the
/// d-subsets of the complement of A, induces exactly K(n,d).
ClassicLocalResult locally_kneser_classic(unsigned n, unsigned d);

/// Even-weight vectors of length 3d, adjacent when their sum has weight 2d.
/// Vertex v (< 2^(3d-1)) is the vector whose low 3d-1 bits are v and whose top bit
/// completes the parity.
class EvenWeightGraph {
 public:
  explicit EvenWeightGraph(unsigned d);

  unsigned d() const noexcept { return d_; }
  unsigned length() const noexcept { return 3 * d_; }
  std::size_t vertex_count() const noexcept { return std::size_t{1} << (3 * d_ - 1); }
  std::size_t degree() const noexcept { return connection_.size(); }

  std::uint32_t vector_of(Vertex v) const;
  Vertex index_of(std::uint32_t vector) const;
  /// The weight-2d vectors, increasing.
  std::span<const std::uint32_t> connection() const noexcept { return connection_; }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    const std::uint32_t base = vector_of(v);
    for (std::uint32_t s : connection_) f(index_of(base ^ s));
  }

 private:
  unsigned d_;
  std::vector<std::uint32_t> connection_;
};

/// Requires d >= 1 and 3d-1 <= kEvenWeightLogCap.
EvenWeightGraph even_weight_graph(unsigned d);

/// Checks at each listed vertex v that w -> complement(w + v) maps the neighbourhood
/// of v onto the d-subsets of a 3d-set and induces exactly K(3d,d).
ClassicLocalResult even_weight_locally_kneser(const EvenWeightGraph& g, std::span<const Vertex> vertices);

struct QuotientIdentification {
  bool ok = false;
  std::size_t dimension = 0;
  /// Image of the i-th unit vector of the quotient coordinates, as an even-weight vector.
  std::vector<std::uint32_t> linear_map;
  bool map_matches_points = false;
  bool bijective = false;
  bool edges_preserved = false;
  /// Quotient-graph vertex -> even-weight graph vertex index.
  std::vector<Vertex> vertex_map;
};

/// Builds the quotient graph of kneser_space(d) and the linear map sending the class
/// of point A to the complement of A, then checks it is a graph isomorphism onto
/// even_weight_graph(d).
QuotientIdentification identify_with_quotient(unsigned d);

}  // namespace locdelta

#endif  // LOCDELTA_KNESER_HPP
