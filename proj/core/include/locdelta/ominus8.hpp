#ifndef LOCDELTA_OMINUS8_HPP
#define LOCDELTA_OMINUS8_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "locdelta/graph.hpp"

namespace locdelta::o8 {

using Vec8 = std::uint8_t;  // bit i is coordinate x_{i+1}

/// Q(x) = x1x2 + x3x4 + x5x6 + x7^2 + x7x8 + x8^2, of minus type.
bool quadratic_form(Vec8 x) noexcept;
/// Polarisation B(x, y) = Q(x+y) + Q(x) + Q(y).
bool bilinear_form(Vec8 x, Vec8 y) noexcept;

/// Nonzero vectors with Q = 0.
std::vector<Vec8> singular_vectors();

/// The three nonzero vectors {x, y, x+y} of a 2-space, increasing.
struct EllipticLine {
  std::array<Vec8, 3> vectors;
  friend auto operator<=>(const EllipticLine&, const EllipticLine&) = default;
};

/// Projective lines of PG(7,2) containing no singular point, in increasing order.
std::vector<EllipticLine> enumerate_elliptic_lines();

/// Lines orthogonal when B vanishes on the 2x2 pairs of their first two vectors.
bool orthogonal(const EllipticLine& a, const EllipticLine& b) noexcept;

/// Vertex i is lines[i].
Graph elliptic_graph(const std::vector<EllipticLine>& lines);

struct AuditResult {
  bool ok = true;
  std::size_t vertices_checked = 0;
  std::optional<Vertex> failing_vertex;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks that neighbourhoods induce K(8,3). All vertices by default; with `sample`
/// set, that many vertices spread evenly over the graph.
AuditResult verify_locally_k83(const Graph& g, std::optional<std::size_t> sample = std::nullopt, unsigned jobs = 1);

}  // namespace locdelta::o8

#endif  // LOCDELTA_OMINUS8_HPP
