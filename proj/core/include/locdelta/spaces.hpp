#ifndef LOCDELTA_SPACES_HPP
#define LOCDELTA_SPACES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locdelta/gf2.hpp"
#include "locdelta/graph.hpp"

namespace locdelta {

using Point = std::uint32_t;
/// A line of three points, stored in increasing order.
using Line = std::array<Point, 3>;

Line make_line(Point a, Point b, Point c);

/// Points 0..n_points-1 and a list of 3-point lines.
struct PartialLinearSpace {
  std::string name;
  std::uint32_t n_points = 0;
  std::vector<Line> lines;

  friend bool operator==(const PartialLinearSpace&, const PartialLinearSpace&) = default;
};

struct ValidationResult {
  bool ok = true;
  std::string message;
  explicit operator bool() const noexcept { return ok; }
};

/// Every line has three distinct in-range points and two points share at most one line.
ValidationResult validate(const PartialLinearSpace& space);

struct Lambda1Result {
  bool ok = true;
  /// An edge lying in zero or several triangles of the collinearity graph.
  std::optional<std::pair<Point, Point>> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Every edge of the collinearity graph lies in exactly one triangle. On a valid
/// space this also forces every triangle to be a line.
Lambda1Result check_lambda1(const PartialLinearSpace& space);

Graph collinearity_graph(const PartialLinearSpace& space);

/// |X| x |L| point-line incidence matrix.
BitMatrix incidence_matrix(const PartialLinearSpace& space);

/// Lines through each point, in line-index order.
std::vector<std::vector<std::uint32_t>> lines_through_points(const PartialLinearSpace& space);

/// Text form: `points <n>` then one line per geometry line with three 0-based indices.
std::string to_text(const PartialLinearSpace& space);
PartialLinearSpace from_text(std::string_view text, std::string name = "imported");

// ---------------------------------------------------------------------------
// Catalog builders. Point numbering is fixed and documented per builder so all
// downstream numbers are reproducible.

/// 3x3 grid: point 3r+c, lines are rows and columns. Collinearity graph 3x3 rook graph.
PartialLinearSpace grid_gq21();
/// Duads of {0..5} in colex order; lines are the 15 synthemes (perfect matchings).
PartialLinearSpace duads_gq22();
/// a_0..a_5 (0..5), b_0..b_5 (6..11), c_ij (12..26, colex); lines {a_i, b_j, c_ij}
/// for i != j and {c_ij, c_kl, c_mn} for each syntheme.
PartialLinearSpace schlafli_gq24();
/// F_3^4 (point = base-3 digits, x1 least significant) with affine lines in singular
/// directions of Q = x1 x2 + x3^2 + x4^2.
PartialLinearSpace vo4_minus3();
/// Points are the 15 edges of the Petersen graph K(5,2); lines are its 10 vertices.
PartialLinearSpace line_graph_petersen();
/// Points of PG(2,2) are the nonzero vectors of F_2^3 (point v-1), lines {x, y, x+y}.
PartialLinearSpace fano_plane();
/// Flags (p, l) of a geometry with 3 points per line and 3 lines per point. Lines are
/// the pencils {(p, l) : l through p} and rows {(p, l) : p on l}. Throws
/// std::invalid_argument when the input is not of that shape.
PartialLinearSpace flag_space(const PartialLinearSpace& geometry, std::string name);
/// Split Cayley hexagon of order 2 on the 63 points of the parabolic quadric
/// X0X4 + X1X5 + X2X6 = X3^2 in PG(6,2).
PartialLinearSpace split_cayley_hexagon();
/// Point-line dual of split_cayley_hexagon().
PartialLinearSpace dual_hexagon();
/// Points become lines and lines become points. Requires 3 lines on every point.
PartialLinearSpace dual_space(const PartialLinearSpace& space, std::string name);
/// F_3^n with lines parallel to the coordinate axes. Requires n >= 1.
PartialLinearSpace hamming_space(unsigned n);
/// d-subsets of a 3d-set (colex rank order); lines are partitions into three d-sets.
/// Requires 1 <= d <= 5.
PartialLinearSpace kneser_space(unsigned d);

struct TripleCoverOptions {
  std::uint64_t seed = 1;
  std::size_t attempts = 64;
  /// Search nodes per attempt.
  std::size_t node_budget = 200000;
};

/// 45-point triple cover of the duad space found by a Z_3 voltage search; absent
/// when the search budget is exhausted. The result's collinearity graph is
/// certified to have intersection array {6,4,2,1;1,1,4,6} before it is returned.
std::optional<PartialLinearSpace> triple_cover_3s6(const TripleCoverOptions& options = {});

}  // namespace locdelta

#endif  // LOCDELTA_SPACES_HPP
