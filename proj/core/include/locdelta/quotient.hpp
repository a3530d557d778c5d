#ifndef LOCDELTA_QUOTIENT_HPP
#define LOCDELTA_QUOTIENT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "locdelta/gf2.hpp"
#include "locdelta/spaces.hpp"

namespace locdelta {

/// V = F_2^X / colspace(N) for the incidence matrix N of a space, with the
/// coordinate map phi. Row i of dual_basis is the i-th basis vector of ker(N^T);
/// phi(x) is column x of dual_basis, so u lies in colspace(N) iff dual_basis * u = 0.
class QuotientData {
 public:
  explicit QuotientData(PartialLinearSpace space);

  const PartialLinearSpace& space() const noexcept { return space_; }
  const BitMatrix& incidence() const noexcept { return incidence_; }
  const BitMatrix& dual_basis() const noexcept { return dual_basis_; }
  std::size_t dimension() const noexcept { return dual_basis_.rows(); }
  std::size_t point_count() const noexcept { return space_.n_points; }

  const BitVector& phi(Point x) const { return phi_[x]; }
  std::span<const BitVector> phis() const noexcept { return phi_; }

  /// u (length |X|) lies in the column space of N.
  bool in_column_space(const BitVector& u) const;

 private:
  PartialLinearSpace space_;
  BitMatrix incidence_;
  BitMatrix dual_basis_;
  std::vector<BitVector> phi_;
};

QuotientData build_quotient(const PartialLinearSpace& space);

struct Weight2Result {
  bool ok = true;
  /// Two points with equal images (their sum is a weight-2 vector in colspace(N)).
  std::optional<std::pair<Point, Point>> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// No vector of weight 2 lies in colspace(N): phi is injective.
Weight2Result check_weight2(const QuotientData& q);

struct Weight3Result {
  bool ok = true;
  /// Three points whose images sum to zero without forming a line, or a line whose
  /// images do not sum to zero.
  std::optional<Line> witness;
  explicit operator bool() const noexcept { return ok; }
};

/// The lines are the only weight-3 vectors in colspace(N): phi(x) + phi(y) is an image
/// phi(z) exactly when {x, y, z} is a line. Pairs are looked up in a hash of images.
Weight3Result check_weight3(const QuotientData& q);

/// Complement of a geometric hyperplane: every line meets the support in 0 or 2 points.
struct HyperplaneComplement {
  BitVector support;
  friend bool operator==(const HyperplaneComplement&, const HyperplaneComplement&) = default;
};

/// Nonzero vectors of the dual code spanned by dual_basis. All 2^m - 1 of them when
/// that is at most `limit`, otherwise the first `limit` in Gray-code order.
std::vector<HyperplaneComplement> hyperplane_complements(const QuotientData& q, std::size_t limit);

/// Every pair of points, and every triple of pairwise noncollinear points, has a
/// hyperplane complement containing exactly one of them. Cost is cubic in |X|.
bool sufficient_condition(const QuotientData& q);

inline constexpr std::size_t kDefaultWitnessBudget = 1'000'000;

/// Two nonzero hyperplane complements with disjoint supports. Candidates c1 are taken
/// in increasing weight (exhaustively when 2^m - 1 <= budget); for each, a partner
/// disjoint from it exists iff the images of its support do not span V.
std::optional<std::pair<HyperplaneComplement, HyperplaneComplement>> infinitude_witness(
    const QuotientData& q, std::size_t budget = kDefaultWitnessBudget);

/// Line-evenness check used to certify complements.
bool is_hyperplane_complement(const PartialLinearSpace& space, const BitVector& support);

struct QuotientReport {
  std::size_t dim_v = 0;
  bool weight2_ok = false;
  bool weight3_ok = false;
  std::optional<bool> sufficient_ok;
  std::optional<std::pair<HyperplaneComplement, HyperplaneComplement>> infinite_witness;
};

/// {dim_V, weight2_ok, weight3_ok, sufficient_ok, infinite_witness}; supports are
/// lists of point indices, sufficient_ok is null when the audit was skipped.
nlohmann::json to_json(const QuotientReport& report);

}  // namespace locdelta

#endif  // LOCDELTA_QUOTIENT_HPP
