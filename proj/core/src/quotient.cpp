#include "locdelta/quotient.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace locdelta {

namespace {

// Rank of a set of vectors of at most 64 bits.
std::size_t rank_u64(std::span<const std::uint64_t> vectors) {
  std::array<std::uint64_t, 64> basis{};  // basis[b] has top bit b
  std::size_t r = 0;
  for (std::uint64_t v : vectors) {
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        ++r;
        break;
      }
      v ^= basis[top];
    }
  }
  return r;
}

std::vector<std::uint64_t> phi_codes(const QuotientData& q) {
  std::vector<std::uint64_t> codes;
  codes.reserve(q.point_count());
  for (const auto& p : q.phis()) codes.push_back(p.to_u64());
  return codes;
}

// Calls f(c) for the nonzero vectors of the span of `basis` in Gray-code order,
// stopping after `limit` vectors or when f returns false.
template <class F>
void for_each_span_vector(const BitMatrix& basis, std::size_t limit, F&& f) {
  const std::size_t m = basis.rows();
  if (m == 0 || limit == 0) return;
  BitVector c(basis.cols());
  const std::uint64_t total = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  std::size_t produced = 0;
  for (std::uint64_t i = 1; i <= total && produced < limit; ++i) {
    c ^= basis.row(static_cast<std::size_t>(std::countr_zero(i)));
    ++produced;
    if (!f(c)) return;
  }
}

std::unordered_map<std::uint64_t, Point> third_points(const PartialLinearSpace& space) {
  // (min, max) pair -> third point of its line.
  std::unordered_map<std::uint64_t, Point> third;
  for (const Line& l : space.lines) {
    auto key = [](Point a, Point b) { return (std::uint64_t{a} << 32) | b; };
    third[key(l[0], l[1])] = l[2];
    third[key(l[0], l[2])] = l[1];
    third[key(l[1], l[2])] = l[0];
  }
  return third;
}

}  // namespace

QuotientData::QuotientData(PartialLinearSpace space) : space_(std::move(space)) {
  if (auto v = validate(space_); !v) {
    throw std::invalid_argument("build_quotient: invalid space " + space_.name + ": " + v.message);
  }
  incidence_ = incidence_matrix(space_);
  dual_basis_ = kernel_basis(incidence_.transposed());
  phi_.reserve(space_.n_points);
  for (Point x = 0; x < space_.n_points; ++x) phi_.push_back(dual_basis_.column(x));
}

bool QuotientData::in_column_space(const BitVector& u) const {
  if (u.size() != point_count()) throw std::invalid_argument("in_column_space: length mismatch");
  return dual_basis_.multiply(u).is_zero();
}

QuotientData build_quotient(const PartialLinearSpace& space) { return QuotientData(space); }

Weight2Result check_weight2(const QuotientData& q) {
  std::unordered_map<BitVector, Point> seen;
  seen.reserve(q.point_count());
  for (Point x = 0; x < q.point_count(); ++x) {
    auto [it, inserted] = seen.emplace(q.phi(x), x);
    if (!inserted) return {false, std::make_pair(it->second, x)};
  }
  return {};
}

Weight3Result check_weight3(const QuotientData& q) {
  const auto& space = q.space();
  for (const Line& l : space.lines) {
    if (!(q.phi(l[0]) ^ q.phi(l[1]) ^ q.phi(l[2])).is_zero()) return {false, l};
  }
  std::unordered_map<BitVector, Point> image;
  image.reserve(q.point_count());
  for (Point x = 0; x < q.point_count(); ++x) image.emplace(q.phi(x), x);
  const auto third = third_points(space);

  for (Point x = 0; x < q.point_count(); ++x) {
    for (Point y = x + 1; y < q.point_count(); ++y) {
      const auto it = image.find(q.phi(x) ^ q.phi(y));
      if (it == image.end()) continue;
      const Point z = it->second;
      const auto line = third.find((std::uint64_t{x} << 32) | y);
      if (line == third.end() || line->second != z) return {false, make_line(x, y, z)};
    }
  }
  return {};
}

bool is_hyperplane_complement(const PartialLinearSpace& space, const BitVector& support) {
  if (support.size() != space.n_points || support.is_zero()) return false;
  for (const Line& l : space.lines) {
    const int meet = support.get(l[0]) + support.get(l[1]) + support.get(l[2]);
    if (meet != 0 && meet != 2) return false;
  }
  return true;
}

std::vector<HyperplaneComplement> hyperplane_complements(const QuotientData& q, std::size_t limit) {
  std::vector<HyperplaneComplement> out;
  for_each_span_vector(q.dual_basis(), limit, [&](const BitVector& c) {
    out.push_back({c});
    return true;
  });
  return out;
}

bool sufficient_condition(const QuotientData& q) {
  const std::size_t n = q.point_count();
  if (n >= 2 && !check_weight2(q)) return false;
  if (q.dimension() > 64) throw std::length_error("sufficient_condition: dim V above 64 is not supported");
  const auto codes = phi_codes(q);
  const Graph g = collinearity_graph(q.space());

  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) continue;
      for (Point z = y + 1; z < n; ++z) {
        if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
        // Coordinates hit by some linear relation among the three images; a
        // complement meeting exactly one point exists iff some coordinate is free.
        unsigned covered = 0;
        const std::uint64_t v[3] = {codes[x], codes[y], codes[z]};
        for (unsigned mask = 1; mask < 8; ++mask) {
          std::uint64_t s = 0;
          for (int i = 0; i < 3; ++i) {
            if ((mask >> i) & 1u) s ^= v[i];
          }
          if (s == 0) covered |= mask;
        }
        if (covered == 0b111) return false;
      }
    }
  }
  return true;
}

std::optional<std::pair<HyperplaneComplement, HyperplaneComplement>> infinitude_witness(const QuotientData& q,
                                                                                       std::size_t budget) {
  const std::size_t m = q.dimension();
  if (m == 0) return std::nullopt;
  if (m > 64) throw std::length_error("infinitude_witness: dim V above 64 is not supported");

  std::vector<BitVector> candidates;
  for_each_span_vector(q.dual_basis(), budget, [&](const BitVector& c) {
    candidates.push_back(c);
    return true;
  });
  std::stable_sort(candidates.begin(), candidates.end(), [](const BitVector& a, const BitVector& b) {
    const auto wa = a.weight();
    const auto wb = b.weight();
    return wa != wb ? wa < wb : a < b;
  });

  const auto codes = phi_codes(q);
  std::vector<std::uint64_t> images;
  for (const BitVector& c1 : candidates) {
    images.clear();
    for (std::size_t x : c1.support()) images.push_back(codes[x]);
    if (rank_u64(images) == m) continue;

    // u orthogonal to every image on supp(c1); its dual vector avoids supp(c1).
    BitMatrix rows(0, m);
    for (std::uint64_t code : images) rows.append_row(BitVector::from_u64(code, m));
    const BitMatrix orth = kernel_basis(rows);
    const BitVector& u = orth.row(0);
    BitVector c2(q.point_count());
    for (Point x = 0; x < q.point_count(); ++x) {
      if (u.dot(q.phi(x))) c2.set(x);
    }
    return std::make_pair(HyperplaneComplement{c1}, HyperplaneComplement{c2});
  }
  return std::nullopt;
}

nlohmann::json to_json(const QuotientReport& report) {
  nlohmann::json j;
  j["dim_V"] = report.dim_v;
  j["weight2_ok"] = report.weight2_ok;
  j["weight3_ok"] = report.weight3_ok;
  j["sufficient_ok"] = report.sufficient_ok ? nlohmann::json(*report.sufficient_ok) : nlohmann::json(nullptr);
  if (report.infinite_witness) {
    j["infinite_witness"] = nlohmann::json::array(
        {report.infinite_witness->first.support.support(), report.infinite_witness->second.support.support()});
  } else {
    j["infinite_witness"] = nullptr;
  }
  return j;
}

}  // namespace locdelta
