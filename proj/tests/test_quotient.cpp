#include <doctest.h>

#include <random>

#include "locdelta/quotient.hpp"
#include "oracles.hpp"

using namespace locdelta;

namespace {

std::uint32_t mask_of(const BitVector& v) { return static_cast<std::uint32_t>(v.to_u64()); }

}  // namespace

TEST_CASE("dim V = |X| - rank N") {
  struct Row {
    PartialLinearSpace space;
    std::size_t dim;
  };
  const Row rows[] = {{grid_gq21(), 4},
                      {duads_gq22(), 5},
                      {schlafli_gq24(), 6},
                      {vo4_minus3(), 0},
                      {line_graph_petersen(), 6},
                      {flag_space(fano_plane(), "f"), 8},
                      {hamming_space(3), 8},
                      {kneser_space(3), 8},
                      {split_cayley_hexagon(), 14},
                      {dual_hexagon(), 14},
                      {hamming_space(4), 16},
                      {flag_space(duads_gq22(), "j"), 16},
                      {kneser_space(4), 11}};
  for (const auto& r : rows) {
    const QuotientData q = build_quotient(r.space);
    CHECK_MESSAGE(q.dimension() == r.dim, r.space.name);
    CHECK(q.dimension() == r.space.n_points - rank(incidence_matrix(r.space)));
  }
}

TEST_CASE("column-space membership matches brute-force span on random spaces") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const PartialLinearSpace s = oracle::random_space(rng, 12);
    const QuotientData q(s);
    const auto span = oracle::span(oracle::line_masks(s));
    CHECK(q.dimension() == s.n_points - rank(incidence_matrix(s)));
    for (int probe = 0; probe < 16; ++probe) {
      const std::uint32_t u = static_cast<std::uint32_t>(rng()) & ((1u << s.n_points) - 1);
      CHECK(q.in_column_space(BitVector::from_u64(u, s.n_points)) == (span.count(u) == 1));
    }
  }
}

TEST_CASE("weight conditions agree with the definitions on random spaces") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const PartialLinearSpace s = oracle::random_space(rng, 10);
    const QuotientData q(s);
    const auto span = oracle::span(oracle::line_masks(s));
    std::set<std::uint32_t> lines;
    for (std::uint32_t m : oracle::line_masks(s)) lines.insert(m);

    bool w2 = true;
    bool w3 = true;
    for (std::uint32_t u = 1; u < (1u << s.n_points); ++u) {
      if (!span.count(u)) continue;
      if (std::popcount(u) == 2) w2 = false;
      if (std::popcount(u) == 3 && !lines.count(u)) w3 = false;
    }
    CHECK(check_weight2(q).ok == w2);
    if (w2) CHECK(check_weight3(q).ok == w3);
    if (sufficient_condition(q)) {
      CHECK(w2);
      CHECK(w3);
    }
  }
}

TEST_CASE("weight conditions on the catalog") {
  for (const auto& s : {grid_gq21(), duads_gq22(), schlafli_gq24(), line_graph_petersen(), hamming_space(3),
                        kneser_space(3), split_cayley_hexagon(), dual_hexagon(), kneser_space(4)}) {
    const QuotientData q(s);
    CHECK_MESSAGE(check_weight2(q).ok, s.name);
    CHECK_MESSAGE(check_weight3(q).ok, s.name);
  }
  const QuotientData d(vo4_minus3());
  CHECK_FALSE(check_weight2(d).ok);
  CHECK(check_weight2(d).witness.has_value());
}

TEST_CASE("hyperplane complements are the nonzero dual vectors") {
  const QuotientData q(duads_gq22());
  const auto complements = hyperplane_complements(q, 1 << 20);
  CHECK(complements.size() == 31);
  std::set<std::uint32_t> seen;
  for (const auto& c : complements) {
    CHECK(is_hyperplane_complement(q.space(), c.support));
    CHECK_FALSE(c.support.is_zero());
    seen.insert(mask_of(c.support));
  }
  CHECK(seen.size() == 31);

  // Independent count: subsets meeting every line evenly.
  std::size_t even = 0;
  const auto lines = oracle::line_masks(q.space());
  for (std::uint32_t u = 1; u < (1u << 15); ++u) {
    if (std::all_of(lines.begin(), lines.end(), [&](std::uint32_t l) { return std::popcount(u & l) % 2 == 0; })) ++even;
  }
  CHECK(even == 31);
  CHECK(hyperplane_complements(q, 5).size() == 5);
}

TEST_CASE("infinitude witness") {
  for (const auto& s : {line_graph_petersen(), flag_space(fano_plane(), "f"), dual_hexagon(), split_cayley_hexagon(),
                        flag_space(duads_gq22(), "j")}) {
    const QuotientData q(s);
    const auto w = infinitude_witness(q);
    REQUIRE_MESSAGE(w.has_value(), s.name);
    CHECK_FALSE(w->first.support.is_zero());
    CHECK_FALSE(w->second.support.is_zero());
    CHECK_FALSE(w->first.support.intersects(w->second.support));
    CHECK(is_hyperplane_complement(s, w->first.support));
    CHECK(is_hyperplane_complement(s, w->second.support));
  }
  // Finite groups admit no such pair; cross-checked by scanning all complement pairs.
  for (const auto& s : {grid_gq21(), duads_gq22(), schlafli_gq24(), hamming_space(3)}) {
    const QuotientData q(s);
    CHECK_FALSE(infinitude_witness(q).has_value());
    const auto all = hyperplane_complements(q, 1 << 20);
    bool disjoint = false;
    for (std::size_t i = 0; i < all.size() && !disjoint; ++i)
      for (std::size_t j = i + 1; j < all.size() && !disjoint; ++j)
        disjoint = !all[i].support.intersects(all[j].support);
    CHECK_FALSE(disjoint);
  }
}

TEST_CASE("quotient report json") {
  const QuotientData q(line_graph_petersen());
  QuotientReport r;
  r.dim_v = q.dimension();
  r.weight2_ok = true;
  r.weight3_ok = true;
  r.infinite_witness = infinitude_witness(q);
  const auto j = to_json(r);
  CHECK(j["dim_V"] == 6);
  CHECK(j["sufficient_ok"].is_null());
  CHECK(j["infinite_witness"].is_array());
}
