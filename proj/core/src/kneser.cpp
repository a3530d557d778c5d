#include "locdelta/kneser.hpp"

#include <stdexcept>
#include <string>

#include "locdelta/analysis.hpp"

namespace locdelta {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SubsetRanker::SubsetRanker(unsigned n, unsigned d) : n_(n), d_(d), count_(binomial(n, d)) {
  if (n > 31) throw std::invalid_argument("SubsetRanker: n must be at most 31");
  if (d > n) throw std::invalid_argument("SubsetRanker: d must not exceed n");
  table_.assign(n + 1, std::vector<std::uint64_t>(d + 2, 0));
  for (unsigned c = 0; c <= n; ++c) {
    for (unsigned i = 0; i <= d + 1; ++i) table_[c][i] = binomial(c, i);
  }
}

std::uint64_t SubsetRanker::rank(SubsetMask mask) const {
  if (static_cast<unsigned>(std::popcount(mask)) != d_ || (n_ < 32 && (mask >> n_) != 0)) {
    throw std::invalid_argument("SubsetRanker::rank: mask is not a " + std::to_string(d_) + "-subset");
  }
  std::uint64_t r = 0;
  unsigned i = 1;
  while (mask != 0) {
    const unsigned c = static_cast<unsigned>(std::countr_zero(mask));
    r += table_[c][i++];
    mask &= mask - 1;
  }
  return r;
}

SubsetMask SubsetRanker::unrank(std::uint64_t r) const {
  if (r >= count_) throw std::out_of_range("SubsetRanker::unrank: rank out of range");
  SubsetMask mask = 0;
  unsigned c = n_;
  for (unsigned i = d_; i >= 1; --i) {
    // Largest c with C(c, i) <= r.
    do {
      --c;
    } while (table_[c][i] > r);
    mask |= SubsetMask{1} << c;
    r -= table_[c][i];
  }
  return mask;
}

std::vector<SubsetMask> SubsetRanker::all() const {
  std::vector<SubsetMask> out;
  out.reserve(count_);
  if (d_ == 0) {
    out.push_back(0);
    return out;
  }
  const SubsetMask limit = n_ == 32 ? 0 : (SubsetMask{1} << n_);
  for (SubsetMask m = (SubsetMask{1} << d_) - 1; m < limit && m != 0; m = next_same_popcount(m)) {
    out.push_back(m);
  }
  return out;
}

Graph kneser(unsigned n, unsigned d) {
  if (d > n) throw std::invalid_argument("kneser: require 0 <= d <= n");
  if (binomial(n, d) > kKneserVertexCap) {
    throw std::length_error("kneser: C(" + std::to_string(n) + "," + std::to_string(d) + ") exceeds vertex cap");
  }
  const SubsetRanker ranker(n, d);
  const auto subsets = ranker.all();
  std::vector<std::vector<Vertex>> adjacency(subsets.size());
  if (2 * d <= n && d > 0) {
    const SubsetMask full = (SubsetMask{1} << n) - 1;
    // Enumerate disjoint partners directly: d-subsets of the complement.
    for (Vertex v = 0; v < subsets.size(); ++v) {
      const SubsetMask rest = full & ~subsets[v];
      for (SubsetMask sub = rest; sub != 0; sub = (sub - 1) & rest) {
        if (static_cast<unsigned>(std::popcount(sub)) == d) {
          adjacency[v].push_back(static_cast<Vertex>(ranker.rank(sub)));
        }
      }
    }
  }
  return Graph::from_adjacency(adjacency);
}

ClassicLocalResult locally_kneser_classic(unsigned n, unsigned d) {
  const unsigned big = n + d;
  const Graph g = kneser(big, d);
  const Graph local_reference = kneser(n, d);
  const SubsetRanker big_ranker(big, d);
  const SubsetRanker small_ranker(n, d);
  const SubsetMask full = big == 32 ? ~SubsetMask{0} : ((SubsetMask{1} << big) - 1);

  ClassicLocalResult result;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    const SubsetMask complement = full & ~big_ranker.unrank(a);
    // Position of each complement element among the n remaining points.
    std::vector<int> position(big, -1);
    int next = 0;
    for (unsigned e = 0; e < big; ++e) {
      if ((complement >> e) & 1u) position[e] = next++;
    }
    const auto nbrs = g.neighbors(a);
    if (nbrs.size() != local_reference.vertex_count()) {
      result.ok = false;
      result.failing_vertex = a;
      return result;
    }
    std::vector<Vertex> image(nbrs.size());
    std::vector<bool> hit(local_reference.vertex_count(), false);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const SubsetMask b = big_ranker.unrank(nbrs[i]);
      SubsetMask compressed = 0;
      for (unsigned e = 0; e < big; ++e) {
        if ((b >> e) & 1u) compressed |= SubsetMask{1} << position[e];
      }
      image[i] = static_cast<Vertex>(small_ranker.rank(compressed));
      hit[image[i]] = true;
    }
    bool ok = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    for (std::size_t i = 0; ok && i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < nbrs.size(); ++j) {
        ok = g.adjacent(nbrs[i], nbrs[j]) == local_reference.adjacent(image[i], image[j]);
      }
    }
    ++result.vertices_checked;
    if (!ok) {
      result.ok = false;
      result.failing_vertex = a;
      return result;
    }
  }
  return result;
}

EvenWeightGraph::EvenWeightGraph(unsigned d) : d_(d) {
  if (d < 1) throw std::invalid_argument("even_weight_graph: d must be at least 1");
  if (3 * d - 1 > kEvenWeightLogCap) {
    throw std::length_error("even_weight_graph: 2^(3d-1) exceeds 2^" + std::to_string(kEvenWeightLogCap));
  }
  const unsigned n = 3 * d;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t w = 0; w <= full; ++w) {
    if (static_cast<unsigned>(std::popcount(w)) == 2 * d) connection_.push_back(w);
  }
}

std::uint32_t EvenWeightGraph::vector_of(Vertex v) const {
  const std::uint32_t parity = static_cast<std::uint32_t>(std::popcount(v)) & 1u;
  return v | (parity << (length() - 1));
}

Vertex EvenWeightGraph::index_of(std::uint32_t vector) const {
  if ((std::popcount(vector) & 1) != 0 || (vector >> length()) != 0) {
    throw std::invalid_argument("EvenWeightGraph::index_of: not an even-weight vector of this length");
  }
  return vector & ((std::uint32_t{1} << (length() - 1)) - 1);
}

EvenWeightGraph even_weight_graph(unsigned d) { return EvenWeightGraph(d); }

ClassicLocalResult even_weight_locally_kneser(const EvenWeightGraph& g, std::span<const Vertex> vertices) {
  const unsigned d = g.d();
  const unsigned n = 3 * d;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const Graph reference = kneser(n, d);
  const SubsetRanker ranker(n, d);

  ClassicLocalResult result;
  for (Vertex v : vertices) {
    const std::uint32_t base = g.vector_of(v);
    std::vector<std::uint32_t> nbr_vectors;
    std::vector<Vertex> image;
    std::vector<bool> hit(reference.vertex_count(), false);
    g.for_each_neighbor(v, [&](Vertex w) {
      const std::uint32_t vec = g.vector_of(w);
      nbr_vectors.push_back(vec);
      // Translate back to the neighbourhood of zero, then take the complement.
      const std::uint32_t complement = full & ~(vec ^ base);
      image.push_back(static_cast<Vertex>(ranker.rank(complement)));
      hit[image.back()] = true;
    });
    bool ok = nbr_vectors.size() == reference.vertex_count() &&
              std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    for (std::size_t i = 0; ok && i < nbr_vectors.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < nbr_vectors.size(); ++j) {
        const bool adjacent = static_cast<unsigned>(std::popcount(nbr_vectors[i] ^ nbr_vectors[j])) == 2 * d;
        ok = adjacent == reference.adjacent(image[i], image[j]);
      }
    }
    ++result.vertices_checked;
    if (!ok) {
      result.ok = false;
      result.failing_vertex = v;
      return result;
    }
  }
  return result;
}

QuotientIdentification identify_with_quotient(unsigned d) {
  const PartialLinearSpace space = kneser_space(d);
  const QuotientData q = build_quotient(space);
  const CayleyGamma gamma = build_gamma(q);
  const EvenWeightGraph even(d);
  const unsigned n = 3 * d;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const SubsetRanker ranker(n, d);

  QuotientIdentification out;
  out.dimension = q.dimension();
  if (q.dimension() != even.length() - 1) return out;

  // Target of point A: the characteristic vector of the complement of A.
  std::vector<std::uint32_t> target(space.n_points);
  for (Point x = 0; x < space.n_points; ++x) target[x] = full & ~ranker.unrank(x);

  // Choose points whose phi-images form a basis, then define T on that basis.
  const auto& codes = gamma.connection();
  std::vector<std::uint32_t> basis_codes;
  std::vector<std::uint32_t> basis_targets;
  std::vector<std::uint32_t> reduced_rows;  // echelon rows of basis codes, for independence
  for (Point x = 0; x < space.n_points && basis_codes.size() < q.dimension(); ++x) {
    std::uint32_t r = codes[x];
    for (std::uint32_t row : reduced_rows) r = std::min(r, r ^ row);
    if (r == 0) continue;
    reduced_rows.push_back(r);
    std::sort(reduced_rows.rbegin(), reduced_rows.rend());
    basis_codes.push_back(codes[x]);
    basis_targets.push_back(target[x]);
  }
  if (basis_codes.size() != q.dimension()) return out;

  // Express each unit vector in the chosen basis: invert the basis matrix over GF(2).
  const std::size_t m = q.dimension();
  std::vector<std::uint64_t> aug(m);  // low m bits: basis code, high m bits: identity
  for (std::size_t i = 0; i < m; ++i) aug[i] = basis_codes[i] | (std::uint64_t{1} << (m + i));
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (piv < m && !((aug[piv] >> col) & 1u)) ++piv;
    if (piv == m) return out;
    std::swap(aug[piv], aug[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r != col && ((aug[r] >> col) & 1u)) aug[r] ^= aug[col];
    }
  }
  // Row col of aug now reads e_col = sum over i in high bits of basis_codes[i].
  std::vector<std::uint32_t> image_of_unit(m, 0);
  for (std::size_t col = 0; col < m; ++col) {
    const std::uint64_t combo = aug[col] >> m;
    for (std::size_t i = 0; i < m; ++i) {
      if ((combo >> i) & 1u) image_of_unit[col] ^= basis_targets[i];
    }
  }
  out.linear_map = image_of_unit;

  auto apply = [&](std::uint32_t u) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((u >> i) & 1u) r ^= image_of_unit[i];
    }
    return r;
  };

  out.map_matches_points = true;
  for (Point x = 0; x < space.n_points; ++x) {
    if (apply(codes[x]) != target[x]) {
      out.map_matches_points = false;
      break;
    }
  }

  const std::size_t v = gamma.vertex_count();
  out.vertex_map.resize(v);
  std::vector<bool> hit(even.vertex_count(), false);
  bool bijective = v == even.vertex_count();
  for (Vertex u = 0; bijective && u < v; ++u) {
    const std::uint32_t image = apply(u);
    if ((std::popcount(image) & 1) != 0) {
      bijective = false;
      break;
    }
    const Vertex idx = even.index_of(image);
    if (hit[idx]) bijective = false;
    hit[idx] = true;
    out.vertex_map[u] = idx;
  }
  out.bijective = bijective;

  bool edges_ok = bijective;
  for (Vertex u = 0; edges_ok && u < v; ++u) {
    const std::uint32_t iu = even.vector_of(out.vertex_map[u]);
    gamma.for_each_neighbor(u, [&](Vertex w) {
      const std::uint32_t iw = even.vector_of(out.vertex_map[w]);
      if (static_cast<unsigned>(std::popcount(iu ^ iw)) != 2 * d) edges_ok = false;
    });
  }
  // Degrees agree, so preserving every edge of one side makes the map edge-exact.
  out.edges_preserved = edges_ok && gamma.degree() == even.degree();
  out.ok = out.map_matches_points && out.bijective && out.edges_preserved;
  return out;
}

}  // namespace locdelta
