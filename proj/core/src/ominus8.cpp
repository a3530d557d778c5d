#include "locdelta/ominus8.hpp"

#include "locdelta/analysis.hpp"
#include "locdelta/kneser.hpp"

namespace locdelta::o8 {

namespace {

constexpr bool bit(Vec8 x, int i) noexcept { return (x >> i) & 1u; }

}  // namespace

bool quadratic_form(Vec8 x) noexcept {
  return ((bit(x, 0) & bit(x, 1)) ^ (bit(x, 2) & bit(x, 3)) ^ (bit(x, 4) & bit(x, 5)) ^ bit(x, 6) ^
          (bit(x, 6) & bit(x, 7)) ^ bit(x, 7)) != 0;
}

bool bilinear_form(Vec8 x, Vec8 y) noexcept {
  return quadratic_form(static_cast<Vec8>(x ^ y)) != (quadratic_form(x) != quadratic_form(y));
}

std::vector<Vec8> singular_vectors() {
  std::vector<Vec8> out;
  for (unsigned v = 1; v < 256; ++v) {
    if (!quadratic_form(static_cast<Vec8>(v))) out.push_back(static_cast<Vec8>(v));
  }
  return out;
}

std::vector<EllipticLine> enumerate_elliptic_lines() {
  std::vector<EllipticLine> lines;
  for (unsigned x = 1; x < 256; ++x) {
    if (!quadratic_form(static_cast<Vec8>(x))) continue;
    for (unsigned y = x + 1; y < 256; ++y) {
      const unsigned z = x ^ y;
      if (z < y || !quadratic_form(static_cast<Vec8>(y)) || !quadratic_form(static_cast<Vec8>(z))) continue;
      lines.push_back({{static_cast<Vec8>(x), static_cast<Vec8>(y), static_cast<Vec8>(z)}});
    }
  }
  return lines;
}

bool orthogonal(const EllipticLine& a, const EllipticLine& b) noexcept {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (bilinear_form(a.vectors[i], b.vectors[j])) return false;
    }
  }
  return true;
}

Graph elliptic_graph(const std::vector<EllipticLine>& lines) {
  std::vector<std::vector<Vertex>> adjacency(lines.size());
  for (Vertex i = 0; i < lines.size(); ++i) {
    for (Vertex j = i + 1; j < lines.size(); ++j) {
      if (orthogonal(lines[i], lines[j])) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
      }
    }
  }
  return Graph::from_adjacency(adjacency);
}

AuditResult verify_locally_k83(const Graph& g, std::optional<std::size_t> sample, unsigned jobs) {
  const Graph reference = kneser(8, 3);
  std::vector<Vertex> targets;
  const std::size_t n = g.vertex_count();
  if (sample && *sample < n) {
    for (std::size_t i = 0; i < *sample; ++i) targets.push_back(static_cast<Vertex>(i * n / *sample));
  } else {
    for (Vertex v = 0; v < n; ++v) targets.push_back(v);
  }

  std::vector<char> ok(targets.size(), 0);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(targets.size(), 1)));
  const std::size_t block = (targets.size() + workers - 1) / workers;
  parallel_for(workers, workers, [&](std::size_t w) {
    std::vector<int> scratch;
    for (std::size_t i = w * block; i < std::min(targets.size(), (w + 1) * block); ++i) {
      const Graph local = neighborhood_graph(g, targets[i], scratch);
      ok[i] = isomorphic(local, reference).has_value() ? 1 : 0;
    }
  });

  AuditResult result;
  result.vertices_checked = targets.size();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (!ok[i]) {
      result.ok = false;
      result.failing_vertex = targets[i];
      break;
    }
  }
  return result;
}

}  // namespace locdelta::o8
