#include <map>

#include "locdelta/analysis.hpp"

namespace locdelta {

namespace {

// Colourings of g and h whose colour ids mean the same thing on both sides.
struct JointColoring {
  std::vector<std::uint32_t> g;
  std::vector<std::uint32_t> h;
  std::uint32_t count = 0;
};

void signature(const Graph& graph, const std::vector<std::uint32_t>& colors, Vertex v, std::vector<std::uint32_t>& out) {
  out.clear();
  out.push_back(colors[v]);
  for (Vertex w : graph.neighbors(v)) out.push_back(colors[w]);
  std::sort(out.begin() + 1, out.end());
}

// Colour refinement run on both graphs at once; false as soon as a colour class has
// different sizes in g and h.
bool refine(const Graph& g, const Graph& h, JointColoring& col) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> sig_g(n), sig_h(n);
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    for (Vertex v = 0; v < n; ++v) {
      signature(g, col.g, v, sig_g[v]);
      signature(h, col.h, v, sig_h[v]);
      ids.emplace(sig_g[v], 0);
      ids.emplace(sig_h[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> balance(ids.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
      col.g[v] = ids.at(sig_g[v]);
      col.h[v] = ids.at(sig_h[v]);
      ++balance[col.g[v]];
      --balance[col.h[v]];
    }
    if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) return false;
    const bool stable = ids.size() == col.count;
    col.count = static_cast<std::uint32_t>(ids.size());
    if (stable) return true;
  }
}

bool search(const Graph& g, const Graph& h, JointColoring col, std::vector<Vertex>& out) {
  if (!refine(g, h, col)) return false;
  const std::size_t n = g.vertex_count();
  if (col.count == n) {
    std::vector<Vertex> by_color(n);
    for (Vertex w = 0; w < n; ++w) by_color[col.h[w]] = w;
    std::vector<Vertex> map(n);
    for (Vertex v = 0; v < n; ++v) map[v] = by_color[col.g[v]];
    if (!verify_isomorphism(g, h, map)) return false;
    out = std::move(map);
    return true;
  }

  // Individualise in the smallest non-trivial cell.
  std::vector<std::size_t> size(col.count, 0);
  for (Vertex v = 0; v < n; ++v) ++size[col.g[v]];
  std::uint32_t target = 0;
  std::size_t best = n + 1;
  for (std::uint32_t c = 0; c < col.count; ++c) {
    if (size[c] > 1 && size[c] < best) {
      best = size[c];
      target = c;
    }
  }
  const Vertex u = static_cast<Vertex>(std::find(col.g.begin(), col.g.end(), target) - col.g.begin());
  for (Vertex w = 0; w < n; ++w) {
    if (col.h[w] != target) continue;
    JointColoring next = col;
    next.g[u] = col.count;
    next.h[w] = col.count;
    ++next.count;
    if (search(g, h, std::move(next), out)) return true;
  }
  return false;
}

}  // namespace

bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  const std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || map.size() != n || g.edge_count() != h.edge_count()) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (!h.adjacent(map[v], map[w])) return false;
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> isomorphic(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};
  std::vector<std::size_t> dg(n), dh(n);
  for (Vertex v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  JointColoring start{std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0), 1};
  std::vector<Vertex> map;
  if (!search(g, h, std::move(start), map)) return std::nullopt;
  return map;
}

}  // namespace locdelta
