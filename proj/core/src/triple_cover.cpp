#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "locdelta/analysis.hpp"
#include "locdelta/spaces.hpp"

namespace locdelta {

namespace {

// Z_3 voltages on the oriented edges u < v of the duad collinearity graph.
class VoltageSearch {
 public:
  explicit VoltageSearch(const PartialLinearSpace& base) : base_(base), graph_(collinearity_graph(base)) {
    const std::size_t n = graph_.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : graph_.neighbors(u)) {
        if (u < v) {
          edge_id_[{u, v}] = edges_.size();
          edges_.emplace_back(u, v);
        }
      }
    }
    value_.assign(edges_.size(), kOpen);

    // Gauge: a BFS spanning tree carries voltage 0.
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex v : graph_.neighbors(queue[i])) {
        if (seen[v]) continue;
        seen[v] = true;
        queue.push_back(v);
        value_[id(queue[i], v)] = 0;
      }
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (value_[e] == kOpen) free_.push_back(e);
    }

    for (Vertex u = 0; u < n; ++u) {
      for (Vertex w = u + 1; w < n; ++w) {
        if (graph_.adjacent(u, w)) continue;
        std::vector<Vertex> common;
        for (Vertex m : graph_.neighbors(u)) {
          if (graph_.adjacent(m, w)) common.push_back(m);
        }
        separations_.push_back({u, w, std::move(common)});
      }
    }
  }

  std::optional<std::vector<int>> run(std::mt19937_64& rng, std::size_t budget) {
    std::fill(value_.begin(), value_.end(), kOpen);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (std::find(free_.begin(), free_.end(), e) == free_.end()) value_[e] = 0;
    }
    nodes_ = 0;
    budget_ = budget;
    if (!dfs(0, rng)) return std::nullopt;
    return value_;
  }

  PartialLinearSpace lift() const {
    PartialLinearSpace cover;
    cover.name = "3.S6";
    cover.n_points = static_cast<std::uint32_t>(3 * graph_.vertex_count());
    for (const Line& l : base_.lines) {
      const int ab = voltage(l[0], l[1]);
      const int bc = voltage(l[1], l[2]);
      for (int i = 0; i < 3; ++i) {
        cover.lines.push_back(make_line(point(l[0], i), point(l[1], (i + ab) % 3), point(l[2], (i + ab + bc) % 3)));
      }
    }
    std::sort(cover.lines.begin(), cover.lines.end());
    return cover;
  }

 private:
  static constexpr int kOpen = -1;

  struct Separation {
    Vertex u;
    Vertex w;
    std::vector<Vertex> common;
  };

  std::size_t id(Vertex u, Vertex v) const { return edge_id_.at({std::min(u, v), std::max(u, v)}); }

  static Point point(Point base, int sheet) { return 3 * base + static_cast<Point>(sheet); }

  int voltage(Vertex u, Vertex v) const {
    const int x = value_[id(u, v)];
    if (x == kOpen) return kOpen;
    return u < v ? x : (3 - x) % 3;
  }

  bool consistent() const {
    for (const Line& l : base_.lines) {
      const int a = voltage(l[0], l[1]);
      const int b = voltage(l[1], l[2]);
      const int c = voltage(l[2], l[0]);
      if (a != kOpen && b != kOpen && c != kOpen && (a + b + c) % 3 != 0) return false;
    }
    for (const Separation& s : separations_) {
      std::array<bool, 3> used{};
      for (Vertex m : s.common) {
        const int p = voltage(s.u, m);
        const int q = voltage(m, s.w);
        if (p == kOpen || q == kOpen) continue;
        if (used[(p + q) % 3]) return false;
        used[(p + q) % 3] = true;
      }
    }
    return true;
  }

  bool dfs(std::size_t k, std::mt19937_64& rng) {
    if (++nodes_ > budget_) return false;
    if (k == free_.size()) return true;
    std::array<int, 3> order{0, 1, 2};
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t e = free_[k];
    for (int x : order) {
      value_[e] = x;
      if (consistent() && dfs(k + 1, rng)) return true;
    }
    value_[e] = kOpen;
    return false;
  }

  const PartialLinearSpace& base_;
  Graph graph_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge_id_;
  std::vector<int> value_;
  std::vector<std::size_t> free_;
  std::vector<Separation> separations_;
  std::size_t nodes_ = 0;
  std::size_t budget_ = 0;
};

}  // namespace

std::optional<PartialLinearSpace> triple_cover_3s6(const TripleCoverOptions& options) {
  const PartialLinearSpace base = duads_gq22();
  VoltageSearch search(base);
  std::mt19937_64 rng(options.seed);
  const IntersectionArray expected{{6, 4, 2, 1}, {1, 1, 4, 6}};
  for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
    if (!search.run(rng, options.node_budget)) continue;
    PartialLinearSpace cover = search.lift();
    if (!validate(cover) || !check_lambda1(cover)) continue;
    const auto array = intersection_array(collinearity_graph(cover), 0, false);
    if (array && *array == expected) return cover;
  }
  return std::nullopt;
}

}  // namespace locdelta
