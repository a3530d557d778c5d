#include "locdelta/spaces.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "locdelta/subsets.hpp"

namespace locdelta {

namespace {

void sort_lines(PartialLinearSpace& s) {
  std::sort(s.lines.begin(), s.lines.end());
  s.lines.erase(std::unique(s.lines.begin(), s.lines.end()), s.lines.end());
}

std::uint64_t pair_key(Point a, Point b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t{a} << 32) | b;
}

// Partitions of `set` (popcount 3d) into three d-subsets, as masks {A, B, C}.
void for_each_tripartition(SubsetMask set, unsigned d, auto&& f) {
  const SubsetMask lowest = set & (~set + 1);
  const SubsetMask rest = set & ~lowest;
  // A contains the lowest element; choose its other d-1 elements from rest.
  for (SubsetMask a_sub = rest;; a_sub = (a_sub - 1) & rest) {
    if (static_cast<unsigned>(std::popcount(a_sub)) == d - 1) {
      const SubsetMask a = a_sub | lowest;
      const SubsetMask remain = set & ~a;
      const SubsetMask low_b = remain & (~remain + 1);
      const SubsetMask rest_b = remain & ~low_b;
      for (SubsetMask b_sub = rest_b;; b_sub = (b_sub - 1) & rest_b) {
        if (static_cast<unsigned>(std::popcount(b_sub)) == d - 1) {
          const SubsetMask b = b_sub | low_b;
          f(a, b, remain & ~b);
        }
        if (b_sub == 0) break;
      }
    }
    if (a_sub == 0) break;
  }
}

}  // namespace

Line make_line(Point a, Point b, Point c) {
  Line l{a, b, c};
  std::sort(l.begin(), l.end());
  return l;
}

ValidationResult validate(const PartialLinearSpace& space) {
  std::unordered_set<std::uint64_t> pairs;
  std::set<Line> seen;
  for (std::size_t i = 0; i < space.lines.size(); ++i) {
    const Line& l = space.lines[i];
    for (Point p : l) {
      if (p >= space.n_points) {
        return {false, "line " + std::to_string(i) + " has point " + std::to_string(p) + " out of range"};
      }
    }
    Line sorted = l;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
      return {false, "line " + std::to_string(i) + " repeats a point"};
    }
    if (!seen.insert(sorted).second) {
      return {false, "line " + std::to_string(i) + " is duplicated"};
    }
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (!pairs.insert(pair_key(sorted[a], sorted[b])).second) {
          return {false, "points " + std::to_string(sorted[a]) + " and " + std::to_string(sorted[b]) +
                             " lie on more than one line"};
        }
      }
    }
  }
  return {};
}

Graph collinearity_graph(const PartialLinearSpace& space) {
  std::vector<std::vector<Vertex>> adjacency(space.n_points);
  std::unordered_set<std::uint64_t> added;
  for (const Line& l : space.lines) {
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (added.insert(pair_key(l[a], l[b])).second) {
          adjacency[l[a]].push_back(l[b]);
          adjacency[l[b]].push_back(l[a]);
        }
      }
    }
  }
  return Graph::from_adjacency(adjacency);
}

Lambda1Result check_lambda1(const PartialLinearSpace& space) {
  const Graph g = collinearity_graph(space);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v < u) continue;
      const auto nv = g.neighbors(v);
      std::size_t common = 0;
      auto i = nu.begin();
      auto j = nv.begin();
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          ++common;
          ++i;
          ++j;
        }
      }
      if (common != 1) return {false, std::make_pair(u, v)};
    }
  }
  return {};
}

BitMatrix incidence_matrix(const PartialLinearSpace& space) {
  BitMatrix n(space.n_points, space.lines.size());
  for (std::size_t j = 0; j < space.lines.size(); ++j) {
    for (Point p : space.lines[j]) n.set(p, j);
  }
  return n;
}

std::vector<std::vector<std::uint32_t>> lines_through_points(const PartialLinearSpace& space) {
  std::vector<std::vector<std::uint32_t>> through(space.n_points);
  for (std::uint32_t j = 0; j < space.lines.size(); ++j) {
    for (Point p : space.lines[j]) through[p].push_back(j);
  }
  return through;
}

std::string to_text(const PartialLinearSpace& space) {
  std::ostringstream out;
  out << "points " << space.n_points << '\n';
  for (const Line& l : space.lines) out << l[0] << ' ' << l[1] << ' ' << l[2] << '\n';
  return out.str();
}

PartialLinearSpace from_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  PartialLinearSpace s;
  s.name = std::move(name);
  std::string record;
  bool header = false;
  while (std::getline(in, record)) {
    std::istringstream fields(record);
    std::string first;
    if (!(fields >> first)) continue;
    fields.seekg(0);
    bool ok = false;
    if (!header) {
      std::string keyword;
      ok = (fields >> keyword >> s.n_points) && keyword == "points";
      header = true;
    } else {
      Point a, b, c;
      ok = static_cast<bool>(fields >> a >> b >> c);
      if (ok) s.lines.push_back(make_line(a, b, c));
    }
    std::string extra;
    if (!ok || fields >> extra) throw std::invalid_argument("from_text: malformed record '" + record + "'");
  }
  if (!header) throw std::invalid_argument("from_text: expected header 'points <n>'");
  return s;
}

PartialLinearSpace grid_gq21() {
  PartialLinearSpace s{"GQ(2,1)", 9, {}};
  for (Point r = 0; r < 3; ++r) s.lines.push_back(make_line(3 * r, 3 * r + 1, 3 * r + 2));
  for (Point c = 0; c < 3; ++c) s.lines.push_back(make_line(c, c + 3, c + 6));
  sort_lines(s);
  return s;
}

PartialLinearSpace duads_gq22() {
  const SubsetRanker duads(6, 2);
  PartialLinearSpace s{"GQ(2,2)", static_cast<std::uint32_t>(duads.count()), {}};
  for_each_tripartition(0b111111u, 2, [&](SubsetMask a, SubsetMask b, SubsetMask c) {
    s.lines.push_back(make_line(static_cast<Point>(duads.rank(a)), static_cast<Point>(duads.rank(b)),
                                static_cast<Point>(duads.rank(c))));
  });
  sort_lines(s);
  return s;
}

PartialLinearSpace schlafli_gq24() {
  const SubsetRanker duads(6, 2);
  auto c = [&](unsigned i, unsigned j) { return static_cast<Point>(12 + duads.rank((1u << i) | (1u << j))); };
  PartialLinearSpace s{"GQ(2,4)", 27, {}};
  for (unsigned i = 0; i < 6; ++i) {
    for (unsigned j = 0; j < 6; ++j) {
      if (i != j) s.lines.push_back(make_line(i, 6 + j, c(i, j)));
    }
  }
  for_each_tripartition(0b111111u, 2, [&](SubsetMask a, SubsetMask b, SubsetMask cc) {
    s.lines.push_back(make_line(static_cast<Point>(12 + duads.rank(a)), static_cast<Point>(12 + duads.rank(b)),
                                static_cast<Point>(12 + duads.rank(cc))));
  });
  sort_lines(s);
  return s;
}

PartialLinearSpace vo4_minus3() {
  auto digits = [](unsigned v) {
    std::array<unsigned, 4> x{};
    for (auto& xi : x) {
      xi = v % 3;
      v /= 3;
    }
    return x;
  };
  auto encode = [](const std::array<unsigned, 4>& x) { return x[0] + 3 * x[1] + 9 * x[2] + 27 * x[3]; };
  auto form = [](const std::array<unsigned, 4>& x) { return (x[0] * x[1] + x[2] * x[2] + x[3] * x[3]) % 3; };

  // Singular directions, one representative per projective point.
  std::vector<std::array<unsigned, 4>> directions;
  for (unsigned v = 1; v < 81; ++v) {
    const auto x = digits(v);
    const auto lead = std::find_if(x.begin(), x.end(), [](unsigned t) { return t != 0; });
    if (*lead == 1 && form(x) == 0) directions.push_back(x);
  }

  PartialLinearSpace s{"VO4-(3)", 81, {}};
  for (unsigned v = 0; v < 81; ++v) {
    const auto x = digits(v);
    for (const auto& dir : directions) {
      std::array<unsigned, 4> y{}, z{};
      for (int i = 0; i < 4; ++i) {
        y[i] = (x[i] + dir[i]) % 3;
        z[i] = (x[i] + 2 * dir[i]) % 3;
      }
      s.lines.push_back(make_line(v, encode(y), encode(z)));
    }
  }
  sort_lines(s);
  return s;
}

PartialLinearSpace line_graph_petersen() {
  // Petersen graph as K(5,2); its edges, lexicographic in (u, v), are the points.
  const SubsetRanker duads(5, 2);
  const auto verts = duads.all();
  std::vector<std::pair<unsigned, unsigned>> edges;
  for (unsigned u = 0; u < verts.size(); ++u) {
    for (unsigned v = u + 1; v < verts.size(); ++v) {
      if ((verts[u] & verts[v]) == 0) edges.emplace_back(u, v);
    }
  }
  PartialLinearSpace s{"L(K(5,2))", static_cast<std::uint32_t>(edges.size()), {}};
  for (unsigned v = 0; v < verts.size(); ++v) {
    std::vector<Point> incident;
    for (Point e = 0; e < edges.size(); ++e) {
      if (edges[e].first == v || edges[e].second == v) incident.push_back(e);
    }
    s.lines.push_back(make_line(incident.at(0), incident.at(1), incident.at(2)));
  }
  sort_lines(s);
  return s;
}

PartialLinearSpace fano_plane() {
  PartialLinearSpace s{"PG(2,2)", 7, {}};
  for (unsigned x = 1; x < 8; ++x) {
    for (unsigned y = x + 1; y < 8; ++y) {
      if ((x ^ y) > y) s.lines.push_back(make_line(x - 1, y - 1, (x ^ y) - 1));
    }
  }
  sort_lines(s);
  return s;
}

PartialLinearSpace flag_space(const PartialLinearSpace& geometry, std::string name) {
  const auto through = lines_through_points(geometry);
  for (Point p = 0; p < geometry.n_points; ++p) {
    if (through[p].size() != 3) {
      throw std::invalid_argument("flag_space: point " + std::to_string(p) + " is on " +
                                  std::to_string(through[p].size()) + " lines, expected 3");
    }
  }
  // Flag (p, l) has index 3l + position of p within line l.
  auto flag = [&](Point p, std::uint32_t l) {
    const Line& line = geometry.lines[l];
    return static_cast<Point>(3 * l + (std::find(line.begin(), line.end(), p) - line.begin()));
  };
  PartialLinearSpace s{std::move(name), static_cast<std::uint32_t>(3 * geometry.lines.size()), {}};
  for (Point p = 0; p < geometry.n_points; ++p) {
    s.lines.push_back(make_line(flag(p, through[p][0]), flag(p, through[p][1]), flag(p, through[p][2])));
  }
  for (std::uint32_t l = 0; l < geometry.lines.size(); ++l) s.lines.push_back(make_line(3 * l, 3 * l + 1, 3 * l + 2));
  sort_lines(s);
  return s;
}

PartialLinearSpace split_cayley_hexagon() {
  auto bit = [](unsigned v, int i) { return (v >> i) & 1u; };
  auto quadric = [&](unsigned v) {
    return (bit(v, 0) * bit(v, 4) + bit(v, 1) * bit(v, 5) + bit(v, 2) * bit(v, 6) + bit(v, 3)) & 1u;
  };
  // Grassmann coordinate p_ij of the line spanned by x and y.
  auto pl = [&](unsigned x, unsigned y, int i, int j) { return (bit(x, i) * bit(y, j) + bit(x, j) * bit(y, i)) & 1u; };
  // Hexagon lines among the quadric lines: p12=p34, p54=p32, p20=p35, p65=p30, p01=p36, p46=p31.
  static constexpr int kConditions[6][4] = {{1, 2, 3, 4}, {5, 4, 3, 2}, {2, 0, 3, 5},
                                            {6, 5, 3, 0}, {0, 1, 3, 6}, {4, 6, 3, 1}};

  std::vector<unsigned> points;
  std::vector<int> index(128, -1);
  for (unsigned v = 1; v < 128; ++v) {
    if (quadric(v) == 0) {
      index[v] = static_cast<int>(points.size());
      points.push_back(v);
    }
  }
  PartialLinearSpace s{"GH(2,2) split Cayley", static_cast<std::uint32_t>(points.size()), {}};
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const unsigned x = points[a];
      const unsigned y = points[b];
      const unsigned z = x ^ y;
      if (z < y || quadric(z) != 0) continue;
      bool on_hexagon = true;
      for (const auto& c : kConditions) {
        if (pl(x, y, c[0], c[1]) != pl(x, y, c[2], c[3])) {
          on_hexagon = false;
          break;
        }
      }
      if (on_hexagon) s.lines.push_back(make_line(index[x], index[y], index[z]));
    }
  }
  sort_lines(s);
  return s;
}

PartialLinearSpace dual_space(const PartialLinearSpace& space, std::string name) {
  const auto through = lines_through_points(space);
  PartialLinearSpace s{std::move(name), static_cast<std::uint32_t>(space.lines.size()), {}};
  for (Point p = 0; p < space.n_points; ++p) {
    if (through[p].size() != 3) {
      throw std::invalid_argument("dual_space: point " + std::to_string(p) + " is not on exactly 3 lines");
    }
    s.lines.push_back(make_line(through[p][0], through[p][1], through[p][2]));
  }
  sort_lines(s);
  return s;
}

PartialLinearSpace dual_hexagon() { return dual_space(split_cayley_hexagon(), "GH(2,2) dual"); }

PartialLinearSpace hamming_space(unsigned n) {
  if (n < 1 || n > 12) throw std::invalid_argument("hamming_space: require 1 <= n <= 12");
  std::uint32_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= 3;
  PartialLinearSpace s{"3^" + std::to_string(n), size, {}};
  std::uint32_t stride = 1;
  for (unsigned i = 0; i < n; ++i, stride *= 3) {
    for (std::uint32_t v = 0; v < size; ++v) {
      if ((v / stride) % 3 == 0) s.lines.push_back(make_line(v, v + stride, v + 2 * stride));
    }
  }
  sort_lines(s);
  return s;
}

PartialLinearSpace kneser_space(unsigned d) {
  if (d < 1 || d > 5) throw std::invalid_argument("kneser_space: require 1 <= d <= 5");
  const SubsetRanker ranker(3 * d, d);
  PartialLinearSpace s{"K(" + std::to_string(3 * d) + "," + std::to_string(d) + ")",
                       static_cast<std::uint32_t>(ranker.count()),
                       {}};
  const SubsetMask full = (SubsetMask{1} << (3 * d)) - 1;
  for_each_tripartition(full, d, [&](SubsetMask a, SubsetMask b, SubsetMask c) {
    s.lines.push_back(make_line(static_cast<Point>(ranker.rank(a)), static_cast<Point>(ranker.rank(b)),
                                static_cast<Point>(ranker.rank(c))));
  });
  sort_lines(s);
  return s;
}

}  // namespace locdelta
