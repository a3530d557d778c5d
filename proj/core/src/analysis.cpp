#include "locdelta/analysis.hpp"

#include <numeric>
#include <sstream>

#include "locdelta/gf2.hpp"

namespace locdelta {

std::optional<int> diameter(const Graph& g) {
  int diam = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto ecc = eccentricity(g, v);
    if (!ecc) return std::nullopt;
    diam = std::max(diam, *ecc);
  }
  return diam;
}

std::vector<std::size_t> IntersectionArray::layer_sizes() const {
  std::vector<std::size_t> k{1};
  for (std::size_t i = 0; i < b.size(); ++i) k.push_back(k.back() * b[i] / c[i]);
  return k;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << ';';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << '}';
  return out.str();
}

IntersectionArray IntersectionArray::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("IntersectionArray::parse: malformed '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.front() != '{' || text.back() != '}') throw fail();
  const std::string body(text.substr(1, text.size() - 2));
  const auto semi = body.find(';');
  if (semi == std::string::npos) throw fail();
  auto numbers = [&](const std::string& part) {
    std::vector<std::size_t> out;
    std::istringstream in(part);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoul(item));
    return out;
  };
  IntersectionArray a{numbers(body.substr(0, semi)), numbers(body.substr(semi + 1))};
  if (a.b.size() != a.c.size()) throw fail();
  return a;
}

std::string SrgParameters::to_string() const {
  return "srg(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
         std::to_string(mu) + ")";
}

std::optional<SrgParameters> srg_params(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const long k = g.regular_degree();
  if (n < 3 || k <= 0 || static_cast<std::size_t>(k) == n - 1) return std::nullopt;

  std::vector<BitVector> rows(n, BitVector(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) rows[v].set(w);
  }
  std::optional<std::size_t> lambda, mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t common = (rows[u] & rows[v]).weight();
      auto& slot = rows[u].get(v) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  return SrgParameters{n, static_cast<std::size_t>(k), *lambda, *mu};
}

std::size_t QuotientDiagram::vertex_count() const { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

std::optional<std::string> QuotientDiagram::consistency_error() const {
  const std::size_t c = cell_count();
  if (mult.size() != c) return "multiplicity matrix has wrong shape";
  if (!cell_of.empty() && cell_of.size() != vertex_count()) return "cell sizes do not sum to the vertex count";
  std::optional<std::size_t> degree;
  for (std::size_t i = 0; i < c; ++i) {
    if (mult[i].size() != c) return "multiplicity matrix has wrong shape";
    const std::size_t row = std::accumulate(mult[i].begin(), mult[i].end(), std::size_t{0});
    if (!degree) degree = row;
    if (row != *degree) {
      return "row " + std::to_string(i) + " sums to " + std::to_string(row) + ", expected " + std::to_string(*degree);
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (sizes[i] * mult[i][j] != sizes[j] * mult[j][i]) {
        return "double count fails for cells " + std::to_string(i) + " and " + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

QuotientDiagram make_diagram(std::vector<std::size_t> sizes,
                             const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& arrows) {
  QuotientDiagram d;
  d.mult.assign(sizes.size(), std::vector<std::size_t>(sizes.size(), 0));
  d.sizes = std::move(sizes);
  for (auto [from, to, m] : arrows) d.mult.at(from).at(to) = m;
  return d;
}

namespace {

bool extend_match(const QuotientDiagram& a, const QuotientDiagram& b, std::vector<int>& map, std::vector<bool>& used,
                  std::size_t i) {
  const std::size_t c = a.cell_count();
  if (i == c) return true;
  for (std::size_t t = 0; t < c; ++t) {
    if (used[t] || a.sizes[i] != b.sizes[t] || a.mult[i][i] != b.mult[t][t]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) {
      const auto tj = static_cast<std::size_t>(map[j]);
      ok = a.mult[i][j] == b.mult[t][tj] && a.mult[j][i] == b.mult[tj][t];
    }
    if (!ok) continue;
    map[i] = static_cast<int>(t);
    used[t] = true;
    if (extend_match(a, b, map, used, i + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

bool diagrams_match(const QuotientDiagram& a, const QuotientDiagram& b) {
  if (a.cell_count() != b.cell_count()) return false;
  if (a.cell_count() == 0) return true;
  std::vector<int> map(a.cell_count(), -1);
  std::vector<bool> used(a.cell_count(), false);
  if (a.sizes[0] != b.sizes[0] || a.mult[0][0] != b.mult[0][0]) return false;
  map[0] = 0;
  used[0] = true;
  return extend_match(a, b, map, used, 1);
}

nlohmann::json to_json(const QuotientDiagram& d) {
  nlohmann::json cells = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < d.cell_count(); ++i) {
    cells.push_back({{"size", d.sizes[i]}, {"loop", d.loop(i)}});
    for (std::size_t j = 0; j < d.cell_count(); ++j) {
      if (i != j && d.mult[i][j] != 0) edges.push_back({{"from", i}, {"to", j}, {"mult", d.mult[i][j]}});
    }
  }
  return {{"cells", cells}, {"edges", edges}};
}

std::string to_dot(const QuotientDiagram& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < d.cell_count(); ++i) {
    out << "  c" << i << " [label=\"" << d.sizes[i] << " (" << d.loop(i) << ")\"];\n";
  }
  for (std::size_t i = 0; i < d.cell_count(); ++i) {
    for (std::size_t j = 0; j < d.cell_count(); ++j) {
      if (i != j && d.mult[i][j] != 0) out << "  c" << i << " -> c" << j << " [label=\"" << d.mult[i][j] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const QuotientDiagram& d) {
  std::ostringstream out;
  out << "cells " << d.cell_count() << ", vertices " << d.vertex_count() << '\n';
  for (std::size_t i = 0; i < d.cell_count(); ++i) {
    out << "  [" << i << "] size " << d.sizes[i] << ", loop " << d.loop(i);
    for (std::size_t j = 0; j < d.cell_count(); ++j) {
      if (i != j && d.mult[i][j] != 0) out << ", ->" << j << ": " << d.mult[i][j];
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

QuotientDiagram finish_diagram(const std::vector<std::uint32_t>& raw_cells, std::size_t cell_count,
                               const std::vector<Vertex>& bfs_order,
                               const std::function<void(Vertex, const std::function<void(Vertex)>&)>& neighbors) {
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  std::vector<std::uint32_t> renumber(cell_count, kNone);
  std::uint32_t next = 0;
  for (Vertex v : bfs_order) {
    if (renumber[raw_cells[v]] == kNone) renumber[raw_cells[v]] = next++;
  }

  QuotientDiagram d;
  const std::size_t n = raw_cells.size();
  d.cell_of.resize(n);
  d.sizes.assign(cell_count, 0);
  for (Vertex v = 0; v < n; ++v) {
    d.cell_of[v] = renumber[raw_cells[v]];
    ++d.sizes[d.cell_of[v]];
  }
  d.mult.assign(cell_count, std::vector<std::size_t>(cell_count, 0));
  std::vector<bool> filled(cell_count, false);
  std::vector<std::size_t> counts(cell_count);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(counts.begin(), counts.end(), 0);
    neighbors(v, [&](Vertex w) { ++counts[d.cell_of[w]]; });
    const auto c = d.cell_of[v];
    if (!filled[c]) {
      d.mult[c] = counts;
      filled[c] = true;
    } else if (d.mult[c] != counts) {
      throw std::logic_error("equitable_refinement: partition is not equitable at vertex " + std::to_string(v));
    }
  }
  return d;
}

}  // namespace detail

namespace {

std::optional<Antipodality> classes_from(std::vector<std::vector<Vertex>> far, const std::function<bool(Vertex, Vertex)>& adjacent,
                                         const std::function<void(Vertex, const std::function<void(Vertex)>&)>& neighbors) {
  const std::size_t n = far.size();
  std::vector<std::vector<Vertex>> cls(n);
  for (Vertex v = 0; v < n; ++v) {
    cls[v] = far[v];
    cls[v].push_back(v);
    std::sort(cls[v].begin(), cls[v].end());
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : far[v]) {
      if (cls[w] != cls[v]) return std::nullopt;
    }
  }
  Antipodality out;
  std::vector<bool> done(n, false);
  out.classes_are_pairs = true;
  for (Vertex v = 0; v < n; ++v) {
    if (done[v]) continue;
    for (Vertex w : cls[v]) done[w] = true;
    out.classes_are_pairs = out.classes_are_pairs && cls[v].size() == 2;
    out.classes.push_back(cls[v]);
  }
  if (out.classes_are_pairs) {
    std::vector<Vertex> swap(n);
    for (const auto& c : out.classes) {
      swap[c[0]] = c[1];
      swap[c[1]] = c[0];
    }
    bool automorphism = true;
    for (Vertex v = 0; v < n && automorphism; ++v) {
      neighbors(v, [&](Vertex w) {
        if (!adjacent(swap[v], swap[w])) automorphism = false;
      });
    }
    if (automorphism) out.swap = std::move(swap);
  }
  return out;
}

}  // namespace

std::optional<Antipodality> antipodal_check(const Graph& g, int diameter) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> far(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    for (Vertex w = 0; w < n; ++w) {
      if (dist[w] == diameter) far[v].push_back(w);
    }
  }
  return classes_from(
      std::move(far), [&](Vertex a, Vertex b) { return g.adjacent(a, b); },
      [&](Vertex v, const std::function<void(Vertex)>& f) { g.for_each_neighbor(v, f); });
}

std::optional<Antipodality> antipodal_check(const CayleyGamma& g, int diameter) {
  const std::size_t n = g.vertex_count();
  const auto dist = bfs_distances(g, 0);
  std::vector<Vertex> far0;
  for (Vertex w = 0; w < n; ++w) {
    if (dist[w] == diameter) far0.push_back(w);
  }
  if (far0.empty()) return std::nullopt;
  // d(u, v) = d(0, u xor v), so the relation is an equivalence iff far0 plus zero is
  // closed under addition.
  std::vector<Vertex> subgroup = far0;
  subgroup.push_back(0);
  std::sort(subgroup.begin(), subgroup.end());
  for (Vertex a : far0) {
    for (Vertex b : far0) {
      if (a != b && !std::binary_search(subgroup.begin(), subgroup.end(), a ^ b)) return std::nullopt;
    }
  }
  Antipodality out;
  out.classes_are_pairs = far0.size() == 1;
  std::vector<bool> done(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (done[v]) continue;
    std::vector<Vertex> cls;
    for (Vertex a : subgroup) {
      cls.push_back(v ^ a);
      done[v ^ a] = true;
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  if (out.classes_are_pairs) {
    const Vertex a = far0.front();
    std::vector<Vertex> swap(n);
    for (Vertex v = 0; v < n; ++v) swap[v] = v ^ a;
    bool automorphism = true;
    for (Vertex v = 0; v < n && automorphism; ++v) {
      g.for_each_neighbor(v, [&](Vertex w) {
        if (!g.adjacent(swap[v], swap[w])) automorphism = false;
      });
    }
    if (automorphism) out.swap = std::move(swap);
  }
  return out;
}

}  // namespace locdelta
