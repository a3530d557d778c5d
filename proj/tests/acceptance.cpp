// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--only N]... [--strict-k] [--jobs N]

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "locdelta/catalog.hpp"
#include "locdelta/cayley.hpp"
#include "locdelta/cosetenum.hpp"
#include "locdelta/kneser.hpp"
#include "locdelta/ominus8.hpp"
#include "locdelta/subsets.hpp"
#include "oracles.hpp"

using namespace locdelta;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Log {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    add("FAIL " + what);
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void add(const std::string& text) { out_ << (out_.tellp() > 0 ? "; " : "") << text; }
  Outcome outcome() const { return {pass_, out_.str()}; }

 private:
  bool pass_ = true;
  std::ostringstream out_;
};

struct Settings {
  unsigned jobs = 1;
  bool strict_k = false;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void check_budget(Log& log, std::chrono::steady_clock::time_point t0, double limit) {
  const double s = seconds_since(t0);
  log.check(s < limit, "took " + std::to_string(s) + "s, limit " + std::to_string(limit) + "s");
}

void check_columns(Log& log, const CaseReport& r) {
  const auto compare = [&](const auto& c, const char* name) {
    if (!c.match()) log.fail(r.label + " " + name);
  };
  compare(r.dim_v, "dim V");
  compare(r.v, "v");
  compare(r.k, "k");
  compare(r.diameter, "d");
  compare(r.rk, "rk");
  log.check(r.locally_delta == r.v.expected.has_value(), r.label + " locally-Delta verdict");
}

std::string columns(const CaseReport& r) {
  std::ostringstream s;
  const auto show = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };
  s << r.label << "=(" << show(r.dim_v.computed) << "," << show(r.v.computed) << "," << show(r.k.computed) << ","
    << show(r.diameter.computed) << "," << show(r.rk.computed) << ")";
  return s.str();
}

Outcome table_rows(const std::vector<std::string>& labels, double limit, const Settings& settings) {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  AnalyzeOptions options;
  options.with_group = false;
  options.jobs = settings.jobs;
  for (const auto& label : labels) {
    const CaseReport r = analyze_case(find_case(label), options);
    check_columns(log, r);
    if (label == "d") log.check(r.status == "degenerate: dim V = 0, no graph", "d status '" + r.status + "'");
    log.add(columns(r));
  }
  check_budget(log, t0, limit);
  return log.outcome();
}

Outcome criterion1(const Settings& s) { return table_rows({"a", "b", "c", "d", "e", "f", "h", "l", "m"}, 120, s); }

Outcome criterion2(const Settings& s) { return table_rows({"g", "g'", "i", "j"}, 1800, s); }

Outcome criterion3(const Settings&) {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [label, order] : {std::pair{"a", 16}, {"b", 32}, {"c", 64}, {"d", 1}, {"h", 512}, {"l", 256}, {"m", 2048}}) {
    const CaseSpec& spec = find_case(label);
    const QuotientData q(*spec.build());
    const auto enumeration = enumerate(Presentation::from_space(q.space()));
    log.check(enumeration.closed && enumeration.order == static_cast<std::size_t>(order),
              std::string(label) + " enumerated " + std::to_string(enumeration.order));
    log.check(!infinitude_witness(q).has_value(), std::string(label) + " has a disjoint complement pair");
    log.add(std::string(label) + ":" + std::to_string(enumeration.order));
  }
  for (const char* label : {"e", "f", "g", "j"}) {
    const PartialLinearSpace space = *find_case(label).build();
    const auto witness = infinitude_witness(QuotientData(space));
    if (!witness) {
      log.fail(std::string(label) + " no witness");
      continue;
    }
    // Independent certificate check straight from the line masks.
    const auto supports = {witness->first.support, witness->second.support};
    bool ok = !witness->first.support.intersects(witness->second.support);
    for (const auto& sup : supports) {
      ok = ok && !sup.is_zero();
      for (const Line& l : space.lines) {
        const int meet = sup.get(l[0]) + sup.get(l[1]) + sup.get(l[2]);
        ok = ok && (meet == 0 || meet == 2);
      }
    }
    log.check(ok, std::string(label) + " witness invalid");
    log.add(std::string(label) + ":infinite(|A|=" + std::to_string(witness->first.support.weight()) +
            ",|B|=" + std::to_string(witness->second.support.weight()) + ")");
  }
  check_budget(log, t0, 300);
  return log.outcome();
}

Outcome criterion4(const Settings& s) {
  Log log;
  for (const CaseSpec& spec : catalog()) {
    const auto space = spec.build();
    if (!space) {
      if (spec.optional_case && !s.strict_k) {
        log.add(spec.label + ": skipped (optional)");
      } else {
        log.fail(spec.label + " not constructed");
      }
      continue;
    }
    const auto computed = delta_parameters(*space, spec.parameter_kind);
    const bool ok = computed == spec.parameters;
    if (!ok) {
      log.fail(spec.label + " computed " + computed.value_or("none") + ", expected " + spec.parameters);
    }
  }
  if (log.outcome().pass) log.add("all rows match");
  return log.outcome();
}

Outcome criterion5(const Settings&) {
  Log log;
  const QuotientDiagram o8 = equitable_refinement(o8::elliptic_graph(o8::enumerate_elliptic_lines()), 0);
  const QuotientDiagram l = equitable_refinement(build_gamma(QuotientData(kneser_space(3))), 0);
  const QuotientDiagram h = equitable_refinement(build_gamma(QuotientData(hamming_space(3))), 0);
  const std::pair<const QuotientDiagram*, QuotientDiagram> pairs[] = {
      {&o8, o8_figure()}, {&l, kneser3_figure()}, {&h, hamming3_figure()}};
  const char* names[] = {"o8", "kneser3", "hamming3"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [computed, figure] = pairs[i];
    log.check(!figure.consistency_error(), std::string(names[i]) + " fixture inconsistent");
    log.check(!computed->consistency_error(), std::string(names[i]) + " computed diagram inconsistent");
    const bool exact = computed->sizes == figure.sizes && computed->mult == figure.mult;
    const bool match = diagrams_match(*computed, figure);
    log.check(match, std::string(names[i]) + " differs from the figure");
    log.add(std::string(names[i]) + (exact ? ": identical" : match ? ": equal up to cell order" : ": differs"));
  }
  return log.outcome();
}

Outcome criterion6(const Settings& s) {
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  const auto lines = o8::enumerate_elliptic_lines();
  const Graph g = o8::elliptic_graph(lines);
  log.check(lines.size() == 1632, "line count " + std::to_string(lines.size()));
  log.check(g.regular_degree() == 56, "degree " + std::to_string(g.regular_degree()));
  const auto audit = o8::verify_locally_k83(g, std::nullopt, s.jobs);
  log.check(audit.ok && audit.vertices_checked == 1632, "locally K(8,3) audit");
  log.add("1632 lines, degree 56, " + std::to_string(audit.vertices_checked) + " neighbourhoods isomorphic to K(8,3)");
  check_budget(log, t0, 600);
  return log.outcome();
}

Outcome criterion7(const Settings&) {
  Log log;
  for (unsigned d : {2u, 3u, 4u}) {
    const EvenWeightGraph g = even_weight_graph(d);
    std::vector<Vertex> vertices;
    if (d < 4) {
      vertices.resize(g.vertex_count());
      std::iota(vertices.begin(), vertices.end(), Vertex{0});
    } else {
      vertices = {0};
    }
    const auto r = even_weight_locally_kneser(g, vertices);
    log.check(r.ok, "d=" + std::to_string(d) + " not locally K(3d,d)");
    const std::uint64_t kneser_vertices = binomial(4 * d, d);
    log.check(g.vertex_count() != kneser_vertices, "d=" + std::to_string(d) + " vertex count equals C(4d,d)");
    log.add("d=" + std::to_string(d) + ": " + std::to_string(g.vertex_count()) + " vs " +
            std::to_string(kneser_vertices) + ", checked " + std::to_string(r.vertices_checked));
  }
  return log.outcome();
}

Outcome criterion8(const Settings&) {
  Log log;
  for (auto [n, d] : {std::pair{5u, 2u}, {6u, 2u}, {7u, 3u}}) {
    const auto r = locally_kneser_classic(n, d);
    const std::string name = "K(" + std::to_string(n + d) + "," + std::to_string(d) + ")";
    log.check(r.ok && r.vertices_checked == binomial(n + d, d), name);
    log.add(name + " locally K(" + std::to_string(n) + "," + std::to_string(d) + ") at " +
            std::to_string(r.vertices_checked) + " vertices");
  }
  return log.outcome();
}

Outcome criterion9(const Settings&) {
  Log log;
  for (unsigned d : {2u, 3u, 4u}) {
    const QuotientData q(kneser_space(d));
    const auto r = enumerate(Presentation::from_space(q.space()));
    const std::uint64_t expected = std::uint64_t{1} << (3 * d - 1);
    log.check(r.closed && r.order == expected, "d=" + std::to_string(d) + " |G|=" + std::to_string(r.order));
    log.check(abelian_order(q) == expected, "d=" + std::to_string(d) + " |G/G'|=" + std::to_string(abelian_order(q)));
    log.add("d=" + std::to_string(d) + ": " + std::to_string(r.order));
  }
  return log.outcome();
}

Outcome criterion10(const Settings&) {
  Log log;
  // VO4+(2): F_2^4 with Q = x1x2 + x3x4, adjacent when the difference is singular.
  const auto q = [](Vertex x) { return ((x & 1) & ((x >> 1) & 1)) ^ (((x >> 2) & 1) & ((x >> 3) & 1)); };
  const Graph vo4 = oracle::graph_from_predicate(16, [&](Vertex u, Vertex v) { return q(u ^ v) == 0; });
  const auto params = srg_params(vo4);
  log.check(params && params->to_string() == "srg(16,9,4,6)", "VO4+(2) parameters");
  const Graph gamma_a = build_gamma(QuotientData(grid_gq21())).materialize();
  const auto map = isomorphic(gamma_a, vo4);
  log.check(map && verify_isomorphism(gamma_a, vo4, *map), "Gamma(a) not isomorphic to VO4+(2)");
  log.add("Gamma(a) = VO4+(2) srg(16,9,4,6)");

  const CayleyGamma gamma_b = build_gamma(QuotientData(duads_gq22()));
  log.check(gamma_b.vertex_count() == 32, "Gamma(b) vertex count");
  log.add("Gamma(b) has " + std::to_string(gamma_b.vertex_count()) + " vertices");

  const auto id = identify_with_quotient(3);
  log.check(id.ok && id.bijective && id.edges_preserved, "Gamma(kneser3) to even-weight map");
  // Second route: generic isomorphism search between the two explicit graphs.
  const Graph quotient = build_gamma(QuotientData(kneser_space(3))).materialize();
  const Graph even = to_graph(even_weight_graph(3));
  log.check(isomorphic(quotient, even).has_value(), "isomorphism search on Gamma(kneser3)");
  log.add("Gamma(kneser3) = even-weight(3) via the linear map");
  return log.outcome();
}

Outcome criterion11(const Settings&) {
  Log log;
  std::mt19937_64 rng(20240611);

  std::size_t probes = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const PartialLinearSpace s = oracle::random_space(rng, 12);
    const QuotientData q(s);
    const auto span = oracle::span(oracle::line_masks(s));
    for (int i = 0; i < 8; ++i, ++probes) {
      const std::uint32_t u = static_cast<std::uint32_t>(rng()) & ((1u << s.n_points) - 1);
      if (q.in_column_space(BitVector::from_u64(u, s.n_points)) != (span.count(u) == 1)) {
        log.fail("membership trial " + std::to_string(trial));
        break;
      }
    }
  }
  log.add("500 random spaces, " + std::to_string(probes) + " membership probes");

  std::size_t diagrams = 0;
  for (const char* label : {"a", "b", "c", "e", "f", "h", "l", "m"}) {
    const auto d = equitable_refinement(build_gamma(QuotientData(*find_case(label).build())), 0);
    log.check(!d.consistency_error(), std::string("diagram identity ") + label);
    ++diagrams;
  }
  for (const auto& d : {o8_figure(), kneser3_figure(), hamming3_figure()}) {
    log.check(!d.consistency_error(), "fixture identity");
    ++diagrams;
  }
  log.add(std::to_string(diagrams) + " diagrams satisfy size(i)mult(i,j)=size(j)mult(j,i)");

  std::size_t isos = 0;
  for (const Graph& g : {collinearity_graph(schlafli_gq24()), kneser(9, 3), build_gamma(QuotientData(duads_gq22())).materialize()}) {
    for (int trial = 0; trial < 4; ++trial, ++isos) {
      const auto perm = oracle::random_permutation(rng, g.vertex_count());
      const Graph h = relabel(g, perm);
      const auto map = isomorphic(g, h);
      bool ok = map.has_value();
      if (ok) {
        for (auto [u, v] : g.edges()) ok = ok && h.adjacent((*map)[u], (*map)[v]);
      }
      log.check(ok, "isomorphism not verified");
    }
  }
  log.add(std::to_string(isos) + " isomorphisms verified edge by edge");

  std::string first;
  std::string second;
  AnalyzeOptions options;
  for (const CaseSpec& spec : catalog()) {
    if (spec.large || spec.optional_case) continue;
    first += table_row(analyze_case(spec, options)) + "\n";
  }
  for (const CaseSpec& spec : catalog()) {
    if (spec.large || spec.optional_case) continue;
    second += table_row(analyze_case(spec, options)) + "\n";
  }
  log.check(first == second, "table reruns differ");
  const auto p = Presentation::from_space(kneser_space(4));
  log.check(enumerate(p).trace_hash == enumerate(p).trace_hash, "enumeration trace differs");
  log.add("reruns identical");
  return log.outcome();
}

Outcome criterion12(const Settings&) {
  Log log;
  const CayleyGamma split = build_gamma(QuotientData(split_cayley_hexagon()));
  const auto diam = diameter_vt(split);
  log.check(diam == 6, "g' diameter " + std::to_string(diam.value_or(-1)));
  const auto anti = antipodal_check(split, 6);
  if (!anti || !anti->classes_are_pairs || !anti->swap) {
    log.fail("g' not antipodal with antipodal pairs");
  } else {
    const auto& swap = *anti->swap;
    bool ok = true;
    for (Vertex u = 0; u < split.vertex_count() && ok; ++u) {
      ok = swap[swap[u]] == u && swap[u] != u;
      split.for_each_neighbor(u, [&](Vertex w) { ok = ok && split.adjacent(swap[u], swap[w]); });
    }
    log.check(ok, "swap map is not an automorphism");
    log.add("g' antipodal, diameter 6, swap preserves all " +
            std::to_string(split.vertex_count() * split.degree() / 2) + " edges");
  }
  const CayleyGamma dual = build_gamma(QuotientData(dual_hexagon()));
  const auto dual_diam = diameter_vt(dual);
  log.check(dual_diam == 4, "g diameter " + std::to_string(dual_diam.value_or(-1)));
  log.add("g diameter " + std::to_string(dual_diam.value_or(-1)));
  return log.outcome();
}

Outcome stretch_k(const Settings& s) {
  const auto space = triple_cover_3s6();
  if (!space) {
    if (s.strict_k) return {false, "construction search exhausted"};
    return {true, "skipped: optional: construction search not guaranteed"};
  }
  AnalyzeOptions options;
  options.jobs = s.jobs;
  const CaseReport r = analyze_case(find_case("k"), options);
  Log log;
  check_columns(log, r);
  log.check(r.parameters.match(), "k parameters");
  log.check(r.group.match(), "k |G|");
  log.add(columns(r) + ", |G| " + r.group.computed.value_or("?"));
  Outcome out = log.outcome();
  if (!out.pass && !s.strict_k) {
    out.pass = true;
    out.detail = "optional, not gated: " + out.detail;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  Settings settings;
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria (k for the stretch case is 13)");
  app.add_flag("--strict-k", settings.strict_k, "Fail when the optional case fails");
  app.add_option("-j,--jobs", settings.jobs, "Worker threads, 0 for all cores");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome(const Settings&)>>> criteria = {
      {"small table rows exact, d degenerate", criterion1},
      {"large table rows exact", criterion2},
      {"group orders and infinitude witnesses", criterion3},
      {"Delta parameters for every row", criterion4},
      {"distribution diagrams match the figures", criterion5},
      {"O8 elliptic-line graph is locally K(8,3)", criterion6},
      {"even-weight graphs are locally K(3d,d)", criterion7},
      {"K(n+d,d) is locally K(n,d)", criterion8},
      {"|G| = 2^(3d-1) = |G/G'|", criterion9},
      {"graph identifications", criterion10},
      {"property suites", criterion11},
      {"hexagon antipodality and diameters", criterion12},
      {"stretch: triple cover row k", stretch_k},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second(settings);
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all = all && outcome.pass;
    const std::string tag = id == 13 ? "k" : std::to_string(id);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << tag << "  " << criteria[i].first << " ["
              << std::fixed << std::setprecision(2) << seconds_since(t0) << "s]: " << outcome.detail << '\n'
              << std::flush;
  }
  return all ? 0 : 1;
}
