#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "locdelta/catalog.hpp"
#include "locdelta/cayley.hpp"
#include "locdelta/cosetenum.hpp"
#include "locdelta/kneser.hpp"
#include "locdelta/ominus8.hpp"
#include "locdelta/subsets.hpp"

namespace {

using namespace locdelta;

enum Exit : int { kMatch = 0, kMismatch = 1, kUsage = 2, kCapExceeded = 3 };

struct Global {
  unsigned jobs = 1;
  bool quiet = false;

  ProgressFn progress() const {
    if (quiet) return nullptr;
    return [](std::string_view line) { std::cerr << line << '\n'; };
  }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

PartialLinearSpace build_space(const CaseSpec& spec) {
  auto space = spec.build();
  if (!space) throw std::runtime_error("case " + spec.label + ": optional: construction search not guaranteed");
  return *space;
}

int cmd_catalog() {
  for (const CaseSpec& spec : catalog()) {
    std::cout << std::left << std::setw(4) << spec.label << std::setw(11) << spec.delta_name << std::setw(20)
              << spec.parameters;
    if (spec.large) std::cout << " [large]";
    if (spec.optional_case) std::cout << " [optional]";
    std::cout << '\n';
  }
  std::cout << "o8  elliptic lines of O8-(2), 1632 vertices\n";
  return kMatch;
}

int cmd_build(const std::string& label, const std::string& out_path) {
  const QuotientData q = build_quotient(build_space(find_case(label)));
  const CayleyGamma gamma = build_gamma(q);
  if (out_path.empty() || out_path == "-") {
    write_edge_list(std::cout, gamma);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    write_edge_list(out, gamma);
  }
  return kMatch;
}

int cmd_analyze(const std::string& label, bool with_group, const Global& g) {
  AnalyzeOptions options;
  options.with_group = with_group;
  options.jobs = g.jobs;
  options.progress = g.progress();
  const CaseReport report = analyze_case(find_case(label), options);
  print_json(to_json(report));
  return report.all_match() ? kMatch : kMismatch;
}

std::optional<QuotientDiagram> figure_for(const std::string& label) {
  if (label == "o8") return o8_figure();
  if (label == "l") return kneser3_figure();
  if (label == "h") return hamming3_figure();
  return std::nullopt;
}

int cmd_diagram(const std::string& label, const std::string& format, const Global& g) {
  QuotientDiagram diagram;
  if (label == "o8") {
    diagram = equitable_refinement(o8::elliptic_graph(o8::enumerate_elliptic_lines()), 0, g.progress());
  } else {
    const QuotientData q = build_quotient(build_space(find_case(label)));
    diagram = equitable_refinement(build_gamma(q), 0, g.progress());
  }
  if (format == "dot") {
    std::cout << to_dot(diagram, label == "g'" ? "gprime" : label);
  } else if (format == "json") {
    nlohmann::json j = to_json(diagram);
    j["schema"] = 1;
    j["case"] = label;
    print_json(j);
  } else {
    std::cout << to_text(diagram);
  }
  if (const auto figure = figure_for(label)) {
    const bool match = diagrams_match(diagram, *figure);
    if (!g.quiet) std::cerr << "figure comparison: " << (match ? "match" : "MISMATCH") << '\n';
    return match ? kMatch : kMismatch;
  }
  return kMatch;
}

int cmd_table(bool large, bool strict_k, bool json, bool with_group, const Global& g) {
  AnalyzeOptions options;
  options.with_group = with_group;
  options.jobs = g.jobs;
  options.progress = g.progress();
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  if (!json) std::cout << table_header() << '\n';
  for (const CaseSpec& spec : catalog()) {
    if (spec.large && !large) {
      if (!json) std::cout << std::left << std::setw(4) << (spec.label + ")") << "not run (pass --large)\n";
      continue;
    }
    const CaseReport report = analyze_case(spec, options);
    const bool gated = !spec.optional_case || strict_k;
    if (gated && !report.all_match()) ok = false;
    if (json) {
      nlohmann::json j = to_json(report);
      j.erase("diagram");
      j["gated"] = gated;
      rows.push_back(std::move(j));
    } else {
      std::cout << table_row(report);
      if (!gated && !report.skipped) std::cout << " (optional)";
      std::cout << '\n' << std::flush;
    }
  }
  if (json) print_json({{"schema", 1}, {"rows", rows}, {"all_match", ok}});
  return ok ? kMatch : kMismatch;
}

int cmd_group(const std::string& label, std::size_t cap, const std::string& strategy) {
  const CaseSpec& spec = find_case(label);
  const QuotientData q = build_quotient(build_space(spec));
  OrderOptions options;
  options.enumeration.coset_cap = cap;
  options.enumeration.strategy = strategy == "hlt" ? Strategy::Hlt : Strategy::Felsch;
  const OrderReport report = order_report(q, options);
  nlohmann::json j = to_json(report);
  j["schema"] = 1;
  j["case"] = label;
  j["abelian_quotient_order"] = q.dimension() < 64 ? nlohmann::json(abelian_order(q)) : nlohmann::json("overflow");
  print_json(j);
  if (report.kind == OrderReport::Kind::Unknown) return kCapExceeded;
  bool match = true;
  if (spec.group == GroupExpectation::Infinite) match = report.kind == OrderReport::Kind::Infinite;
  if (spec.group == GroupExpectation::Finite) match = report.kind == OrderReport::Kind::Finite && report.order == spec.group_order;
  return match ? kMatch : kMismatch;
}

int cmd_kneser_check(unsigned n, unsigned d) {
  const ClassicLocalResult r = locally_kneser_classic(n, d);
  nlohmann::json j{{"schema", 1},
                   {"case", "kneser-" + std::to_string(n) + "-" + std::to_string(d)},
                   {"graph", "K(" + std::to_string(n + d) + "," + std::to_string(d) + ")"},
                   {"locally", "K(" + std::to_string(n) + "," + std::to_string(d) + ")"},
                   {"vertices_checked", r.vertices_checked},
                   {"ok", r.ok}};
  if (r.failing_vertex) j["failing_vertex"] = *r.failing_vertex;
  print_json(j);
  return r.ok ? kMatch : kMismatch;
}

int cmd_even_weight(unsigned d, bool all_vertices) {
  const EvenWeightGraph g = even_weight_graph(d);
  std::vector<Vertex> vertices;
  if (all_vertices) {
    vertices.resize(g.vertex_count());
    std::iota(vertices.begin(), vertices.end(), Vertex{0});
  } else {
    vertices.push_back(0);
  }
  const ClassicLocalResult local = even_weight_locally_kneser(g, vertices);
  nlohmann::json j{{"schema", 1},
                   {"case", "even-weight-" + std::to_string(d)},
                   {"vertices", g.vertex_count()},
                   {"degree", g.degree()},
                   {"locally", "K(" + std::to_string(3 * d) + "," + std::to_string(d) + ")"},
                   {"vertices_checked", local.vertices_checked},
                   {"locally_ok", local.ok},
                   {"kneser_graph_vertices", binomial(4 * d, d)}};
  bool ok = local.ok && g.vertex_count() != binomial(4 * d, d);
  if (d <= 4) {
    const QuotientIdentification id = identify_with_quotient(d);
    j["quotient_isomorphic"] = id.ok;
    ok = ok && id.ok;
  }
  j["ok"] = ok;
  print_json(j);
  return ok ? kMatch : kMismatch;
}

int cmd_o8(std::optional<std::size_t> sample, const Global& g) {
  const auto lines = o8::enumerate_elliptic_lines();
  const Graph graph = o8::elliptic_graph(lines);
  if (!g.quiet) std::cerr << "o8: " << lines.size() << " lines, auditing neighbourhoods\n";
  const QuotientDiagram diagram = equitable_refinement(graph, 0);
  const o8::AuditResult audit = o8::verify_locally_k83(graph, sample, g.jobs);
  const long degree = graph.regular_degree();
  const bool figure = diagrams_match(diagram, o8_figure());
  const bool ok = lines.size() == 1632 && degree == 56 && audit.ok && figure;
  nlohmann::json j{{"schema", 1},
                   {"case", "o8"},
                   {"vertices", lines.size()},
                   {"degree", degree},
                   {"vertices_checked", audit.vertices_checked},
                   {"locally_k83", audit.ok},
                   {"diagram_matches_figure", figure},
                   {"ok", ok}};
  if (audit.failing_vertex) j["failing_vertex"] = *audit.failing_vertex;
  print_json(j);
  return ok ? kMatch : kMismatch;
}

int cmd_space(const std::string& label) {
  std::cout << to_text(build_space(find_case(label)));
  return kMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally Kneser and locally Delta graphs from partial linear spaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Global global;
  app.add_option("-j,--jobs", global.jobs, "Worker threads, 0 for all cores")->capture_default_str();
  app.add_flag("-q,--quiet", global.quiet, "Suppress progress lines on stderr");

  std::string label;
  std::string out_path;
  std::string format = "text";
  std::string strategy = "hlt";
  bool large = false;
  bool strict_k = false;
  bool json = false;
  bool no_group = false;
  bool all_vertices = false;
  std::size_t cap = 1'000'000;
  std::size_t sample = 0;
  unsigned n = 0;
  unsigned d = 0;

  auto* catalog_cmd = app.add_subcommand("catalog", "List the catalog cases");
  auto* build_cmd = app.add_subcommand("build", "Write the edge list of Gamma");
  build_cmd->add_option("case", label, "Case label")->required();
  build_cmd->add_option("-o,--out", out_path, "Output file (default stdout)");
  auto* analyze_cmd = app.add_subcommand("analyze", "Case report as JSON");
  analyze_cmd->add_option("case", label, "Case label")->required();
  analyze_cmd->add_flag("--no-group", no_group, "Skip the group order");
  auto* diagram_cmd = app.add_subcommand("diagram", "Seeded distribution diagram");
  diagram_cmd->add_option("case", label, "Case label or o8")->required();
  diagram_cmd->add_option("-f,--format", format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}))
      ->capture_default_str();
  auto* table_cmd = app.add_subcommand("table", "Reproduce the examples table");
  table_cmd->add_flag("--large", large, "Include the 2^14 and 2^16 vertex cases");
  table_cmd->add_flag("--strict-k", strict_k, "Let the optional case gate the exit status");
  table_cmd->add_flag("--json", json, "JSON instead of the fixed-width table");
  table_cmd->add_flag("--no-group", no_group, "Skip the |G| column");
  auto* group_cmd = app.add_subcommand("group", "Order of G by coset enumeration");
  group_cmd->add_option("case", label, "Case label")->required();
  group_cmd->add_option("--cap", cap, "Maximum coset rows")->capture_default_str();
  group_cmd->add_option("--strategy", strategy, "hlt or felsch")
      ->check(CLI::IsMember({"felsch", "hlt"}))
      ->capture_default_str();
  auto* kneser_cmd = app.add_subcommand("kneser-check", "Is K(n+d,d) locally K(n,d)");
  kneser_cmd->add_option("n", n)->required()->check(CLI::Range(1u, 30u));
  kneser_cmd->add_option("d", d)->required()->check(CLI::Range(1u, 15u));
  auto* even_cmd = app.add_subcommand("even-weight", "Even-weight vectors of length 3d");
  even_cmd->add_option("d", d)->required()->check(CLI::Range(1u, 7u));
  even_cmd->add_flag("--all", all_vertices, "Check every vertex, not only 0");
  auto* o8_cmd = app.add_subcommand("o8", "Elliptic-line graph of O8-(2)");
  o8_cmd->add_option("--sample", sample, "Audit this many vertices (0 for all)");
  auto* space_cmd = app.add_subcommand("space", "Export a case's space as text");
  space_cmd->add_option("case", label, "Case label")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kMatch : kUsage;
  }

  try {
    if (*catalog_cmd) return cmd_catalog();
    if (*build_cmd) return cmd_build(label, out_path);
    if (*analyze_cmd) return cmd_analyze(label, !no_group, global);
    if (*diagram_cmd) return cmd_diagram(label, format, global);
    if (*table_cmd) return cmd_table(large, strict_k, json, !no_group, global);
    if (*group_cmd) return cmd_group(label, cap, strategy);
    if (*kneser_cmd) return cmd_kneser_check(n, d);
    if (*even_cmd) return cmd_even_weight(d, all_vertices);
    if (*o8_cmd) return cmd_o8(sample == 0 ? std::nullopt : std::optional(sample), global);
    if (*space_cmd) return cmd_space(label);
  } catch (const UnknownCase& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateQuotient& e) {
    std::cerr << "degenerate: dim V = 0, no graph (" << e.what() << ")\n";
    return kMismatch;
  } catch (const std::length_error& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
