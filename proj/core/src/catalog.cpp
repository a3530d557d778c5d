#include "locdelta/catalog.hpp"

#include <iomanip>
#include <sstream>

#include "locdelta/cayley.hpp"
#include "locdelta/quotient.hpp"

namespace locdelta {

namespace {

using Builder = std::function<std::optional<PartialLinearSpace>()>;

template <class F>
Builder always(F f) {
  return [f]() -> std::optional<PartialLinearSpace> { return f(); };
}

CaseSpec row(std::string label, std::string delta, ParameterKind kind, std::string parameters, GroupExpectation group,
             std::size_t order, std::size_t dim, std::optional<ExpectedGamma> gamma, Builder build) {
  CaseSpec spec;
  spec.label = std::move(label);
  spec.delta_name = std::move(delta);
  spec.parameter_kind = kind;
  spec.parameters = std::move(parameters);
  spec.group = group;
  spec.group_order = order;
  spec.dim_v = dim;
  spec.gamma = gamma;
  spec.build = std::move(build);
  return spec;
}

std::vector<CaseSpec> make_catalog() {
  using enum ParameterKind;
  using enum GroupExpectation;
  std::vector<CaseSpec> rows;
  rows.push_back(row("a", "GQ(2,1)", Srg, "srg(9,4,1,2)", Finite, 16, 4, ExpectedGamma{16, 9, 2, 3}, always(grid_gq21)));
  rows.push_back(row("b", "GQ(2,2)", Srg, "srg(15,6,1,3)", Finite, 32, 5, ExpectedGamma{32, 15, 3, 4}, always(duads_gq22)));
  rows.push_back(
      row("c", "GQ(2,4)", Srg, "srg(27,10,1,5)", Finite, 64, 6, ExpectedGamma{64, 27, 2, 3}, always(schlafli_gq24)));
  rows.push_back(row("d", "VO4-(3)", Srg, "srg(81,20,1,6)", Finite, 1, 0, std::nullopt, always(vo4_minus3)));
  rows.push_back(row("e", "L(K(5,2))", IntersectionArray, "{4,2,1;1,1,4}", Infinite, 0, 6, ExpectedGamma{64, 15, 3, 6},
                     always(line_graph_petersen)));
  rows.push_back(row("f", "GH(2,1)", IntersectionArray, "{4,2,2;1,1,2}", Infinite, 0, 8, ExpectedGamma{256, 21, 3, 7},
                     always([] { return flag_space(fano_plane(), "GH(2,1)"); })));
  rows.push_back(row("g", "GH(2,2)", IntersectionArray, "{6,4,4;1,1,1}", Infinite, 0, 14,
                     ExpectedGamma{16384, 63, 4, 15}, always(dual_hexagon)));
  rows.push_back(row("g'", "GH(2,2)", IntersectionArray, "{6,4,4;1,1,1}", Infinite, 0, 14,
                     ExpectedGamma{16384, 63, 6, 26}, always(split_cayley_hexagon)));
  rows.push_back(row("h", "3^3", IntersectionArray, "{6,4,2;1,2,3}", Finite, 512, 8, ExpectedGamma{256, 27, 3, 6},
                     always([] { return hamming_space(3); })));
  rows.push_back(row("i", "3^4", IntersectionArray, "{8,6,4,2;1,2,3,4}", NotStated, 0, 16,
                     ExpectedGamma{65536, 81, 6, 30}, always([] { return hamming_space(4); })));
  rows.push_back(row("j", "GO(2,1)", IntersectionArray, "{4,2,2,2;1,1,1,2}", Infinite, 0, 16,
                     ExpectedGamma{65536, 45, 6, 93}, always([] { return flag_space(duads_gq22(), "GO(2,1)"); })));
  rows.push_back(row("k", "3S6", IntersectionArray, "{6,4,2,1;1,1,4,6}", Infinite, 0, 11,
                     ExpectedGamma{2048, 45, 5, 16}, [] { return triple_cover_3s6(); }));
  rows.push_back(row("l", "K(9,3)", VertexValency, "(84,20)", Finite, 256, 8, ExpectedGamma{256, 84, 3, 5},
                     always([] { return kneser_space(3); })));
  rows.push_back(row("m", "K(12,4)", VertexValency, "(495,70)", Finite, 2048, 11, ExpectedGamma{2048, 495, 3, 7},
                     always([] { return kneser_space(4); })));
  for (CaseSpec& spec : rows) {
    spec.large = spec.gamma && spec.gamma->v > 4096;
    spec.optional_case = spec.label == "k";
  }
  return rows;
}

template <class T>
Checked<T> checked(std::optional<T> computed, std::optional<T> expected, std::string source) {
  return Checked<T>{std::move(computed), std::move(expected), std::move(source)};
}

template <class T>
nlohmann::json to_json(const Checked<T>& c) {
  nlohmann::json j;
  j["computed"] = c.computed ? nlohmann::json(*c.computed) : nlohmann::json(nullptr);
  j["expected"] = c.expected ? nlohmann::json(*c.expected) : nlohmann::json(nullptr);
  j["match"] = c.match();
  j["source"] = c.source;
  return j;
}

std::string group_string(const OrderReport& r) {
  switch (r.kind) {
    case OrderReport::Kind::Finite:
      return std::to_string(r.order);
    case OrderReport::Kind::Infinite:
      return "infinite";
    case OrderReport::Kind::Unknown:
      break;
  }
  return "unknown";
}

template <class T>
std::string cell(const std::optional<T>& value) {
  if (!value) return "-";
  if constexpr (std::is_same_v<T, std::string>) {
    return *value;
  } else {
    return std::to_string(*value);
  }
}

}  // namespace

const std::vector<CaseSpec>& catalog() {
  static const std::vector<CaseSpec> rows = make_catalog();
  return rows;
}

const CaseSpec& find_case(std::string_view label) {
  for (const CaseSpec& spec : catalog()) {
    if (spec.label == label) return spec;
  }
  throw UnknownCase("unknown case '" + std::string(label) + "'");
}

QuotientDiagram o8_figure() {
  return make_diagram({1, 56, 840, 630, 105}, {{0, 1, 56},
                                               {1, 0, 1},
                                               {1, 1, 10},
                                               {1, 2, 30},
                                               {1, 4, 15},
                                               {2, 1, 2},
                                               {2, 2, 30},
                                               {2, 3, 18},
                                               {2, 4, 6},
                                               {3, 2, 24},
                                               {3, 3, 32},
                                               {4, 1, 8},
                                               {4, 2, 48}});
}

QuotientDiagram kneser3_figure() {
  return make_diagram({1, 84, 36, 126, 9}, {{0, 1, 84},
                                            {1, 0, 1},
                                            {1, 1, 20},
                                            {1, 2, 18},
                                            {1, 3, 45},
                                            {2, 1, 42},
                                            {2, 3, 35},
                                            {2, 4, 7},
                                            {3, 1, 30},
                                            {3, 2, 10},
                                            {3, 3, 40},
                                            {3, 4, 4},
                                            {4, 2, 28},
                                            {4, 3, 56}});
}

QuotientDiagram hamming3_figure() {
  return make_diagram({1, 27, 54, 108, 54, 12}, {{0, 1, 27},
                                                 {1, 0, 1},
                                                 {1, 1, 6},
                                                 {1, 2, 12},
                                                 {1, 3, 8},
                                                 {2, 1, 6},
                                                 {2, 2, 3},
                                                 {2, 3, 12},
                                                 {2, 4, 6},
                                                 {3, 1, 2},
                                                 {3, 2, 6},
                                                 {3, 3, 12},
                                                 {3, 4, 6},
                                                 {3, 5, 1},
                                                 {4, 2, 6},
                                                 {4, 3, 12},
                                                 {4, 4, 5},
                                                 {4, 5, 4},
                                                 {5, 3, 9},
                                                 {5, 4, 18}});
}

std::optional<std::string> delta_parameters(const PartialLinearSpace& space, ParameterKind kind) {
  const Graph delta = collinearity_graph(space);
  switch (kind) {
    case ParameterKind::Srg:
      if (auto p = srg_params(delta)) return p->to_string();
      return std::nullopt;
    case ParameterKind::IntersectionArray:
      if (auto a = intersection_array(delta, 0, false)) return a->to_string();
      return std::nullopt;
    case ParameterKind::VertexValency: {
      const long k = delta.regular_degree();
      if (k < 0) return std::nullopt;
      return "(" + std::to_string(delta.vertex_count()) + "," + std::to_string(k) + ")";
    }
  }
  return std::nullopt;
}

bool CaseReport::all_match() const {
  if (skipped) return false;
  bool ok = parameters.match() && dim_v.match() && v.match() && k.match() && diameter.match() && rk.match();
  if (group.computed && group.expected) ok = ok && group.match();
  if (locally_delta) ok = ok && *locally_delta == v.expected.has_value();
  return ok;
}

CaseReport analyze_case(const CaseSpec& spec, const AnalyzeOptions& options) {
  const auto note = [&](const std::string& message) {
    if (options.progress) options.progress("case " + spec.label + ": " + message);
  };
  const std::string source = "table row " + spec.label;

  CaseReport report;
  report.label = spec.label;
  report.delta_name = spec.delta_name;
  report.optional_case = spec.optional_case;

  std::optional<ExpectedGamma> expect = spec.gamma;
  report.parameters = checked<std::string>(std::nullopt, spec.parameters, source + ", parameters");
  report.dim_v = checked<std::size_t>(std::nullopt, spec.dim_v, source + ", dim V");
  report.v = checked<std::size_t>(std::nullopt, expect ? std::optional(expect->v) : std::nullopt, source + ", v");
  report.k = checked<std::size_t>(std::nullopt, expect ? std::optional(expect->k) : std::nullopt, source + ", k");
  report.diameter = checked<int>(std::nullopt, expect ? std::optional(expect->diameter) : std::nullopt, source + ", d");
  report.rk = checked<std::size_t>(std::nullopt, expect ? std::optional(expect->rk) : std::nullopt, source + ", rk");
  std::optional<std::string> group_expected;
  if (spec.group == GroupExpectation::Finite) group_expected = std::to_string(spec.group_order);
  if (spec.group == GroupExpectation::Infinite) group_expected = "infinite";
  report.group = checked<std::string>(std::nullopt, group_expected, source + ", |G|");

  note("building space");
  const std::optional<PartialLinearSpace> space = spec.build();
  if (!space) {
    report.skipped = true;
    report.status = "skipped: optional: construction search not guaranteed";
    return report;
  }
  report.parameters.computed = delta_parameters(*space, spec.parameter_kind);

  note("quotient");
  const QuotientData q = build_quotient(*space);
  report.dim_v.computed = q.dimension();

  if (options.with_group) {
    note("group order");
    OrderReport order;
    if (spec.group == GroupExpectation::NotStated) {
      // No stated order to reproduce, so only the cheap certificate is attempted.
      if (auto witness = infinitude_witness(q, options.group.witness_budget)) {
        order.kind = OrderReport::Kind::Infinite;
        order.witness = std::move(witness);
      }
    } else {
      order = order_report(q, options.group);
    }
    report.group.computed = group_string(order);
    report.order = std::move(order);
  }

  if (q.dimension() == 0 || !check_weight2(q)) {
    report.status = "degenerate: dim V = " + std::to_string(q.dimension()) + ", no graph";
    report.locally_delta = false;
    return report;
  }

  note("gamma on " + std::to_string(std::size_t{1} << q.dimension()) + " vertices");
  const CayleyGamma gamma = build_gamma(q);
  report.status = "built";
  report.v.computed = gamma.vertex_count();
  report.k.computed = gamma.degree();
  report.locally_delta = check_weight3(q).ok && local_graph_matches_collinearity(local_graph(gamma, q), *space);

  note("diameter");
  report.diameter.computed = diameter_vt(gamma);

  note("equitable refinement");
  ProgressFn refine_progress;
  if (options.progress) refine_progress = [&](std::string_view line) { note(std::string(line)); };
  QuotientDiagram diagram = equitable_refinement(gamma, 0, refine_progress);
  report.rk.computed = diagram.cell_count();
  report.diagram = std::move(diagram);
  return report;
}

nlohmann::json to_json(const CaseReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["case"] = r.label;
  j["delta"] = r.delta_name;
  j["status"] = r.status;
  j["optional"] = r.optional_case;
  j["parameters"] = to_json(r.parameters);
  j["dim_V"] = to_json(r.dim_v);
  j["v"] = to_json(r.v);
  j["k"] = to_json(r.k);
  j["diameter"] = to_json(r.diameter);
  j["rk"] = to_json(r.rk);
  j["group_order"] = to_json(r.group);
  j["locally_delta"] = r.locally_delta ? nlohmann::json(*r.locally_delta) : nlohmann::json(nullptr);
  if (r.order) j["group"] = to_json(*r.order);
  if (r.diagram) j["diagram"] = to_json(*r.diagram);
  j["all_match"] = r.all_match();
  return j;
}

std::string table_header() {
  std::ostringstream out;
  out << std::left << std::setw(4) << "" << std::setw(11) << "Delta" << std::setw(20) << "parameters" << std::right
      << std::setw(9) << "|G|" << std::setw(7) << "dim V" << std::setw(7) << "v" << std::setw(5) << "k" << std::setw(3)
      << "d" << std::setw(5) << "rk" << "  result";
  return out.str();
}

std::string table_row(const CaseReport& r) {
  std::ostringstream out;
  std::string group = cell(r.group.computed);
  if (group == "infinite") group = "inf";
  out << std::left << std::setw(4) << (r.label + ")") << std::setw(11) << r.delta_name << std::setw(20)
      << cell(r.parameters.computed) << std::right << std::setw(9) << group << std::setw(7) << cell(r.dim_v.computed)
      << std::setw(7) << cell(r.v.computed) << std::setw(5) << cell(r.k.computed) << std::setw(3)
      << cell(r.diameter.computed) << std::setw(5) << cell(r.rk.computed) << "  ";
  if (r.skipped) {
    out << r.status;
  } else {
    out << (r.all_match() ? "match" : "MISMATCH");
  }
  return out.str();
}

}  // namespace locdelta
