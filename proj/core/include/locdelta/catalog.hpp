#ifndef LOCDELTA_CATALOG_HPP
#define LOCDELTA_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "locdelta/analysis.hpp"
#include "locdelta/cosetenum.hpp"
#include "locdelta/spaces.hpp"

namespace locdelta {

class UnknownCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParameterKind { Srg, IntersectionArray, VertexValency };

enum class GroupExpectation { Finite, Infinite, NotStated };

/// Graph columns of a table row; absent for the degenerate row.
struct ExpectedGamma {
  std::size_t v;
  std::size_t k;
  int diameter;
  std::size_t rk;
};

struct CaseSpec {
  std::string label;  // "a".."m", "g'"
  std::string delta_name;
  ParameterKind parameter_kind;
  std::string parameters;  // "srg(9,4,1,2)", "{4,2,1;1,1,4}" or "(84,20)"
  GroupExpectation group;
  std::size_t group_order = 0;  // when Finite
  std::size_t dim_v;
  std::optional<ExpectedGamma> gamma;
  bool large = false;
  /// Built by a search that may fail; never gates the exit status by default.
  bool optional_case = false;
  std::function<std::optional<PartialLinearSpace>()> build;
};

/// Rows a..m with g' after g.
const std::vector<CaseSpec>& catalog();
const CaseSpec& find_case(std::string_view label);

/// Seeded distribution diagrams: O8 elliptic-line graph, row l and row h.
QuotientDiagram o8_figure();
QuotientDiagram kneser3_figure();
QuotientDiagram hamming3_figure();

template <class T>
struct Checked {
  std::optional<T> computed;
  std::optional<T> expected;
  std::string source;
  bool match() const { return computed == expected; }
};

struct AnalyzeOptions {
  bool with_group = true;
  OrderOptions group;
  unsigned jobs = 1;
  ProgressFn progress;
};

struct CaseReport {
  std::string label;
  std::string delta_name;
  /// "built", "skipped: ..." (optional case not constructed) or "degenerate: ...".
  std::string status;
  Checked<std::string> parameters;
  Checked<std::size_t> dim_v;
  Checked<std::size_t> v;
  Checked<std::size_t> k;
  Checked<int> diameter;
  Checked<std::size_t> rk;
  /// "infinite", "unknown" or the order; nullopt when the group was not computed.
  Checked<std::string> group;
  std::optional<bool> locally_delta;
  std::optional<QuotientDiagram> diagram;
  std::optional<OrderReport> order;
  bool optional_case = false;
  bool skipped = false;

  /// Every compared value matches and the locally-Delta verdict, when computed, holds.
  bool all_match() const;
};

CaseReport analyze_case(const CaseSpec& spec, const AnalyzeOptions& options = {});

/// Δ parameters in the row's notation, computed from the collinearity graph.
std::optional<std::string> delta_parameters(const PartialLinearSpace& space, ParameterKind kind);

/// {schema: 1, case, status, ...} with {computed, expected, match, source} per column.
nlohmann::json to_json(const CaseReport& report);

/// One fixed-width line per report.
std::string table_header();
std::string table_row(const CaseReport& report);

}  // namespace locdelta

#endif  // LOCDELTA_CATALOG_HPP
