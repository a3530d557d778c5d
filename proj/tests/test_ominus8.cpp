#include <doctest.h>

#include "locdelta/analysis.hpp"
#include "locdelta/catalog.hpp"
#include "locdelta/ominus8.hpp"

using namespace locdelta;

TEST_CASE("quadratic form") {
  CHECK(o8::singular_vectors().size() == 119);
  // Nondegenerate polar form: only zero is orthogonal to everything.
  for (unsigned x = 1; x < 256; ++x) {
    bool radical = true;
    for (unsigned y = 0; y < 256 && radical; ++y) radical = !o8::bilinear_form(static_cast<o8::Vec8>(x), static_cast<o8::Vec8>(y));
    CHECK_FALSE(radical);
  }
}

TEST_CASE("elliptic lines") {
  const auto lines = o8::enumerate_elliptic_lines();
  CHECK(lines.size() == 1632);

  // Count 2-spaces without singular points from unordered pairs of nonsingular vectors.
  std::size_t pairs = 0;
  for (unsigned x = 1; x < 256; ++x)
    for (unsigned y = x + 1; y < 256; ++y)
      if (o8::quadratic_form(x) && o8::quadratic_form(y) && o8::quadratic_form(x ^ y)) ++pairs;
  CHECK(pairs == 3 * lines.size());
  CHECK(std::is_sorted(lines.begin(), lines.end()));
}

TEST_CASE("elliptic-line graph") {
  const auto lines = o8::enumerate_elliptic_lines();
  const Graph g = o8::elliptic_graph(lines);
  CHECK(g.regular_degree() == 56);
  // Orthogonality of 2-spaces does not depend on the chosen basis.
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < lines.size(); j += 13) {
      bool all = true;
      for (auto a : lines[i].vectors)
        for (auto b : lines[j].vectors) all = all && !o8::bilinear_form(a, b);
      CHECK(all == o8::orthogonal(lines[i], lines[j]));
    }
  CHECK(diagrams_match(equitable_refinement(g, 0), o8_figure()));
  const auto sample = o8::verify_locally_k83(g, 24, 2);
  CHECK(sample.ok);
  CHECK(sample.vertices_checked == 24);
}
