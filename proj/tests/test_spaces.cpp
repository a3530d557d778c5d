#include <doctest.h>

#include "locdelta/analysis.hpp"
#include "locdelta/spaces.hpp"
#include "oracles.hpp"

using namespace locdelta;

namespace {

void check_valid(const PartialLinearSpace& s) {
  CHECK_MESSAGE(validate(s).ok, s.name << ": " << validate(s).message);
  CHECK_MESSAGE(check_lambda1(s).ok, s.name);
}

std::string array_of(const PartialLinearSpace& s) { return intersection_array(collinearity_graph(s), 0, false)->to_string(); }

std::vector<std::size_t> layers(const Graph& g) {
  std::vector<std::size_t> out;
  for (int d : oracle::distances(g, 0)) {
    if (out.size() <= static_cast<std::size_t>(d)) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

}  // namespace

TEST_CASE("builders produce valid spaces with the listed collinearity graphs") {
  const auto srg = [](const PartialLinearSpace& s) { return srg_params(collinearity_graph(s))->to_string(); };

  const auto a = grid_gq21();
  check_valid(a);
  CHECK(a.n_points == 9);
  CHECK(a.lines.size() == 6);
  CHECK(srg(a) == "srg(9,4,1,2)");

  const auto b = duads_gq22();
  check_valid(b);
  CHECK(b.lines.size() == 15);
  CHECK(srg(b) == "srg(15,6,1,3)");

  const auto c = schlafli_gq24();
  check_valid(c);
  CHECK(c.lines.size() == 45);
  CHECK(srg(c) == "srg(27,10,1,5)");

  const auto d = vo4_minus3();
  check_valid(d);
  CHECK(srg(d) == "srg(81,20,1,6)");

  const auto e = line_graph_petersen();
  check_valid(e);
  CHECK(e.lines.size() == 10);
  CHECK(array_of(e) == "{4,2,1;1,1,4}");

  const auto f = flag_space(fano_plane(), "flags");
  check_valid(f);
  CHECK(f.n_points == 21);
  CHECK(array_of(f) == "{4,2,2;1,1,2}");

  const auto h = hamming_space(3);
  check_valid(h);
  CHECK(array_of(h) == "{6,4,2;1,2,3}");
  CHECK(array_of(hamming_space(4)) == "{8,6,4,2;1,2,3,4}");

  const auto j = flag_space(duads_gq22(), "flags");
  check_valid(j);
  CHECK(j.n_points == 45);
  CHECK(array_of(j) == "{4,2,2,2;1,1,1,2}");

  const auto l = kneser_space(3);
  check_valid(l);
  CHECK(l.n_points == 84);
  CHECK(collinearity_graph(l).regular_degree() == 20);
  const auto m = kneser_space(4);
  CHECK(m.n_points == 495);
  CHECK(collinearity_graph(m).regular_degree() == 70);
}

TEST_CASE("hexagons have 63 points and lines with distance layers 1, 6, 24, 32") {
  for (const auto& s : {split_cayley_hexagon(), dual_hexagon()}) {
    check_valid(s);
    CHECK(s.n_points == 63);
    CHECK(s.lines.size() == 63);
    const Graph g = collinearity_graph(s);
    CHECK(g.regular_degree() == 6);
    CHECK(layers(g) == std::vector<std::size_t>{1, 6, 24, 32});
    for (const auto& through : lines_through_points(s)) CHECK(through.size() == 3);
  }
}

TEST_CASE("validation catches broken spaces") {
  PartialLinearSpace s{"bad", 5, {{0, 1, 2}, {0, 1, 3}}};
  CHECK_FALSE(validate(s).ok);
  s.lines = {{0, 1, 7}};
  CHECK_FALSE(validate(s).ok);
  s.lines = {{0, 0, 1}};
  CHECK_FALSE(validate(s).ok);

  // A triangle of lines yields an edge in two triangles of the collinearity graph.
  PartialLinearSpace triangle{"triangle", 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}};
  CHECK(validate(triangle).ok);
  CHECK_FALSE(check_lambda1(triangle).ok);

  CHECK_THROWS_AS(flag_space(grid_gq21(), "x"), std::invalid_argument);
  CHECK_THROWS(hamming_space(0));
  CHECK_THROWS(kneser_space(6));
}

TEST_CASE("text round trip") {
  for (const auto& s : {grid_gq21(), schlafli_gq24(), kneser_space(2)}) {
    const std::string text = to_text(s);
    CHECK(text.rfind("points " + std::to_string(s.n_points) + "\n", 0) == 0);
    const auto back = from_text(text, s.name);
    CHECK(back == s);
  }
  CHECK_THROWS(from_text("points 3\n0 1\n"));
}

TEST_CASE("incidence matrix has three ones per column") {
  const auto s = duads_gq22();
  const BitMatrix n = incidence_matrix(s);
  CHECK(n.rows() == 15);
  CHECK(n.cols() == 15);
  for (std::size_t c = 0; c < n.cols(); ++c) CHECK(n.column(c).weight() == 3);
}

TEST_CASE("triple cover search certifies its result") {
  const auto cover = triple_cover_3s6();
  REQUIRE(cover.has_value());
  check_valid(*cover);
  CHECK(cover->n_points == 45);
  CHECK(cover->lines.size() == 45);
  CHECK(array_of(*cover) == "{6,4,2,1;1,1,4,6}");
  // Reruns with the same seed give the same space.
  CHECK(*triple_cover_3s6() == *cover);
}
