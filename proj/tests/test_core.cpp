#include <string>
#include <vector>

#include "brute_force.hpp"
#include "doctest.h"
#include "shiftlab/core.hpp"

using namespace shiftlab;

namespace {

const std::vector<std::string> kGraphs = {"golden", "even", "even4", "full2", "full1",
                                          "golden3", "evenedge", "leftres_domain", "leftres_image"};

LabeledGraph corpus_graph(const std::string& name) { return load_graph(brute::corpus("graphs/" + name + ".graph")); }

bool right_resolving(const LabeledGraph& g) {
  std::set<std::pair<VertexId, Symbol>> seen;
  for (const Edge& e : g.edges())
    if (!seen.emplace(e.source, e.label).second) return false;
  return true;
}

std::string parse_message(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::parse);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("alphabet formatting round-trips") {
  const Alphabet compact({"0", "1"});
  CHECK(compact.format({0, 1, 1}) == "011");
  CHECK(compact.parse("011") == Block{0, 1, 1});
  CHECK(compact.parse("0.1") == Block{0, 1});
  CHECK(compact.format({}) == "ε");

  const Alphabet wide({"x1", "x2"});
  CHECK_FALSE(wide.compact());
  CHECK(wide.format({1, 0}) == "x2.x1");
  CHECK(wide.parse("x2.x1") == Block{1, 0});
  CHECK_THROWS_AS(wide.symbol("x3"), Error);
}

TEST_CASE("graph parse errors carry line numbers") {
  CHECK(parse_message("alphabet 0 1\nvertex A\nedge A B 0\n").starts_with("line 3:"));
  CHECK(parse_message("alphabet 0 1\nvertex A\nvertex A\n").starts_with("line 3:"));
  CHECK(parse_message("# comment\nbogus\n").starts_with("line 2:"));
  CHECK(parse_message("alphabet 0\nvertex A\nedge A A 1\n").starts_with("line 3:"));
  CHECK(parse_message("alphabet 0\nvertex A\nedge A A 0\nedge A A 0\n").starts_with("line 4:"));
  CHECK(parse_message("vertex A\n").find("alphabet") != std::string::npos);
}

TEST_CASE("graph text round-trips through format_graph") {
  for (const auto& name : kGraphs) {
    const LabeledGraph g = corpus_graph(name);
    const LabeledGraph again = parse_graph(format_graph(g));
    CHECK(again.vertex_names() == g.vertex_names());
    CHECK(again.edges() == g.edges());
    CHECK(again.alphabet() == g.alphabet());
  }
}

TEST_CASE("block counts match path enumeration on the corpus") {
  for (const auto& name : kGraphs) {
    const LabeledGraph g = corpus_graph(name);
    for (std::size_t n = 0; n <= 7; ++n) {
      const auto expected = brute::path_blocks(g, n);
      const auto listed = blocks_of_length(g, n);
      CHECK(std::vector<Block>(expected.begin(), expected.end()) == listed);
      if (!right_resolving(g))
        CHECK_THROWS_AS(count_blocks(g, n), Error);
      else
        CHECK(count_blocks(g, n) == expected.size());
    }
  }
}

TEST_CASE("golden mean block counts follow the Fibonacci law") {
  const LabeledGraph g = corpus_graph("golden");
  std::uint64_t a = 1, b = 2;
  for (std::size_t n = 1; n <= 30; ++n) {
    CHECK(count_blocks(g, n) == b);
    const auto next = a + b;
    a = b;
    b = next;
  }
}

TEST_CASE("admissibility agrees with path search") {
  const LabeledGraph g = corpus_graph("even");
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto admissible = brute::path_blocks(g, n);
    for (const Block& w : brute::path_blocks(corpus_graph("full2"), n))
      CHECK(is_admissible(g, w) == (admissible.count(w) > 0));
  }
}

TEST_CASE("points: shift and window agree coordinatewise") {
  const std::vector<Point> points = {
      make_point({0}, {1, 1, 0, 1}, {1, 0}, 0), make_point({1, 0, 0}, {}, {0, 1}, 2),
      make_point({1}, {0}, {1}, -3), make_point({0, 1}, {1, 1, 1}, {0, 0, 1}, 1)};
  for (const Point& p : points) {
    for (std::int64_t k = -7; k <= 7; ++k) {
      const Point q = shift(p, k);
      for (std::int64_t i = -20; i <= 20; ++i) CHECK(q.at(i) == p.at(i + k));
      CHECK(point_window(q, -5, 5) == point_window(p, k - 5, k + 5));
    }
    CHECK(same_sequence(p, shift(shift(p, 3), -3)));
  }
  // The same sequence written two ways.
  CHECK(same_sequence(make_point({0}, {0, 1}, {1}), make_point({0, 0}, {0, 0, 1, 1}, {1, 1}, 1)));
  CHECK_FALSE(same_sequence(make_point({0}, {1}, {0}), make_point({0}, {}, {0})));
}

TEST_CASE("trim and components") {
  const LabeledGraph g = parse_graph(
      "alphabet a b\nvertex S\nvertex A\nvertex B\nvertex T\n"
      "edge S A a\nedge A B a\nedge B A b\nedge B T a\n");
  const LabeledGraph t = trim_to_essential(g);
  CHECK(t.vertex_names() == std::vector<std::string>{"A", "B"});
  CHECK(is_irreducible(t));
  CHECK_FALSE(is_irreducible(g));
  const auto comps = nontrivial_components(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == VertexSet{1, 2});
}

TEST_CASE("determinization runs words like image_set") {
  for (const auto& name : kGraphs) {
    const LabeledGraph g = corpus_graph(name);
    const SubsetAutomaton a = determinize(g);
    for (const Block& w : brute::all_blocks(corpus_graph(name), 5)) {
      const auto s = a.run(0, w);
      REQUIRE(s >= 0);
      CHECK(a.states[static_cast<std::size_t>(s)] == image_set(g, w, all_vertices(g)));
    }
  }
}
