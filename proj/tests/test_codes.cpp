#include <string>
#include <vector>

#include "brute_force.hpp"
#include "doctest.h"
#include "shiftlab/codes.hpp"
#include "shiftlab/covers.hpp"

using namespace shiftlab;

namespace {

const std::vector<std::string> kMaps = {"xor", "evenmap", "identity", "identity_full2", "leftres", "collapse"};

FactorMap corpus_map(const std::string& name) { return load_factor_map(brute::corpus("maps/" + name + ".code")); }
LabeledGraph corpus_graph(const std::string& name) { return load_graph(brute::corpus("graphs/" + name + ".graph")); }

/// Image of a block computed straight from the window table.
Block slide(const BlockCode& c, const Block& w) {
  Block out;
  for (std::size_t i = 0; i + c.window_length() <= w.size(); ++i)
    out.push_back(c.window_map().at(Block(w.begin() + static_cast<std::ptrdiff_t>(i),
                                          w.begin() + static_cast<std::ptrdiff_t>(i + c.window_length()))));
  return out;
}

std::string code_error(const std::string& text, const LabeledGraph& d, const LabeledGraph& c) {
  try {
    parse_code(text, d, c);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("apply_block slides the window table") {
  for (const auto& name : kMaps) {
    const FactorMap f = corpus_map(name);
    for (const Block& w : brute::all_blocks(f.domain, 6)) {
      if (w.size() < f.code.window_length()) {
        CHECK_THROWS_AS(apply_block(f.code, w), Error);
        continue;
      }
      CHECK(apply_block(f.code, w) == slide(f.code, w));
    }
  }
}

TEST_CASE("xor examples") {
  const FactorMap f = corpus_map("xor");
  const Alphabet& a = f.domain.alphabet();
  CHECK(a.format(apply_block(f.code, a.parse("0110"))) == "101");
  try {
    apply_block(f.code, a.parse("0"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::block_too_short);
  }
  // A 2-block code on the golden mean shift has no window 11.
  const BlockCode g(a, a, 0, 1, {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}});
  try {
    apply_block(g, a.parse("0110"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::inadmissible_block);
  }
}

TEST_CASE("apply_code on points agrees with windows") {
  const FactorMap f = corpus_map("xor");
  const std::vector<Point> points = {make_point({0}, {1, 1, 0}, {1}, 0), make_point({0, 1}, {}, {1, 1, 0}, 1),
                                     make_point({1}, {0}, {1}, -2)};
  for (const Point& p : points) {
    const Point y = apply_code(f.code, p);
    for (std::int64_t i = -15; i <= 15; ++i) {
      const Block window = point_window(p, i - static_cast<std::int64_t>(f.code.memory()),
                                        i + static_cast<std::int64_t>(f.code.anticipation()));
      CHECK(y.at(i) == f.code.window_map().at(window));
    }
    // Codes commute with the shift.
    CHECK(same_sequence(apply_code(f.code, shift(p, 3)), shift(y, 3)));
  }
  // A single 1 at coordinate 0 gives 1s at coordinates -1 and 0.
  const Point y = apply_code(f.code, make_point({0}, {1}, {0}));
  for (std::int64_t i = -6; i <= 6; ++i) CHECK(y.at(i) == ((i == -1 || i == 0) ? 1u : 0u));
}

TEST_CASE("composition agrees with applying twice") {
  const FactorMap x = corpus_map("xor");
  const BlockCode xx = compose(x.code, x.code);
  CHECK(xx.memory() == 0);
  CHECK(xx.anticipation() == 2);
  for (const Block& w : brute::all_blocks(x.domain, 8)) {
    if (w.size() < 3) continue;
    CHECK(apply_block(xx, w) == apply_block(x.code, apply_block(x.code, w)));
  }
  const FactorMap e = corpus_map("evenmap");
  const FactorMap id = identity_map(e.codomain);
  const BlockCode c = compose(id.code, e.code);
  for (const Block& w : brute::all_blocks(e.domain, 6))
    if (!w.empty()) CHECK(apply_block(c, w) == apply_block(e.code, w));
}

TEST_CASE("higher block presentations") {
  for (const std::string name : {"golden", "even", "full2"}) {
    const LabeledGraph g = corpus_graph(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      const HigherBlock hb = higher_block(g, n);
      CHECK(hb.graph.alphabet().size() == brute::path_blocks(g, n).size());
      // Encoding then projecting is the identity on blocks.
      for (const Block& w : brute::all_blocks(g, 7)) {
        if (w.size() < n) continue;
        const Block up = apply_block(hb.encoder, w);
        CHECK(brute::admissible(hb.graph, up));
        const Block back = apply_block(hb.projection, up);
        CHECK(back == Block(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(back.size())));
      }
      // Every block of the higher block shift is the encoding of a block.
      for (std::size_t len = 1; len <= 4; ++len) {
        std::set<Block> encoded;
        for (const Block& w : brute::path_blocks(g, len + n - 1)) encoded.insert(apply_block(hb.encoder, w));
        CHECK(brute::path_blocks(hb.graph, len) == encoded);
      }
    }
  }
}

TEST_CASE("recoding to a 1-block map") {
  for (const auto& name : kMaps) {
    CAPTURE(name);
    const FactorMap f = corpus_map(name);
    const FactorMap r = recode_to_one_block(f);
    CHECK(r.code.one_block());
    CHECK(r.onto());
    const BlockCode conj = recoding_conjugacy(f);
    for (const Block& w : brute::all_blocks(f.domain, 7)) {
      if (w.size() < f.code.window_length() + 1) continue;
      const Block recoded = apply_block(conj, w);
      CHECK(brute::admissible(r.domain, recoded));
      CHECK(apply_block(r.code, recoded) == apply_block(f.code, w));
    }
  }
}

TEST_CASE("factor map validation") {
  for (const auto& name : kMaps) CHECK(corpus_map(name).onto());
  const LabeledGraph full2 = corpus_graph("full2");
  const LabeledGraph golden = corpus_graph("golden");
  // The identity on the full shift does not land in the golden mean shift.
  CHECK_THROWS_AS(make_factor_map(identity_code(full2), full2, golden), Error);
  // The identity on the golden mean shift is not onto the full shift.
  const FactorMap into = make_factor_map(identity_code(golden), golden, full2);
  CHECK_FALSE(into.onto());
  CHECK(into.surjectivity_horizon == 1);
}

TEST_CASE("code parse errors") {
  const LabeledGraph g = corpus_graph("full2");
  CHECK(code_error("code memory 0 anticipation 0\nmap 0 0\n", g, g).find("not mapped") != std::string::npos);
  CHECK(code_error("code memory 0 anticipation 0\nmap 0 0\nmap 1 1\nmap 01 0\n", g, g).starts_with("line 4:"));
  CHECK(code_error("map 0 0\n", g, g).starts_with("line 1:"));
  CHECK(code_error("code memory 0 anticipation 0\nmap 0 0\nmap 1 2\n", g, g).starts_with("line 3:"));
  CHECK(code_error("code memory x anticipation 0\n", g, g).starts_with("line 1:"));
  CHECK(code_error("code memory 0 anticipation 0\nmap 0 0\nmap 1 1\n", g, g).empty());
}

TEST_CASE("code text round-trips") {
  for (const auto& name : kMaps) {
    const FactorMap f = corpus_map(name);
    const BlockCode again = parse_code(format_code(f.code), f.domain, f.codomain);
    CHECK(again.window_map() == f.code.window_map());
    CHECK(again.memory() == f.code.memory());
    CHECK(again.anticipation() == f.code.anticipation());
  }
}
