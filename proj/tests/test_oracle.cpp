#include <string>
#include <vector>

#include "brute_force.hpp"
#include "doctest.h"
#include "shiftlab/covers.hpp"
#include "shiftlab/oracle.hpp"

using namespace shiftlab;

namespace {

/// Dyck membership by reduction: cancel matched pairs until none remain;
/// the word is admissible iff only closers-then-openers are left and no
/// opener meets a closer of a different kind.
bool dyck_reduces(const Block& w) {
  Block stack;
  for (Symbol s : w) {
    const bool opener = s % 2 == 0;
    if (!opener && !stack.empty() && stack.back() % 2 == 0) {
      if (stack.back() + 1 != s) return false;
      stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  return true;
}

std::vector<Block> all_words(std::size_t alphabet, std::size_t n) {
  std::vector<Block> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Block> next;
    for (const Block& w : out)
      for (Symbol a = 0; a < alphabet; ++a) {
        Block x = w;
        x.push_back(a);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("dyck admissibility") {
  const ShiftOracle d = ShiftOracle::dyck({{"(", ")"}, {"[", "]"}});
  const Alphabet& a = d.alphabet();
  CHECK(a.names() == std::vector<std::string>{"(", ")", "[", "]"});
  CHECK_FALSE(d.admits(a.parse("(]")));
  CHECK(d.admits(a.parse(")(")));
  CHECK(d.admits(a.parse("([])")));
  CHECK_FALSE(d.admits(a.parse("([)]")));
  for (std::size_t n = 0; n <= 6; ++n)
    for (const Block& w : all_words(4, n)) CHECK(d.admits(w) == dyck_reduces(w));
}

TEST_CASE("dyck signatures determine followers") {
  const ShiftOracle d = ShiftOracle::dyck({{"(", ")"}, {"[", "]"}});
  std::vector<Block> words;
  for (std::size_t n = 0; n <= 4; ++n)
    for (Block& w : all_words(4, n))
      if (d.admits(w)) words.push_back(std::move(w));
  for (const Block& u : words)
    for (const Block& v : words)
      if (dyck_follower_signature(d, u) == dyck_follower_signature(d, v)) CHECK(oracle_follower_equal(d, u, v, 4));
  CHECK(dyck_follower_signature(d, d.alphabet().parse(")([")) == d.alphabet().parse("(["));
}

TEST_CASE("dyck: () is half-synchronizing") {
  const ShiftOracle d = ShiftOracle::dyck({{"(", ")"}, {"[", "]"}});
  for (std::size_t h = 2; h <= 6; ++h)
    CHECK(is_half_synchronizing(d, d.alphabet().parse("()"), h).status == HalfSyncVerdict::Status::holds_at_horizon);
}

TEST_CASE("coded systems match concatenation factors") {
  const Alphabet a({"0", "1"});
  const std::vector<std::vector<Block>> families = {
      {{1, 0}, {0}}, {{1, 0}}, {{1}, {0, 0}}, {{1, 1, 0}, {0}}, {{0, 1}, {1, 1, 0}}};
  for (const auto& gens : families) {
    const ShiftOracle o = ShiftOracle::code_list(a, gens, 10);
    for (std::size_t n = 0; n <= 7; ++n) {
      const auto factors = brute::coded_factors(gens, n);
      for (const Block& w : all_words(2, n)) {
        CAPTURE(a.format(w));
        CHECK(oracle_admissible(o, w) == (factors.count(w) > 0));
      }
    }
  }
}

TEST_CASE("coded system examples") {
  const Alphabet a({"0", "1"});
  const ShiftOracle golden = ShiftOracle::code_list(a, {{1, 0}, {0}}, 10);
  CHECK(oracle_admissible(golden, a.parse("100")));
  CHECK_FALSE(oracle_admissible(golden, a.parse("11")));
  const ShiftOracle periodic = ShiftOracle::code_list(a, {{1, 0}}, 10);
  CHECK_FALSE(oracle_admissible(periodic, a.parse("00")));
  CHECK_THROWS_AS(oracle_admissible(periodic, Block(11, 0)), Error);
}

TEST_CASE("sofic oracle follower equality against path sets") {
  const LabeledGraph g = load_graph(brute::corpus("graphs/even.graph"));
  const ShiftOracle o = ShiftOracle::sofic(g);
  const auto words = brute::all_blocks(g, 4);
  auto followers = [&](const Block& u, std::size_t h) {
    std::set<Block> out;
    for (const Block& t : brute::all_blocks(g, h))
      if (brute::admissible(g, brute::concat(u, t))) out.insert(t);
    return out;
  };
  for (const Block& u : words)
    for (const Block& v : words) CHECK(oracle_follower_equal(o, u, v, 3) == (followers(u, 3) == followers(v, 3)));
}

TEST_CASE("oracle files") {
  const ShiftOracle dyck = load_oracle(brute::corpus("oracles/dyck2.oracle"));
  CHECK(dyck.kind() == OracleKind::dyck);
  const ShiftOracle codes = load_oracle(brute::corpus("oracles/golden_codes.oracle"));
  CHECK(codes.kind() == OracleKind::code_list);
  CHECK(codes.generators().size() == 2);
  const ShiftOracle even = load_oracle(brute::corpus("oracles/even.oracle"));
  CHECK(even.kind() == OracleKind::sofic);
  CHECK(even.graph().vertex_count() == 2);
}
