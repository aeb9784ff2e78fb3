#include <string>
#include <vector>

#include "brute_force.hpp"
#include "doctest.h"
#include "shiftlab/covers.hpp"

using namespace shiftlab;

namespace {

const std::vector<std::string> kIrreducible = {"golden", "even", "even4", "full2", "full1",
                                               "golden3", "evenedge", "leftres_domain", "leftres_image"};

LabeledGraph corpus_graph(const std::string& name) { return load_graph(brute::corpus("graphs/" + name + ".graph")); }

bool same_words(const LabeledGraph& a, const LabeledGraph& b, std::size_t max_len) {
  for (std::size_t n = 0; n <= max_len; ++n)
    if (brute::path_blocks(a, n) != brute::path_blocks(b, n)) return false;
  return true;
}

}  // namespace

TEST_CASE("the redundant even presentation minimizes to two vertices") {
  const LabeledGraph g = corpus_graph("even4");
  CHECK(is_right_resolving(g));
  CHECK(follower_separation(g).size() == 2);
  const LabeledGraph f = fischer_cover(g);
  CHECK(f.vertex_count() == 2);
  CHECK(canonical_form(f) == canonical_form(fischer_cover(corpus_graph("even"))));
}

TEST_CASE("Fischer covers present the same language and are idempotent") {
  for (const auto& name : kIrreducible) {
    CAPTURE(name);
    const LabeledGraph g = corpus_graph(name);
    const LabeledGraph f = fischer_cover(g);
    CHECK(is_right_resolving(f));
    CHECK(is_irreducible(f));
    CHECK(same_words(f, g, 7));
    CHECK(canonical_form(fischer_cover(f)) == canonical_form(f));
    // Follower-separated: no two vertices merge.
    CHECK(follower_separation(f).size() == f.vertex_count());
  }
}

TEST_CASE("known Fischer cover sizes") {
  CHECK(fischer_cover(corpus_graph("golden")).vertex_count() == 2);
  CHECK(fischer_cover(corpus_graph("golden3")).vertex_count() == 2);
  CHECK(fischer_cover(corpus_graph("full2")).vertex_count() == 1);
  CHECK(fischer_cover(corpus_graph("leftres_image")).vertex_count() == 2);
}

TEST_CASE("canonical forms separate distinct shifts") {
  CHECK(same_irreducible_shift(corpus_graph("golden"), corpus_graph("golden3")));
  CHECK_FALSE(same_irreducible_shift(corpus_graph("golden"), corpus_graph("even")));
  CHECK_FALSE(same_irreducible_shift(corpus_graph("full2"), corpus_graph("even")));
}

TEST_CASE("language containment agrees with bounded enumeration") {
  for (const auto& a : kIrreducible)
    for (const auto& b : kIrreducible) {
      const LabeledGraph ga = corpus_graph(a), gb = corpus_graph(b);
      if (!(ga.alphabet() == gb.alphabet())) continue;
      CAPTURE(a);
      CAPTURE(b);
      bool bounded = true;
      for (std::size_t n = 1; n <= 8 && bounded; ++n) {
        const auto wb = brute::path_blocks(gb, n);
        for (const Block& w : brute::path_blocks(ga, n)) bounded = bounded && wb.count(w) > 0;
      }
      // The corpus presentations have few vertices, so length 8 suffices
      // for a counterexample whenever one exists.
      CHECK(language_contained(ga, gb) == bounded);
    }
}

TEST_CASE("synchronizing verdicts match the definitional check") {
  for (const std::string name : {"golden", "even", "golden3", "leftres_image", "even4"}) {
    CAPTURE(name);
    const LabeledGraph g = corpus_graph(name);
    for (const Block& v : brute::all_blocks(g, 3)) {
      if (v.empty()) continue;
      const auto violation = brute::sync_violation(g, v, 5);
      const SyncVerdict verdict = is_synchronizing(g, v, 8);
      CHECK((verdict.status == SyncVerdict::Status::synchronizing) == !violation.has_value());
      if (verdict.witness) {
        const auto& [u, w] = *verdict.witness;
        CHECK(brute::admissible(g, brute::concat(u, v)));
        CHECK(brute::admissible(g, brute::concat(v, w)));
        CHECK_FALSE(brute::admissible(g, brute::concat(brute::concat(u, v), w)));
      }
    }
  }
}

TEST_CASE("least synchronizing words are the length-lexicographic first passing the definition") {
  for (const std::string name : {"golden", "even", "golden3", "full2", "leftres_image", "even4"}) {
    CAPTURE(name);
    const LabeledGraph g = corpus_graph(name);
    const auto found = find_synchronizing_word(g, 6);
    const auto expected = brute::least_sync_block(g, 6, 8);
    REQUIRE(found.has_value());
    REQUIRE(expected.has_value());
    CHECK(g.alphabet().format(*found) == g.alphabet().format(*expected));
    CHECK_FALSE(brute::sync_violation(g, *found, 8).has_value());
  }
}

TEST_CASE("the even shift: 1 synchronizes and 0 does not") {
  const LabeledGraph g = corpus_graph("even");
  CHECK(g.alphabet().format(*find_synchronizing_word(g, 4)) == "1");
  const SyncVerdict v = is_synchronizing(g, {0}, 8);
  CHECK(v.status == SyncVerdict::Status::not_synchronizing);
  REQUIRE(v.witness.has_value());
  CHECK(g.alphabet().format(v.witness->first) == "1");
  CHECK(g.alphabet().format(v.witness->second) == "1");
}

TEST_CASE("subset cover and determinization") {
  const LabeledGraph g = corpus_graph("golden3");
  const LabeledGraph s = subset_cover(g);
  CHECK(is_right_resolving(s));
  CHECK(same_words(s, g, 7));
  CHECK(is_right_resolving(corpus_graph("golden")));
  CHECK_FALSE(is_right_resolving(g));
}

TEST_CASE("half-synchronizing blocks on sofic oracles") {
  const ShiftOracle even = ShiftOracle::sofic(corpus_graph("even"));
  const HalfSyncVerdict one = is_half_synchronizing(even, {1}, 6);
  CHECK(one.status == HalfSyncVerdict::Status::holds_at_horizon);
  CHECK(one.exact);
  REQUIRE(one.transitive_ray_prefix.has_value());
  // The ray prefix ends in the block and carries its follower set.
  const Block& prefix = *one.transitive_ray_prefix;
  CHECK(prefix.back() == 1u);
  CHECK(oracle_follower_equal(even, prefix, {1}, 6));
  // Every block of length at most 3 appears in the prefix.
  for (const Block& b : brute::all_blocks(corpus_graph("even"), 3)) {
    bool found = false;
    for (std::size_t i = 0; i + b.size() <= prefix.size() && !found; ++i)
      found = std::equal(b.begin(), b.end(), prefix.begin() + static_cast<std::ptrdiff_t>(i));
    CHECK(found);
  }
}
