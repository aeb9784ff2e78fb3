// Independent reference computations for the tests. Everything here works
// by direct enumeration of paths, blocks and concatenations and shares no
// code with the library algorithms it is used to check (only the value
// types and apply_block).

#ifndef SHIFTLAB_TESTS_BRUTE_FORCE_HPP
#define SHIFTLAB_TESTS_BRUTE_FORCE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shiftlab/codes.hpp"
#include "shiftlab/core.hpp"

#ifndef SHIFTLAB_CORPUS_DIR
#define SHIFTLAB_CORPUS_DIR "corpus"
#endif

namespace brute {

using shiftlab::Block;
using shiftlab::LabeledGraph;
using shiftlab::Symbol;

inline std::string corpus(const std::string& rel) { return std::string(SHIFTLAB_CORPUS_DIR) + "/" + rel; }

/// Label sequences of all paths with n edges, by depth-first search over
/// every starting vertex.
inline std::set<Block> path_blocks(const LabeledGraph& g, std::size_t n) {
  std::set<Block> out;
  Block word;
  std::function<void(shiftlab::VertexId)> walk = [&](shiftlab::VertexId v) {
    if (word.size() == n) {
      out.insert(word);
      return;
    }
    for (const auto& e : g.edges()) {
      if (e.source != v) continue;
      word.push_back(e.label);
      walk(e.target);
      word.pop_back();
    }
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) walk(static_cast<shiftlab::VertexId>(v));
  return out;
}

/// Every admissible block of length 0..max_len, length-lexicographic.
inline std::vector<Block> all_blocks(const LabeledGraph& g, std::size_t max_len) {
  std::vector<Block> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    const auto s = path_blocks(g, n);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

/// Membership by path search.
inline bool admissible(const LabeledGraph& g, const Block& w) { return path_blocks(g, w.size()).count(w) > 0; }

inline Block concat(const Block& a, const Block& b) {
  Block out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

/// v is synchronizing iff uv, vw admissible imply uvw admissible, tested for
/// all |u|, |w| <= bound. Returns a violating (u, w) or nothing.
inline std::optional<std::pair<Block, Block>> sync_violation(const LabeledGraph& g, const Block& v,
                                                             std::size_t bound) {
  std::vector<std::set<Block>> lang;
  for (std::size_t n = 0; n <= 2 * bound + v.size(); ++n) lang.push_back(path_blocks(g, n));
  auto in = [&](const Block& b) { return lang[b.size()].count(b) > 0; };
  const auto contexts = all_blocks(g, bound);
  for (const Block& u : contexts) {
    if (!in(concat(u, v))) continue;
    for (const Block& w : contexts)
      if (in(concat(v, w)) && !in(concat(concat(u, v), w))) return std::make_pair(u, w);
  }
  return std::nullopt;
}

/// Length-lexicographically least block passing sync_violation.
inline std::optional<Block> least_sync_block(const LabeledGraph& g, std::size_t max_len, std::size_t bound) {
  for (std::size_t n = 1; n <= max_len; ++n)
    for (const Block& v : path_blocks(g, n))
      if (!sync_violation(g, v, bound)) return v;
  return std::nullopt;
}

/// Factors of length n of free concatenations of the generators.
inline std::set<Block> coded_factors(const std::vector<Block>& generators, std::size_t n) {
  std::size_t longest = 0;
  for (const auto& g : generators) longest = std::max(longest, g.size());
  const std::size_t total = n + 2 * longest;
  std::set<Block> out;
  std::function<void(const Block&)> grow = [&](const Block& s) {
    if (s.size() >= total) {
      for (std::size_t i = 0; i + n <= s.size(); ++i)
        out.insert(Block(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i + n)));
      return;
    }
    for (const auto& g : generators) grow(concat(s, g));
  };
  grow({});
  return out;
}

/// Domain blocks of length |image| + memory + anticipation grouped by
/// their image.
inline std::map<Block, std::vector<Block>> preimages(const shiftlab::FactorMap& f, std::size_t image_len) {
  std::map<Block, std::vector<Block>> out;
  const std::size_t len = image_len + f.code.memory() + f.code.anticipation();
  for (const Block& b : path_blocks(f.domain, len)) out[shiftlab::apply_block(f.code, b)].push_back(b);
  return out;
}

/// min over image blocks of length <= max_len and coordinates of the number
/// of distinct domain symbols seen at that coordinate by preimage blocks.
inline std::size_t min_preimage_symbols(const shiftlab::FactorMap& f, std::size_t max_len) {
  std::size_t best = SIZE_MAX;
  const std::size_t m = f.code.memory();
  for (std::size_t n = 1; n <= max_len; ++n)
    for (const auto& [img, pre] : preimages(f, n))
      for (std::size_t i = 0; i < n; ++i) {
        std::set<Symbol> seen;
        for (const auto& b : pre) seen.insert(b[i + m]);
        best = std::min(best, seen.size());
      }
  return best;
}

/// Names of the recoded 1-block symbols along coordinates [from, to] of a
/// domain block whose index 0 is coordinate `origin_coord`.
inline std::vector<std::string> recoded_names(const shiftlab::FactorMap& f, const Block& b, long origin_coord,
                                              long from, long to) {
  std::vector<std::string> out;
  const long m = static_cast<long>(f.code.memory());
  const long a = static_cast<long>(f.code.anticipation());
  for (long c = from; c <= to; ++c) {
    const long start = c - m - origin_coord;
    const Block window(b.begin() + start, b.begin() + start + m + a + 1);
    out.push_back(f.domain.alphabet().format(window));
  }
  return out;
}

/// Central windows [-k, k] (as recoded symbol names) of all domain blocks
/// whose image carries w at [-n, n] inside `context` extra image symbols on
/// each side, grouped by the full image block.
inline std::map<Block, std::set<std::vector<std::string>>> central_windows(const shiftlab::FactorMap& f,
                                                                           const Block& w, std::size_t k,
                                                                           std::size_t context) {
  const long n = static_cast<long>(w.size() / 2);
  const long e = static_cast<long>(context);
  std::map<Block, std::set<std::vector<std::string>>> out;
  for (const auto& [img, pre] : preimages(f, w.size() + 2 * context)) {
    if (!std::equal(w.begin(), w.end(), img.begin() + e)) continue;
    for (const Block& b : pre)
      out[img].insert(recoded_names(f, b, -n - e - static_cast<long>(f.code.memory()), -static_cast<long>(k),
                                    static_cast<long>(k)));
  }
  return out;
}

/// Checks uniqueness of extensions: for every w' of length |w| + p
/// (p <= max_p) beginning and ending with w, domain blocks with image w'
/// that agree on [-k, k] agree on [-k, k + p].
inline bool unique_extensions(const shiftlab::FactorMap& f, const Block& w, std::size_t k, std::size_t max_p) {
  const long n = static_cast<long>(w.size() / 2);
  for (std::size_t p = 0; p <= max_p; ++p) {
    for (const auto& [img, pre] : preimages(f, w.size() + p)) {
      if (!std::equal(w.begin(), w.end(), img.begin())) continue;
      if (!std::equal(w.begin(), w.end(), img.end() - static_cast<std::ptrdiff_t>(w.size()))) continue;
      std::map<std::vector<std::string>, std::vector<std::string>> ext;
      const long origin = -n - static_cast<long>(f.code.memory());
      for (const Block& b : pre) {
        auto center = recoded_names(f, b, origin, -static_cast<long>(k), static_cast<long>(k));
        auto longer = recoded_names(f, b, origin, -static_cast<long>(k), static_cast<long>(k + p));
        auto [it, fresh] = ext.emplace(center, longer);
        if (!fresh && it->second != longer) return false;
      }
    }
  }
  return true;
}

}  // namespace brute

#endif  // SHIFTLAB_TESTS_BRUTE_FORCE_HPP
