#include "shiftlab/kernels.hpp"

#include <algorithm>

namespace shiftlab::kernels {

namespace {

void collect_words(const SubsetAutomaton& automaton, std::int32_t state, std::size_t remaining,
                   std::size_t alphabet_size, Block& prefix, std::vector<Block>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  const auto& row = automaton.transitions[static_cast<std::size_t>(state)];
  for (std::size_t a = 0; a < alphabet_size; ++a) {
    const std::int32_t next = row[a];
    if (next < 0) continue;
    prefix.push_back(static_cast<Symbol>(a));
    collect_words(automaton, next, remaining - 1, alphabet_size, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Block> enumerate_words_serial(const SubsetAutomaton& automaton, std::int32_t start,
                                          std::size_t n, std::size_t alphabet_size) {
  std::vector<Block> out;
  if (start < 0) return out;
  Block prefix;
  collect_words(automaton, start, n, alphabet_size, prefix, out);
  return out;
}

std::vector<Block> enumerate_words(const SubsetAutomaton& automaton, std::int32_t start,
                                   std::size_t n, std::size_t alphabet_size) {
  if (start < 0) return {};
  // Split on prefixes of length `depth`, enumerate each subtree
  // independently, then concatenate in prefix order (which is lex order).
  const std::size_t depth = std::min<std::size_t>(n, 3);
  std::vector<Block> prefixes = enumerate_words_serial(automaton, start, depth, alphabet_size);
  if (depth == n) return prefixes;

  std::vector<std::vector<Block>> parts(prefixes.size());
  const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    auto& prefix = prefixes[static_cast<std::size_t>(i)];
    const std::int32_t state = automaton.run(start, prefix);
    collect_words(automaton, state, n - depth, alphabet_size, prefix,
                  parts[static_cast<std::size_t>(i)]);
  }

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<Block> out;
  out.reserve(total);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::optional<std::pair<std::size_t, std::uint64_t>> argmin_serial(
    std::size_t count, const std::function<std::optional<std::uint64_t>(std::size_t)>& score) {
  std::optional<std::pair<std::size_t, std::uint64_t>> best;
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = score(i);
    if (s && (!best || *s < best->second)) best = std::make_pair(i, *s);
  }
  return best;
}

std::optional<std::pair<std::size_t, std::uint64_t>> argmin(
    std::size_t count, const std::function<std::optional<std::uint64_t>(std::size_t)>& score) {
  std::vector<std::optional<std::uint64_t>> scores(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) scores[static_cast<std::size_t>(i)] = score(static_cast<std::size_t>(i));

  std::optional<std::pair<std::size_t, std::uint64_t>> best;
  for (std::size_t i = 0; i < count; ++i) {
    if (scores[i] && (!best || *scores[i] < best->second)) best = std::make_pair(i, *scores[i]);
  }
  return best;
}

}  // namespace shiftlab::kernels
