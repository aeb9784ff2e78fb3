// kernels.hpp -- data-parallel inner loops
//
// Each kernel has an OpenMP implementation and a plain serial reference with
// the same signature (suffix _serial). Results are identical by contract:
// parallel scans collect per-candidate results and reduce in candidate order,
// so first-hit searches return the same hit either way. The serial versions
// are kept for tests and for the benchmark target.

#ifndef SHIFTLAB_KERNELS_HPP
#define SHIFTLAB_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "shiftlab/core.hpp"

namespace shiftlab::kernels {

/// All words of length n readable from `start` in a deterministic automaton,
/// in lexicographic order.
std::vector<Block> enumerate_words(const SubsetAutomaton& automaton, std::int32_t start,
                                   std::size_t n, std::size_t alphabet_size);
std::vector<Block> enumerate_words_serial(const SubsetAutomaton& automaton, std::int32_t start,
                                          std::size_t n, std::size_t alphabet_size);

/// Index of the first candidate for which `accept` returns a value, together
/// with that value. `accept` must be pure and thread-safe.
template <typename Result>
using CandidateTest = std::function<std::optional<Result>(std::size_t)>;

template <typename Result>
std::optional<std::pair<std::size_t, Result>> first_hit(std::size_t count,
                                                        const CandidateTest<Result>& accept);
template <typename Result>
std::optional<std::pair<std::size_t, Result>> first_hit_serial(std::size_t count,
                                                               const CandidateTest<Result>& accept);

/// Minimum of `score` over candidates (ties resolved toward the smaller
/// index); candidates scoring nullopt are skipped.
std::optional<std::pair<std::size_t, std::uint64_t>> argmin(
    std::size_t count, const std::function<std::optional<std::uint64_t>(std::size_t)>& score);
std::optional<std::pair<std::size_t, std::uint64_t>> argmin_serial(
    std::size_t count, const std::function<std::optional<std::uint64_t>(std::size_t)>& score);

// ---------------------------------------------------------------------------

template <typename Result>
std::optional<std::pair<std::size_t, Result>> first_hit_serial(std::size_t count,
                                                               const CandidateTest<Result>& accept) {
  for (std::size_t i = 0; i < count; ++i) {
    if (auto r = accept(i)) return std::make_pair(i, std::move(*r));
  }
  return std::nullopt;
}

template <typename Result>
std::optional<std::pair<std::size_t, Result>> first_hit(std::size_t count,
                                                        const CandidateTest<Result>& accept) {
  // Chunked so that a hit in an early chunk stops later chunks from being
  // scheduled; within a chunk every candidate is evaluated and the least
  // index wins.
  constexpr std::size_t chunk = 64;
  for (std::size_t begin = 0; begin < count; begin += chunk) {
    const std::size_t end = std::min(count, begin + chunk);
    std::vector<std::optional<Result>> results(end - begin);
    const auto n = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
      results[static_cast<std::size_t>(i)] = accept(begin + static_cast<std::size_t>(i));
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i]) return std::make_pair(begin + i, std::move(*results[i]));
    }
  }
  return std::nullopt;
}

}  // namespace shiftlab::kernels

#endif  // SHIFTLAB_KERNELS_HPP
