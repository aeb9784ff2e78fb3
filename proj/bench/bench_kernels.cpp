#include <benchmark/benchmark.h>

#include <string>

#include "shiftlab/analysis.hpp"
#include "shiftlab/kernels.hpp"

using namespace shiftlab;

namespace {

const std::string kCorpus = SHIFTLAB_CORPUS_DIR;

FactorMap corpus_map(const std::string& name) { return load_factor_map(kCorpus + "/maps/" + name + ".code"); }

template <bool Parallel>
void enumerate_words(benchmark::State& state) {
  const LabeledGraph g = load_graph(kCorpus + "/graphs/golden.graph");
  const SubsetAutomaton a = determinize(g);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto words = Parallel ? kernels::enumerate_words(a, 0, n, 2) : kernels::enumerate_words_serial(a, 0, n, 2);
    benchmark::DoNotOptimize(words);
  }
}

template <bool Parallel>
void degree_xor(benchmark::State& state) {
  const FactorMap f = corpus_map("xor");
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? degree(f, bound) : degree_serial(f, bound));
}

template <bool Parallel>
void decoder_absent(benchmark::State& state) {
  const FactorMap f = corpus_map("xor");
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? find_decoder_block(f, len, 4) : find_decoder_block_serial(f, len, 4));
}

template <bool Parallel>
void hyperbolic_leftres(benchmark::State& state) {
  const FactorMap f = corpus_map("leftres");
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? find_hyperbolic_certificate(f, 9, 4, 10)
                                      : find_hyperbolic_certificate_serial(f, 9, 4, 10));
}

}  // namespace

BENCHMARK(enumerate_words<true>)->Arg(16)->Arg(22);
BENCHMARK(enumerate_words<false>)->Arg(16)->Arg(22);
BENCHMARK(degree_xor<true>)->Arg(4)->Arg(8);
BENCHMARK(degree_xor<false>)->Arg(4)->Arg(8);
BENCHMARK(decoder_absent<true>)->Arg(6)->Arg(8);
BENCHMARK(decoder_absent<false>)->Arg(6)->Arg(8);
BENCHMARK(hyperbolic_leftres<true>);
BENCHMARK(hyperbolic_leftres<false>);

BENCHMARK_MAIN();
