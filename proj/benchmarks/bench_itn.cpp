#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "itnkit/grammars_en.hpp"
#include "itnkit/ops.hpp"
#include "itnkit/pipeline.hpp"

namespace {

const itnkit::InverseNormalizer& pipeline() {
  static itnkit::InverseNormalizer itn =
      itnkit::InverseNormalizer::from_data_dir(
          itnkit::DataDir{ITNKIT_DATA_DIR});
  return itn;
}

void BM_GrammarBuild(benchmark::State& state) {
  itnkit::DataDir data{ITNKIT_DATA_DIR};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        itnkit::classify_final(data, itnkit::WeightPolicy::defaults()));
  }
}
BENCHMARK(BM_GrammarBuild)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const auto& itn = pipeline();
  std::string text = "it costs one hundred and twenty three dollars today";
  for (auto _ : state) {
    benchmark::DoNotOptimize(itn.classify(text));
  }
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

void BM_InverseNormalize(benchmark::State& state) {
  const auto& itn = pipeline();
  std::vector<std::string> inputs = {
      "twenty three",
      "two point o five",
      "the third of may",
      "nine hundred and ninety nine thousand volts",
  };
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(itn.inverse_normalize(inputs[i]));
    i = (i + 1) % inputs.size();
  }
}
BENCHMARK(BM_InverseNormalize)->Unit(benchmark::kMicrosecond);

void BM_ShortestPathLattice(benchmark::State& state) {
  const auto& itn = pipeline();
  itnkit::Fst lattice = itnkit::compose(
      itnkit::accept("one thousand nine hundred and eighty four miles"),
      itn.classify_fst());
  for (auto _ : state) {
    benchmark::DoNotOptimize(itnkit::shortest_path(lattice));
  }
}
BENCHMARK(BM_ShortestPathLattice)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
