#include <benchmark/benchmark.h>

#include <stdexcept>

#include "nihdl/analyze.hpp"
#include "nihdl/dsl.hpp"
#include "nihdl/io.hpp"
#include "nihdl/store.hpp"
#include "nihdl/validate.hpp"

namespace {

namespace fs = std::filesystem;

const fs::path kData = NIHDL_BENCH_DATA;

std::string fixture(const char* name) {
  auto text = nihdl::read_file(kData / name);
  if (!text) throw std::runtime_error("cannot read fixture");
  return *text;
}

std::vector<nihdl::MethodDescription> synthetic() {
  auto loaded = nihdl::load_all(nihdl::open_corpus(kData / "synthetic131"));
  std::vector<nihdl::MethodDescription> out;
  for (auto& doc : loaded.documents) {
    for (auto& m : doc.methods) out.push_back(std::move(m));
  }
  return out;
}

void BM_ParseDescription(benchmark::State& state) {
  const auto text = fixture("ex1_interpacket.nihd");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nihdl::parse_description(text, "ex1.nihd"));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDescription);

void BM_Serialize(benchmark::State& state) {
  const auto doc = *nihdl::parse_description(fixture("comparison.nihd"), "t.nihd").value;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nihdl::serialize(doc));
  }
}
BENCHMARK(BM_Serialize);

void BM_Validate(benchmark::State& state) {
  const auto doc = *nihdl::parse_description(fixture("ex2_dhcp.nihd"), "ex2.nihd").value;
  const auto catalog = nihdl::seed_catalog();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nihdl::validate_document(doc, catalog, nihdl::ValidationMode::Strict));
  }
}
BENCHMARK(BM_Validate);

void BM_CorpusStats(benchmark::State& state) {
  const auto methods = synthetic();
  const auto catalog = nihdl::seed_catalog();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nihdl::corpus_stats(methods, catalog));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * methods.size()));
}
BENCHMARK(BM_CorpusStats);

void BM_LoadCorpus(benchmark::State& state) {
  const auto corpus = nihdl::open_corpus(kData / "synthetic131");
  for (auto _ : state) {
    benchmark::DoNotOptimize(nihdl::load_all(corpus));
  }
}
BENCHMARK(BM_LoadCorpus);

}  // namespace

BENCHMARK_MAIN();
