// SPDX-License-Identifier: Apache-2.0
//
// One benchmark per generator: cost of a single 32-bit word, plus 4 KiB
// stream fills. The table-style harness lives in `iotrng bench`.
#include <benchmark/benchmark.h>

#include "iotrng/registry.hpp"

namespace {

std::unique_ptr<iotrng::Generator> open(std::string_view name) {
  const auto& desc = iotrng::find_descriptor(name);
  if (desc.klass == iotrng::GeneratorClass::CryptoSecure) {
    iotrng::Bytes seed(32);
    for (std::size_t i = 0; i < seed.size(); ++i) seed[i] = static_cast<std::uint8_t>(0xA5 ^ i);
    return iotrng::make_generator(name, iotrng::SeedMaterial::full_entropy(seed));
  }
  return iotrng::make_generator(name, 0x0123456789ABCDEFull);
}

void BM_NextWord(benchmark::State& state, std::string_view name) {
  auto g = open(name);
  for (auto _ : state) benchmark::DoNotOptimize(g->next_u32());
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 4);
}

void BM_Fill4K(benchmark::State& state, std::string_view name) {
  auto g = open(name);
  std::vector<std::uint8_t> buf(4096);
  for (auto _ : state) {
    g->fill_bytes(buf);
    benchmark::DoNotOptimize(buf.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 4096);
}

const int kRegistered = [] {
  for (std::string_view name : iotrng::generator_names()) {
    benchmark::RegisterBenchmark(("next_u32/" + std::string(name)).c_str(), BM_NextWord, name);
    benchmark::RegisterBenchmark(("fill_4k/" + std::string(name)).c_str(), BM_Fill4K, name);
  }
  return 0;
}();

}  // namespace

BENCHMARK_MAIN();
