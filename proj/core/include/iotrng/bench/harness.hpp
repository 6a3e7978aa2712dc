// SPDX-License-Identifier: Apache-2.0
//
// Throughput counts 32-bit values produced in a fixed interval; latency
// timestamps individual calls. Only one measurement may run per process at a
// time.
#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "iotrng/registry.hpp"

namespace iotrng::bench {

struct BenchResult {
  std::string generator;
  std::string mode;  // "throughput" or "latency"
  double rate_kbps = 0.0;  // 1 kB = 1000 bytes
  /// Per 32-bit word. Throughput runs take stddev and max over 1024-call
  /// batches; latency runs over single calls.
  double mean_us = 0.0;
  double stddev_us = 0.0;
  double max_us = 0.0;
  std::uint64_t iterations = 0;
  double duration_s = 0.0;
  /// Set when the clock cannot resolve 100 ns.
  bool coarse_clock = false;
};

inline constexpr std::size_t kWarmupCalls = 100'000;
inline constexpr std::size_t kMinLatencyIterations = 1000;

/// Throws InvalidArgument for a non-positive duration and ConcurrentBenchmark
/// if another measurement is running.
BenchResult measure_throughput(Generator& generator, std::chrono::duration<double> duration);
/// Throws InvalidArgument below 1000 iterations.
BenchResult measure_latency(Generator& generator, std::size_t iterations, std::size_t warmup = kWarmupCalls);

/// Smallest observable steady_clock increment, in nanoseconds.
double clock_resolution_ns();

std::string to_table(const std::vector<BenchResult>& results);
std::string to_json(const std::vector<BenchResult>& results, int indent = 2);

}  // namespace iotrng::bench
