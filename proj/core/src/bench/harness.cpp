// SPDX-License-Identifier: Apache-2.0
#include "iotrng/bench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "iotrng/error.hpp"

namespace iotrng::bench {

namespace {

using Clock = std::chrono::steady_clock;

std::atomic<bool> g_running{false};

class ExclusiveRun {
 public:
  ExclusiveRun() {
    if (g_running.exchange(true)) throw Error(Errc::ConcurrentBenchmark, "another benchmark is already running");
  }
  ~ExclusiveRun() { g_running.store(false); }
  ExclusiveRun(const ExclusiveRun&) = delete;
  ExclusiveRun& operator=(const ExclusiveRun&) = delete;
};

// Keeps generated values observable so the loop is not optimized away.
volatile std::uint32_t g_sink;

}  // namespace

double clock_resolution_ns() {
  double best = 1e9;
  for (int i = 0; i < 200; ++i) {
    const auto t0 = Clock::now();
    auto t1 = Clock::now();
    while (t1 == t0) t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::nano>(t1 - t0).count());
  }
  return best;
}

BenchResult measure_throughput(Generator& generator, std::chrono::duration<double> duration) {
  if (!(duration.count() > 0.0)) throw Error(Errc::InvalidArgument, "benchmark duration must be positive");
  ExclusiveRun guard;
  for (std::size_t i = 0; i < kWarmupCalls; ++i) g_sink = generator.next_u32();

  constexpr std::uint64_t kBatch = 1024;
  std::uint64_t words = 0;
  std::uint32_t acc = 0;
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(duration);
  auto now = start;
  // Per-word time of each batch, for the max and spread columns.
  std::uint64_t batches = 0;
  double batch_mean = 0.0, batch_m2 = 0.0, batch_max = 0.0;
  do {
    const auto batch_start = now;
    for (std::uint64_t i = 0; i < kBatch; ++i) acc ^= generator.next_u32();
    words += kBatch;
    now = Clock::now();
    const double per_word = std::chrono::duration<double, std::micro>(now - batch_start).count() / kBatch;
    ++batches;
    const double delta = per_word - batch_mean;
    batch_mean += delta / static_cast<double>(batches);
    batch_m2 += delta * (per_word - batch_mean);
    batch_max = std::max(batch_max, per_word);
  } while (now < deadline);
  g_sink = acc;

  BenchResult r;
  r.generator = std::string(generator.descriptor().name);
  r.mode = "throughput";
  r.duration_s = std::chrono::duration<double>(now - start).count();
  r.iterations = words;
  r.rate_kbps = 4.0 * static_cast<double>(words) / r.duration_s / 1000.0;
  r.mean_us = r.duration_s * 1e6 / static_cast<double>(words);
  r.max_us = std::max(batch_max, r.mean_us);
  r.stddev_us = batches > 1 ? std::sqrt(batch_m2 / static_cast<double>(batches - 1)) : 0.0;
  r.coarse_clock = clock_resolution_ns() > 100.0;
  return r;
}

BenchResult measure_latency(Generator& generator, std::size_t iterations, std::size_t warmup) {
  if (iterations < kMinLatencyIterations) {
    throw Error(Errc::InvalidArgument, "latency measurement needs at least 1000 iterations");
  }
  ExclusiveRun guard;
  for (std::size_t i = 0; i < warmup; ++i) g_sink = generator.next_u32();

  std::vector<double> samples(iterations);
  const auto start = Clock::now();
  for (std::size_t i = 0; i < iterations; ++i) {
    const auto t0 = Clock::now();
    g_sink = generator.next_u32();
    const auto t1 = Clock::now();
    samples[i] = std::chrono::duration<double, std::micro>(t1 - t0).count();
  }
  const auto end = Clock::now();

  BenchResult r;
  r.generator = std::string(generator.descriptor().name);
  r.mode = "latency";
  r.iterations = iterations;
  r.duration_s = std::chrono::duration<double>(end - start).count();
  double sum = 0.0;
  for (const double s : samples) sum += s;
  r.mean_us = sum / static_cast<double>(iterations);
  double ss = 0.0;
  for (const double s : samples) ss += (s - r.mean_us) * (s - r.mean_us);
  r.stddev_us = std::sqrt(ss / static_cast<double>(iterations - 1));
  r.max_us = *std::max_element(samples.begin(), samples.end());
  r.rate_kbps = 4.0 * static_cast<double>(iterations) / (sum * 1e-6) / 1000.0;
  r.coarse_clock = clock_resolution_ns() > 100.0;
  return r;
}

std::string to_table(const std::vector<BenchResult>& results) {
  std::string out;
  char line[200];
  std::snprintf(line, sizeof line, "%-18s %-10s %14s %10s %10s %10s %12s\n", "generator", "mode", "rate kB/s", "avg us",
                "stddev us", "max us", "iterations");
  out += line;
  for (const BenchResult& r : results) {
    std::snprintf(line, sizeof line, "%-18s %-10s %14.1f %10.4f %10.4f %10.4f %12llu%s\n", r.generator.c_str(),
                  r.mode.c_str(), r.rate_kbps, r.mean_us, r.stddev_us, r.max_us,
                  static_cast<unsigned long long>(r.iterations), r.coarse_clock ? "  (coarse clock)" : "");
    out += line;
  }
  return out;
}

std::string to_json(const std::vector<BenchResult>& results, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const BenchResult& r : results) {
    arr.push_back({{"generator", r.generator},
                   {"mode", r.mode},
                   {"rate_kbps", r.rate_kbps},
                   {"mean_us", r.mean_us},
                   {"stddev_us", r.stddev_us},
                   {"max_us", r.max_us},
                   {"iterations", r.iterations},
                   {"duration_s", r.duration_s},
                   {"coarse_clock", r.coarse_clock}});
  }
  return arr.dump(indent);
}

}  // namespace iotrng::bench
