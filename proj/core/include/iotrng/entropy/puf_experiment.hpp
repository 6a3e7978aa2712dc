// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iotrng/entropy/puf.hpp"

namespace iotrng::entropy {

struct PufExperimentConfig {
  std::size_t devices = 5;
  std::size_t reads = 50;
  std::size_t size_bytes = 1024;
  /// Cold boots per device for the seed statistics.
  std::size_t seed_boots = 1000;
  std::uint64_t sim_seed = 0x5EED0001;
  PufParams params;
  /// Read lengths (bytes) for the seed-entropy convergence curve; lengths
  /// above size_bytes are dropped.
  std::vector<std::size_t> seed_lengths{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
};

struct PufDeviceReport {
  std::uint32_t id = 0;
  double weight = 0.0;                // mean Hamming weight over reads
  double min_entropy_relative = 0.0;  // per-bit MCV over reads
  double min_entropy_bits = 0.0;
  double intra_distance = 0.0;        // mean distance of consecutive reads
  double seed_min_entropy_bits = 0.0; // 32-bit seeds at full read length
  double seed_distance_mean = 0.0;    // consecutive seeds
  double seed_ks_d = 0.0;
  double seed_ks_p = 0.0;
};

struct SeedEntropyPoint {
  std::size_t length_bytes = 0;
  double mean_bits = 0.0;
  double min_bits = 0.0;
  double max_bits = 0.0;
};

struct PufExperimentReport {
  PufExperimentConfig config;
  std::vector<PufDeviceReport> devices;
  /// Symmetric matrix of first-read distances between devices.
  std::vector<std::vector<double>> inter_distance;
  double inter_distance_min = 0.0;
  double inter_distance_max = 0.0;
  double inter_distance_mean = 0.0;
  /// Mean distance between seeds of different devices at equal boot index.
  double seed_inter_distance_mean = 0.0;
  std::vector<SeedEntropyPoint> seed_entropy;
};

PufExperimentReport run_puf_experiment(const PufExperimentConfig& config);

std::string to_table(const PufExperimentReport& report);
std::string to_json(const PufExperimentReport& report, int indent = 2);

}  // namespace iotrng::entropy
