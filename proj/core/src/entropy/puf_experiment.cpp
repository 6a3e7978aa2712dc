// SPDX-License-Identifier: Apache-2.0
#include "iotrng/entropy/puf_experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <limits>

#include "iotrng/entropy/dek_hash.hpp"
#include "iotrng/entropy/metrics.hpp"
#include "iotrng/error.hpp"
#include "iotrng/stats/ks.hpp"

namespace iotrng::entropy {

PufExperimentReport run_puf_experiment(const PufExperimentConfig& config) {
  if (config.devices == 0) throw Error(Errc::InvalidArgument, "at least one device is required");
  if (config.reads < 2) throw Error(Errc::TooFewSamples, "at least two reads per device are required");
  if (config.seed_boots < 8) throw Error(Errc::TooFewSamples, "at least eight seed boots per device are required");

  PufExperimentReport report;
  report.config = config;
  std::vector<std::size_t> lengths;
  for (const std::size_t l : config.seed_lengths) {
    if (l >= 1 && l <= config.size_bytes) lengths.push_back(l);
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  std::vector<Bytes> first_reads;
  std::vector<std::vector<std::uint32_t>> full_seeds;
  // entropy_by_length[l][device]
  std::vector<std::vector<double>> entropy_by_length(lengths.size());

  for (std::size_t d = 0; d < config.devices; ++d) {
    PufDevice device(static_cast<std::uint32_t>(d), config.size_bytes, config.sim_seed, config.params);
    PufDeviceReport dr;
    dr.id = device.id();

    std::vector<Bytes> reads;
    reads.reserve(config.reads);
    for (std::size_t r = 0; r < config.reads; ++r) {
      device.power_off();
      reads.push_back(device.power_up_read());
    }
    for (const Bytes& r : reads) dr.weight += hamming_weight(r);
    dr.weight /= static_cast<double>(reads.size());
    const MinEntropy me = min_entropy_per_bit(reads);
    dr.min_entropy_relative = me.relative;
    dr.min_entropy_bits = me.total_bits;
    for (std::size_t r = 1; r < reads.size(); ++r) dr.intra_distance += hamming_distance(reads[r - 1], reads[r]);
    dr.intra_distance /= static_cast<double>(reads.size() - 1);
    first_reads.push_back(reads.front());

    // Cold boots: seed_L = dek(first L bytes, L), the seeder's cold-boot rule
    // applied to a read of L bytes.
    std::vector<std::vector<std::uint32_t>> seeds(lengths.size());
    for (auto& s : seeds) s.reserve(config.seed_boots);
    for (std::size_t b = 0; b < config.seed_boots; ++b) {
      device.power_off();
      const Bytes read = device.power_up_read();
      for (std::size_t li = 0; li < lengths.size(); ++li) {
        seeds[li].push_back(dek_hash(ByteView(read).first(lengths[li]), static_cast<std::uint32_t>(lengths[li])));
      }
    }
    for (std::size_t li = 0; li < lengths.size(); ++li) {
      entropy_by_length[li].push_back(min_entropy_per_bit(seeds[li]).total_bits);
    }
    const std::vector<std::uint32_t>& full = seeds.back();
    dr.seed_min_entropy_bits = entropy_by_length.back().back();
    std::vector<double> dist;
    dist.reserve(full.size() - 1);
    for (std::size_t i = 1; i < full.size(); ++i) dist.push_back(hamming_distance(full[i - 1], full[i]));
    for (const double x : dist) dr.seed_distance_mean += x;
    dr.seed_distance_mean /= static_cast<double>(dist.size());
    const stats::KsResult ks = stats::ks_test_normal(dist, 1.0 / 32.0);
    dr.seed_ks_d = ks.d;
    dr.seed_ks_p = ks.p;
    full_seeds.push_back(full);
    report.devices.push_back(dr);
  }

  const std::size_t nd = config.devices;
  report.inter_distance.assign(nd, std::vector<double>(nd, 0.0));
  double sum = 0.0;
  std::size_t pairs = 0;
  report.inter_distance_min = std::numeric_limits<double>::infinity();
  report.inter_distance_max = -std::numeric_limits<double>::infinity();
  double seed_sum = 0.0;
  std::size_t seed_pairs = 0;
  for (std::size_t a = 0; a < nd; ++a) {
    for (std::size_t b = a + 1; b < nd; ++b) {
      const double dab = hamming_distance(first_reads[a], first_reads[b]);
      report.inter_distance[a][b] = report.inter_distance[b][a] = dab;
      report.inter_distance_min = std::min(report.inter_distance_min, dab);
      report.inter_distance_max = std::max(report.inter_distance_max, dab);
      sum += dab;
      ++pairs;
      for (std::size_t i = 0; i < config.seed_boots; ++i) {
        seed_sum += hamming_distance(full_seeds[a][i], full_seeds[b][i]);
        ++seed_pairs;
      }
    }
  }
  if (pairs == 0) {
    report.inter_distance_min = report.inter_distance_max = 0.0;
  } else {
    report.inter_distance_mean = sum / static_cast<double>(pairs);
    report.seed_inter_distance_mean = seed_sum / static_cast<double>(seed_pairs);
  }

  for (std::size_t li = 0; li < lengths.size(); ++li) {
    const auto& v = entropy_by_length[li];
    SeedEntropyPoint p;
    p.length_bytes = lengths[li];
    p.min_bits = *std::min_element(v.begin(), v.end());
    p.max_bits = *std::max_element(v.begin(), v.end());
    for (const double x : v) p.mean_bits += x;
    p.mean_bits /= static_cast<double>(v.size());
    report.seed_entropy.push_back(p);
  }
  return report;
}

std::string to_table(const PufExperimentReport& report) {
  std::string out;
  char line[200];
  std::snprintf(line, sizeof line, "%-6s %8s %10s %10s %10s %12s %10s %8s\n", "device", "weight", "H_min %", "H_min bits",
                "intra", "seed H bits", "seed dist", "KS p");
  out += line;
  for (const PufDeviceReport& d : report.devices) {
    std::snprintf(line, sizeof line, "%-6u %8.4f %10.3f %10.1f %10.4f %12.2f %10.4f %8.4f\n", d.id, d.weight,
                  100.0 * d.min_entropy_relative, d.min_entropy_bits, d.intra_distance, d.seed_min_entropy_bits,
                  d.seed_distance_mean, d.seed_ks_p);
    out += line;
  }
  out += "\ninter-device distance (first reads)\n";
  for (const auto& row : report.inter_distance) {
    for (const double v : row) {
      std::snprintf(line, sizeof line, " %7.4f", v);
      out += line;
    }
    out += "\n";
  }
  std::snprintf(line, sizeof line, "min %.4f  max %.4f  mean %.4f  seed mean %.4f\n", report.inter_distance_min,
                report.inter_distance_max, report.inter_distance_mean, report.seed_inter_distance_mean);
  out += line;
  out += "\nseed min-entropy by read length\n";
  for (const SeedEntropyPoint& p : report.seed_entropy) {
    std::snprintf(line, sizeof line, "%6zu B  mean %6.2f  min %6.2f  max %6.2f bits\n", p.length_bytes, p.mean_bits,
                  p.min_bits, p.max_bits);
    out += line;
  }
  return out;
}

std::string to_json(const PufExperimentReport& report, int indent) {
  using nlohmann::ordered_json;
  ordered_json root;
  const PufExperimentConfig& c = report.config;
  root["config"] = {{"devices", c.devices},
                    {"reads", c.reads},
                    {"size_bytes", c.size_bytes},
                    {"seed_boots", c.seed_boots},
                    {"sim_seed", c.sim_seed},
                    {"modes", c.params.modes},
                    {"weights", c.params.weights},
                    {"sigma_noise", c.params.sigma_noise}};
  ordered_json devices = ordered_json::array();
  for (const PufDeviceReport& d : report.devices) {
    devices.push_back({{"id", d.id},
                       {"weight", d.weight},
                       {"min_entropy_relative", d.min_entropy_relative},
                       {"min_entropy_bits", d.min_entropy_bits},
                       {"intra_distance", d.intra_distance},
                       {"seed_min_entropy_bits", d.seed_min_entropy_bits},
                       {"seed_distance_mean", d.seed_distance_mean},
                       {"seed_ks_d", d.seed_ks_d},
                       {"seed_ks_p", d.seed_ks_p}});
  }
  root["devices"] = std::move(devices);
  root["inter_distance"] = {{"matrix", report.inter_distance},
                            {"min", report.inter_distance_min},
                            {"max", report.inter_distance_max},
                            {"mean", report.inter_distance_mean},
                            {"seed_mean", report.seed_inter_distance_mean}};
  ordered_json curve = ordered_json::array();
  for (const SeedEntropyPoint& p : report.seed_entropy) {
    curve.push_back({{"length_bytes", p.length_bytes}, {"mean_bits", p.mean_bits}, {"min_bits", p.min_bits}, {"max_bits", p.max_bits}});
  }
  root["seed_entropy"] = std::move(curve);
  return root.dump(indent);
}

}  // namespace iotrng::entropy
