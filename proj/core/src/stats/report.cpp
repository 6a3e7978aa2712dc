// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstdio>
#include <json.hpp>
#include <numeric>

#include "iotrng/stats/suite.hpp"

namespace iotrng::stats {

namespace {

using nlohmann::ordered_json;

ordered_json summary(const StatisticResult& s) {
  ordered_json j;
  j["count"] = s.p_values.size();
  if (!s.p_values.empty()) {
    const auto [lo, hi] = std::minmax_element(s.p_values.begin(), s.p_values.end());
    j["min"] = *lo;
    j["max"] = *hi;
    j["mean"] = std::accumulate(s.p_values.begin(), s.p_values.end(), 0.0) / static_cast<double>(s.p_values.size());
  }
  j["histogram"] = s.second_order.histogram;
  return j;
}

}  // namespace

std::string report_to_json(const TestReport& report, bool include_p_values, int indent) {
  ordered_json root;
  root["generator"] = report.generator;
  const SuiteConfig& c = report.config;
  root["config"] = {
      {"sequence_bits", c.sequence_bits},
      {"sequences", c.sequences},
      {"alpha", c.second_order.alpha},
      {"alpha2", c.second_order.alpha2},
      {"bins", c.second_order.bins},
      {"block_frequency_m", c.params.block_frequency_m},
      {"template_m", c.params.template_m},
      {"overlapping_m", c.params.overlapping_m},
      {"approximate_entropy_m", c.params.approximate_entropy_m},
      {"serial_m", c.params.serial_m},
      {"linear_complexity_m", c.params.linear_complexity_m},
      {"multi_statistic_level", c.multi_statistic_level},
  };
  ordered_json tests = ordered_json::array();
  for (const TestResult& t : report.tests) {
    ordered_json jt;
    jt["name"] = t.name;
    jt["verdict"] = verdict_name(t.verdict);
    jt["not_applicable"] = t.not_applicable;
    jt["failed_statistics"] = t.failed_statistics;
    jt["allowed_failures"] = t.allowed_failures;
    ordered_json stats = ordered_json::array();
    for (const StatisticResult& s : t.statistics) {
      ordered_json js;
      js["label"] = s.label;
      js["p_values_summary"] = summary(s);
      js["proportion"] = s.second_order.proportion;
      js["passed"] = s.second_order.passed;
      js["threshold"] = s.second_order.threshold;
      js["p2"] = s.second_order.p2;
      js["verdict"] = s.second_order.pass ? "pass" : "fail";
      if (include_p_values) js["p_values"] = s.p_values;
      stats.push_back(std::move(js));
    }
    jt["statistics"] = std::move(stats);
    tests.push_back(std::move(jt));
  }
  root["tests"] = std::move(tests);
  root["suite_verdict"] = report.pass ? "pass" : "fail";
  return root.dump(indent);
}

std::string report_to_table(const TestReport& report) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-24s %6s %10s %12s %8s  %s\n", "test", "stats", "failed", "min pass", "min p2",
                "verdict");
  out += line;
  for (const TestResult& t : report.tests) {
    std::size_t min_pass = SIZE_MAX, seqs = 0;
    double min_p2 = 1.0;
    for (const StatisticResult& s : t.statistics) {
      if (s.second_order.passed < min_pass) {
        min_pass = s.second_order.passed;
        seqs = s.second_order.sequences;
      }
      min_p2 = std::min(min_p2, s.second_order.p2);
    }
    char pass_col[32];
    std::snprintf(pass_col, sizeof pass_col, "%zu/%zu", min_pass == SIZE_MAX ? 0 : min_pass, seqs);
    char failed_col[32];
    std::snprintf(failed_col, sizeof failed_col, "%zu (<=%zu)", t.failed_statistics, t.allowed_failures);
    std::snprintf(line, sizeof line, "%-24s %6zu %10s %12s %8.6f  %s\n", t.name.c_str(), t.statistics.size(), failed_col,
                  pass_col, min_p2, std::string(verdict_name(t.verdict)).c_str());
    out += line;
  }
  out += std::string("suite: ") + (report.pass ? "pass" : "fail") + " (" + std::to_string(report.count(Verdict::Pass)) +
         "/" + std::to_string(report.tests.size()) + " tests pass)\n";
  return out;
}

}  // namespace iotrng::stats
