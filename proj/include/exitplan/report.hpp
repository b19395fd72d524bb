// Copyright 2026 The exitplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXITPLAN_REPORT_HPP_
#define EXITPLAN_REPORT_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exitplan/controller.hpp"
#include "exitplan/cost_model.hpp"

namespace exitplan
{

/// Horizons (seconds) at which adopted-vs-reference displacement is reported;
/// horizons outside a trajectory's span are skipped.
inline const std::vector<double> kReportHorizonsS = {1.0, 2.0, 3.0};

/// One evaluated scenario.
struct ScenarioRow
{
  std::string scenario_id;
  int exit_layer = 0;
  int checks = 0;
  double exit_score_m = 0.0;
  bool exited_early = false;
  double latency_ms = 0.0;
  double sparsity_pct = 0.0;
  std::map<double, double> l2_at;      // horizon seconds -> meters
  std::optional<double> l2_avg;        // mean over the horizons present
};

/// Mean / percentile summaries of the per-scenario columns. Percentiles use
/// the nearest-rank definition on the sorted column.
struct AggregateSummary
{
  double mean_exit_layer = 0.0;
  double p50_exit_layer = 0.0;
  double p95_exit_layer = 0.0;
  double mean_checks = 0.0;
  double mean_exit_score_m = 0.0;
  double mean_latency_ms = 0.0;
  double p50_latency_ms = 0.0;
  double p95_latency_ms = 0.0;
  double mean_sparsity_pct = 0.0;
  double early_exit_rate = 0.0;  // fraction in [0, 1]
  std::map<double, double> mean_l2_at;
  std::optional<double> mean_l2_avg;
};

/// Machine-readable evaluation result for one policy over one dataset.
struct Report
{
  std::string label;
  ExitPolicy policy;
  CostModel cost_model;
  std::string dataset_digest;
  std::vector<ScenarioRow> per_scenario;
  AggregateSummary aggregate;
  std::map<int, int> exit_histogram;  // exit layer -> scenario count
};

/// Nearest-rank percentile of a column; pct in (0, 100].
double percentile(std::vector<double> values, double pct);

AggregateSummary aggregate_rows(const std::vector<ScenarioRow> & rows);

std::map<int, int> histogram_exit_layers(const std::vector<ScenarioRow> & rows);

/// "2s" for 2.0, "1.5s" for 1.5; used for horizon keys in serialized output.
std::string format_horizon(double horizon_s);

/// Deterministic JSON rendering: identical reports serialize byte-identically.
std::string report_to_json_text(const Report & report);
void write_report(const Report & report, const std::filesystem::path & path);

/// Flat tabular export, one row per scenario, for plotting.
std::string report_to_csv(const Report & report);
void write_report_csv(const Report & report, const std::filesystem::path & path);

/// One-line human-readable aggregate, printed by the CLI after a run.
std::string aggregate_summary_line(const Report & report);

}  // namespace exitplan

#endif  // EXITPLAN_REPORT_HPP_
