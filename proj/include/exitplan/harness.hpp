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

#ifndef EXITPLAN_HARNESS_HPP_
#define EXITPLAN_HARNESS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "exitplan/controller.hpp"
#include "exitplan/cost_model.hpp"
#include "exitplan/planner.hpp"
#include "exitplan/report.hpp"

namespace exitplan
{

/// Loads every trace file under dir (deterministic lexicographic order) and
/// rejects empty or layer-heterogeneous datasets.
std::vector<ScenarioTrace> load_dataset(const std::filesystem::path & dir);

/// Runs the policy over every trace, in order, and assembles per-scenario
/// rows, aggregates, and the exit histogram. Deterministic given its inputs.
Report evaluate_traces(
  const std::vector<ScenarioTrace> & traces, const ExitPolicy & policy, const CostModel & model,
  const std::string & label = "", const std::string & digest = "");

/// evaluate_traces over a dataset directory; the report's dataset digest is
/// the content hash of the trace files.
Report evaluate_dataset(
  const std::filesystem::path & dir, const ExitPolicy & policy, const CostModel & model,
  const std::string & label = "");

struct LabeledPolicy
{
  std::string label;
  ExitPolicy policy;
};

/// One report per policy over the identical dataset.
std::vector<Report> compare_policies(
  const std::vector<ScenarioTrace> & traces, const std::vector<LabeledPolicy> & policies,
  const CostModel & model, const std::string & digest = "");

std::vector<Report> compare_policies(
  const std::filesystem::path & dir, const std::vector<LabeledPolicy> & policies,
  const CostModel & model);

/// The standard ablation lineup evaluated side by side:
///
///   full : multi-hop from start_layer at delta
///   B1   : fixed exit depth (cannot adapt to scene difficulty)
///   B2   : full scan from layer 1
///   B3   : full scan from start_layer (multi-hop disabled)
///   B4   : multi-hop at 2 * delta (loose threshold)
///   B5   : multi-hop at delta / 2 (strict threshold)
std::vector<LabeledPolicy> standard_ablation_set(
  double delta_m = 1.0, int start_layer = kDefaultStartLayer, int fixed_depth = 24,
  ExitMetric metric = {});

/// Fixed-width side-by-side table over compare_policies() output.
std::string ablation_table(const std::vector<Report> & reports);

}  // namespace exitplan

#endif  // EXITPLAN_HARNESS_HPP_
