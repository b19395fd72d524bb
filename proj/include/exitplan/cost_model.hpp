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

#ifndef EXITPLAN_COST_MODEL_HPP_
#define EXITPLAN_COST_MODEL_HPP_

#include <filesystem>
#include <vector>

#include "exitplan/controller.hpp"

namespace exitplan
{

/// Analytic latency accounting for a layerwise planner with early-exit
/// instrumentation: a depth-independent pipeline cost, a cost per executed
/// decoder layer, and a per-check cost decomposed into metric evaluation,
/// intermediate feature extraction, and action-head projection.
///
/// Latency is computed from this model, never wall-clock measured: the
/// library has no neural backbone, so the model reproduces the accounting of
/// the instrumented system instead.
class CostModel
{
public:
  CostModel() = default;  // all-zero model

  CostModel(double fixed_ms, double per_layer_ms, double metric_ms, double feature_ms,
            double head_ms);

  double fixed_ms() const { return fixed_ms_; }
  double per_layer_ms() const { return per_layer_ms_; }
  double metric_ms() const { return metric_ms_; }
  double feature_ms() const { return feature_ms_; }
  double head_ms() const { return head_ms_; }

  /// Cost of one early-exit check; always the exact sum of its parts.
  double check_ms() const { return metric_ms_ + feature_ms_ + head_ms_; }

  /// Measured per-check decomposition (0.20 + 0.70 + 4.00 ms) plus fixed and
  /// per-layer costs fitted to two published end-to-end operating points:
  /// 381 ms at full 32-layer depth with no checks, 203 ms at depth 16 with
  /// one check.
  static CostModel calibrated_default();

  bool operator==(const CostModel &) const = default;

private:
  double fixed_ms_ = 0.0;
  double per_layer_ms_ = 0.0;
  double metric_ms_ = 0.0;
  double feature_ms_ = 0.0;
  double head_ms_ = 0.0;
};

/// End-to-end latency of one outcome:
///
///   fixed_ms + per_layer_ms * exit_layer + check_ms * |checked_layers|
///
/// A no-early-exit baseline outcome (exit at the final layer, zero checks)
/// reduces to fixed_ms + per_layer_ms * L.
double latency_ms(const ExitOutcome & outcome, const CostModel & model);

/// Percentage of decoder layers skipped: 100 * (L - exit_layer) / L.
double sparsity_pct(const ExitOutcome & outcome, int total_layers);

/// One measured end-to-end operating point used for calibration.
struct LatencyAnchor
{
  int layers_executed;
  int checks;
  double total_ms;
};

/// Least-squares fit of fixed_ms and per_layer_ms against anchors, with the
/// per-check decomposition supplied externally (it is measured, not fitted).
/// Exact when two consistent anchors are given. Requires at least two anchors
/// with distinct layers_executed.
CostModel fit_cost_model(
  const std::vector<LatencyAnchor> & anchors, double metric_ms, double feature_ms,
  double head_ms);

/// Cost-model configuration file: a JSON object with the named decimal fields
/// fixed_ms, per_layer_ms, metric_ms, feature_ms, head_ms.
CostModel load_cost_config(const std::filesystem::path & path);
void save_cost_config(const CostModel & model, const std::filesystem::path & path);

}  // namespace exitplan

#endif  // EXITPLAN_COST_MODEL_HPP_
