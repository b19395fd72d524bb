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

#ifndef EXITPLAN_CONTROLLER_HPP_
#define EXITPLAN_CONTROLLER_HPP_

#include <string>
#include <vector>

#include "exitplan/planner.hpp"
#include "exitplan/trajectory.hpp"

namespace exitplan
{

/// Shallow layers almost never admit an exit, so predicate evaluation starts
/// mid-depth by default.
inline constexpr int kDefaultStartLayer = 13;

/// Which deviation statistic drives the exit predicate.
enum class MetricKind { kMeanL2, kL2AtHorizon };

/// Policy-selectable deviation metric. The controllers treat it as a black
/// box returning meters.
struct ExitMetric
{
  MetricKind kind = MetricKind::kL2AtHorizon;
  double horizon_s = 2.0;  // used by kL2AtHorizon only

  static ExitMetric mean_l2();
  static ExitMetric l2_at(double horizon_s);

  DissimilarityScored evaluate(const Trajectoryd & pred, const Trajectoryd & reference) const;

  /// "meanl2" or "l2@<seconds>s"; parse() accepts the same spellings.
  std::string name() const;
  static ExitMetric parse(const std::string & text);

  bool operator==(const ExitMetric &) const = default;
};

enum class PolicyKind { kMultiHop, kFullScan, kFixedDepth };

std::string to_string(PolicyKind kind);

/// Exit policy configuration: adaptive hopping, exhaustive scanning from a
/// start layer, or an unconditional fixed depth.
struct ExitPolicy
{
  PolicyKind kind = PolicyKind::kMultiHop;
  Toleranced delta{1.0};
  int start_layer = kDefaultStartLayer;
  int fixed_depth = 0;  // kFixedDepth only
  ExitMetric metric{};

  static ExitPolicy multi_hop(
    double delta_m, int start_layer = kDefaultStartLayer, ExitMetric metric = {});
  static ExitPolicy full_scan(
    double delta_m, int start_layer = kDefaultStartLayer, ExitMetric metric = {});
  static ExitPolicy fixed(int depth, ExitMetric metric = {});
};

/// Record of one controller run over a layerwise planner.
///
/// checked_layers lists, in increasing order, every layer whose trajectory
/// was decoded and scored; when it is nonempty its last element equals
/// exit_layer. For the score-driven policies exited_early means the exit
/// predicate held at exit_layer; a false value means the run fell through to
/// the final layer, whose trajectory is adopted unconditionally. For the
/// fixed-depth policy adoption is unconditional, so exited_early simply
/// records whether the fixed depth is shallower than the final layer.
/// An empty checked_layers encodes the no-early-exit baseline, which never
/// evaluates the predicate (see full_depth_outcome).
struct ExitOutcome
{
  int exit_layer;
  std::vector<int> checked_layers;
  DissimilarityScored exit_score;
  Trajectoryd adopted;
  bool exited_early;
};

/// Hop size toward the next checked layer, from how far the current score
/// sits above the tolerance. All comparisons are strict, so a score exactly
/// at k * delta falls into the next smaller branch:
///
///   8 if score > 8 * delta, else 4 if score > 4 * delta,
///   else 2 if score > 2 * delta, else 1.
int next_stride(const DissimilarityScored & score, const Toleranced & tol);

/// Adaptive controller: evaluates the predicate at start_layer, then advances
/// by next_stride() of the most recent score (clamping the final check to the
/// last layer) until a checked layer is admissible or layers run out. Only
/// checked layers trigger planner decoding.
ExitOutcome run_multi_hop(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy);

/// Brute-force baseline: checks every layer from start_layer upward and exits
/// at the first admissible one. Serves as the oracle the multi-hop controller
/// is property-tested against.
ExitOutcome run_full_scan(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy);

/// Decodes exactly once at policy.fixed_depth and adopts it unconditionally;
/// the score is computed for reporting only.
ExitOutcome run_fixed_depth(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy);

/// Dispatches on policy.kind.
ExitOutcome run_policy(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy);

/// No-early-exit baseline: adopts the final layer's trajectory without any
/// predicate evaluation (checked_layers is empty). The score is computed for
/// reporting only.
ExitOutcome full_depth_outcome(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitMetric & metric = {});

}  // namespace exitplan

#endif  // EXITPLAN_CONTROLLER_HPP_
