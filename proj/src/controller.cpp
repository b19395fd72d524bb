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

#include "exitplan/controller.hpp"

#include <algorithm>
#include <utility>

#include "exitplan/error.hpp"
#include "exitplan/numeric_text.hpp"

namespace exitplan
{

namespace
{

Trajectoryd decode_layer(const LayerwisePlanner & planner, int layer)
{
  try {
    return planner.decode(layer);
  } catch (const DecodeError &) {
    throw;
  } catch (const std::exception & e) {
    throw DecodeError(layer, e.what());
  }
}

void require_kind(const ExitPolicy & policy, PolicyKind expected, const char * op)
{
  if (policy.kind != expected) {
    throw InvalidArgumentError(
      std::string(op) + " requires a " + to_string(expected) + " policy, got " +
      to_string(policy.kind));
  }
}

void require_start_layer(int start_layer, int total_layers)
{
  if (start_layer < 1 || start_layer > total_layers) {
    throw InvalidArgumentError(
      "start layer " + std::to_string(start_layer) + " outside [1, " +
      std::to_string(total_layers) + "]");
  }
}

}  // namespace

ExitMetric ExitMetric::mean_l2()
{
  return ExitMetric{MetricKind::kMeanL2, 0.0};
}

ExitMetric ExitMetric::l2_at(double horizon_s)
{
  if (!(horizon_s > 0.0)) {
    throw InvalidArgumentError("metric horizon must be positive");
  }
  return ExitMetric{MetricKind::kL2AtHorizon, horizon_s};
}

DissimilarityScored ExitMetric::evaluate(
  const Trajectoryd & pred, const Trajectoryd & reference) const
{
  if (kind == MetricKind::kMeanL2) {
    return l2_dissimilarity(pred, reference);
  }
  return DissimilarityScored(displacement_at(pred, reference, horizon_s));
}

std::string ExitMetric::name() const
{
  if (kind == MetricKind::kMeanL2) {
    return "meanl2";
  }
  return "l2@" + format_decimal(horizon_s) + "s";
}

ExitMetric ExitMetric::parse(const std::string & text)
{
  if (text == "meanl2") {
    return mean_l2();
  }
  if (text.starts_with("l2@") && text.ends_with("s") && text.size() > 4) {
    const auto horizon = parse_decimal(std::string_view(text).substr(3, text.size() - 4));
    if (horizon && *horizon > 0.0) {
      return l2_at(*horizon);
    }
  }
  throw InvalidArgumentError(
    "unknown metric '" + text + "' (expected meanl2 or l2@<seconds>s, e.g. l2@2s)");
}

std::string to_string(PolicyKind kind)
{
  switch (kind) {
    case PolicyKind::kMultiHop:
      return "multihop";
    case PolicyKind::kFullScan:
      return "fullscan";
    case PolicyKind::kFixedDepth:
      return "fixed";
  }
  return "unknown";
}

ExitPolicy ExitPolicy::multi_hop(double delta_m, int start_layer, ExitMetric metric)
{
  if (start_layer < 1) {
    throw InvalidArgumentError("start layer must be >= 1");
  }
  ExitPolicy policy;
  policy.kind = PolicyKind::kMultiHop;
  policy.delta = Toleranced(delta_m);
  policy.start_layer = start_layer;
  policy.metric = metric;
  return policy;
}

ExitPolicy ExitPolicy::full_scan(double delta_m, int start_layer, ExitMetric metric)
{
  ExitPolicy policy = multi_hop(delta_m, start_layer, metric);
  policy.kind = PolicyKind::kFullScan;
  return policy;
}

ExitPolicy ExitPolicy::fixed(int depth, ExitMetric metric)
{
  if (depth < 1) {
    throw InvalidArgumentError("fixed depth must be >= 1");
  }
  ExitPolicy policy;
  policy.kind = PolicyKind::kFixedDepth;
  policy.fixed_depth = depth;
  policy.metric = metric;
  return policy;
}

int next_stride(const DissimilarityScored & score, const Toleranced & tol)
{
  if (score.value > 8.0 * tol.delta) {
    return 8;
  }
  if (score.value > 4.0 * tol.delta) {
    return 4;
  }
  if (score.value > 2.0 * tol.delta) {
    return 2;
  }
  return 1;
}

ExitOutcome run_multi_hop(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy)
{
  require_kind(policy, PolicyKind::kMultiHop, "run_multi_hop");
  const int total = planner.total_layers();
  require_start_layer(policy.start_layer, total);

  std::vector<int> checked;
  int layer = policy.start_layer;
  for (;;) {
    Trajectoryd decoded = decode_layer(planner, layer);
    const DissimilarityScored score = policy.metric.evaluate(decoded, reference);
    checked.push_back(layer);
    if (is_admissible(score, policy.delta)) {
      return ExitOutcome{layer, std::move(checked), score, std::move(decoded), true};
    }
    if (layer == total) {
      return ExitOutcome{total, std::move(checked), score, std::move(decoded), false};
    }
    // The last check is clamped to the final layer so it is always evaluated.
    layer = std::min(layer + next_stride(score, policy.delta), total);
  }
}

ExitOutcome run_full_scan(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy)
{
  require_kind(policy, PolicyKind::kFullScan, "run_full_scan");
  const int total = planner.total_layers();
  require_start_layer(policy.start_layer, total);

  std::vector<int> checked;
  for (int layer = policy.start_layer;; ++layer) {
    Trajectoryd decoded = decode_layer(planner, layer);
    const DissimilarityScored score = policy.metric.evaluate(decoded, reference);
    checked.push_back(layer);
    if (is_admissible(score, policy.delta)) {
      return ExitOutcome{layer, std::move(checked), score, std::move(decoded), true};
    }
    if (layer == total) {
      return ExitOutcome{total, std::move(checked), score, std::move(decoded), false};
    }
  }
}

ExitOutcome run_fixed_depth(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy)
{
  require_kind(policy, PolicyKind::kFixedDepth, "run_fixed_depth");
  const int total = planner.total_layers();
  if (policy.fixed_depth < 1 || policy.fixed_depth > total) {
    throw InvalidArgumentError(
      "fixed depth " + std::to_string(policy.fixed_depth) + " outside [1, " +
      std::to_string(total) + "]");
  }

  Trajectoryd decoded = decode_layer(planner, policy.fixed_depth);
  const DissimilarityScored score = policy.metric.evaluate(decoded, reference);
  return ExitOutcome{
    policy.fixed_depth, {policy.fixed_depth}, score, std::move(decoded),
    policy.fixed_depth < total};
}

ExitOutcome run_policy(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitPolicy & policy)
{
  switch (policy.kind) {
    case PolicyKind::kMultiHop:
      return run_multi_hop(planner, reference, policy);
    case PolicyKind::kFullScan:
      return run_full_scan(planner, reference, policy);
    case PolicyKind::kFixedDepth:
      return run_fixed_depth(planner, reference, policy);
  }
  throw InvalidArgumentError("unknown policy kind");
}

ExitOutcome full_depth_outcome(
  const LayerwisePlanner & planner, const Trajectoryd & reference, const ExitMetric & metric)
{
  const int total = planner.total_layers();
  Trajectoryd decoded = decode_layer(planner, total);
  const DissimilarityScored score = metric.evaluate(decoded, reference);
  return ExitOutcome{total, {}, score, std::move(decoded), false};
}

}  // namespace exitplan
