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

#include "exitplan/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "exitplan/error.hpp"
#include "exitplan/random.hpp"

namespace exitplan
{

namespace
{

void require_shape(int total_layers, int horizon_steps, double dt)
{
  if (total_layers < 1) {
    throw InvalidArgumentError("total_layers must be >= 1");
  }
  if (horizon_steps < 1) {
    throw InvalidArgumentError("horizon_steps must be >= 1");
  }
  if (!std::isfinite(dt) || !(dt > 0.0)) {
    throw InvalidArgumentError("dt must be positive and finite");
  }
}

/// Reference displaced laterally (perpendicular to its +x heading) by d per
/// point, so every supported metric measures exactly d against the reference.
Trajectoryd lateral_offset(const Trajectoryd & reference, double deviation_m)
{
  Trajectoryd::PointMatrix points = reference.points();
  points.col(1).array() += deviation_m;
  return Trajectoryd(std::move(points), reference.dt());
}

ScenarioTrace trace_from_curve(
  const std::string & scenario_id, const std::vector<double> & curve, int horizon_steps,
  double dt)
{
  const Trajectoryd reference = straight_reference(horizon_steps, dt);
  std::vector<Trajectoryd> per_layer;
  per_layer.reserve(curve.size());
  for (const double deviation : curve) {
    per_layer.push_back(lateral_offset(reference, deviation));
  }
  return ScenarioTrace(scenario_id, reference, std::move(per_layer));
}

}  // namespace

void SyntheticProfile::validate() const
{
  if (!(base_scale >= 0.0) || !std::isfinite(base_scale)) {
    throw InvalidArgumentError("base_scale must be nonnegative and finite");
  }
  if (!(decay_rate >= 0.0) || !std::isfinite(decay_rate)) {
    throw InvalidArgumentError("decay_rate must be nonnegative and finite");
  }
  if (!(floor >= 0.0) || !std::isfinite(floor)) {
    throw InvalidArgumentError("floor must be nonnegative and finite");
  }
  if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd)) {
    throw InvalidArgumentError("noise_sd must be nonnegative and finite");
  }
  if (divergence_layer) {
    if (*divergence_layer < 1) {
      throw InvalidArgumentError("divergence_layer must be >= 1");
    }
    if (!(divergence_slope >= 0.0) || !std::isfinite(divergence_slope)) {
      throw InvalidArgumentError("divergence_slope must be nonnegative and finite");
    }
  }
}

double noise_free_deviation(const SyntheticProfile & profile, int layer)
{
  double deviation = profile.base_scale * std::exp(-profile.decay_rate * layer) + profile.floor;
  if (profile.divergence_layer && layer > *profile.divergence_layer) {
    deviation += profile.divergence_slope * (layer - *profile.divergence_layer);
  }
  return deviation;
}

Trajectoryd straight_reference(int horizon_steps, double dt, double speed_mps)
{
  if (!(speed_mps > 0.0) || !std::isfinite(speed_mps)) {
    throw InvalidArgumentError("reference speed must be positive and finite");
  }
  Trajectoryd::PointMatrix points(horizon_steps, 2);
  for (int t = 0; t < horizon_steps; ++t) {
    points(t, 0) = speed_mps * dt * (t + 1);
    points(t, 1) = 0.0;
  }
  return Trajectoryd(std::move(points), dt);
}

ScenarioTrace generate_scenario(
  const SyntheticProfile & profile, int total_layers, int horizon_steps, double dt,
  const std::string & scenario_id)
{
  profile.validate();
  require_shape(total_layers, horizon_steps, dt);

  SplitMix64 rng(profile.seed);
  std::vector<double> curve(static_cast<std::size_t>(total_layers));
  for (int layer = 1; layer <= total_layers; ++layer) {
    double deviation = noise_free_deviation(profile, layer);
    if (profile.noise_sd > 0.0) {
      deviation += rng.next_normal(0.0, profile.noise_sd);
    }
    curve[static_cast<std::size_t>(layer - 1)] = std::max(deviation, 0.0);
  }

  const std::string id =
    scenario_id.empty() ? "synthetic-" + std::to_string(profile.seed) : scenario_id;
  return trace_from_curve(id, curve, horizon_steps, dt);
}

ScenarioTrace generate_lipschitz_scenario(
  std::uint64_t seed, const Toleranced & delta, int total_layers, int horizon_steps, double dt)
{
  require_shape(total_layers, horizon_steps, dt);

  SplitMix64 rng(seed);
  std::vector<double> curve(static_cast<std::size_t>(total_layers));
  // Start anywhere up to 12*delta so every stride branch gets exercised.
  double deviation = rng.next_uniform(0.0, 12.0 * delta.delta);
  curve[0] = deviation;
  for (int layer = 2; layer <= total_layers; ++layer) {
    if (rng.next_double() < 0.15) {
      deviation += rng.next_uniform(0.0, delta.delta);
    } else {
      deviation = std::max(0.0, deviation - rng.next_uniform(0.0, delta.delta));
    }
    curve[static_cast<std::size_t>(layer - 1)] = deviation;
  }
  return trace_from_curve("lipschitz-" + std::to_string(seed), curve, horizon_steps, dt);
}

ScenarioTrace generate_first_exit_scenario(
  std::uint64_t seed, const Toleranced & delta, int first_exit_layer, int total_layers,
  int horizon_steps, double dt)
{
  require_shape(total_layers, horizon_steps, dt);
  if (first_exit_layer < 1 || first_exit_layer > total_layers) {
    throw InvalidArgumentError(
      "first_exit_layer " + std::to_string(first_exit_layer) + " outside [1, " +
      std::to_string(total_layers) + "]");
  }

  SplitMix64 rng(seed);
  std::vector<double> curve(static_cast<std::size_t>(total_layers));
  // Deviation at the exit layer sits strictly below delta; the approach ramp
  // descends toward delta with per-layer slope <= delta * u, which keeps the
  // drop into the exit layer within the Lipschitz bound.
  const double u = rng.next_uniform(0.5, 0.95);
  const double slope = rng.next_uniform(0.05, 1.0) * delta.delta * u;
  curve[static_cast<std::size_t>(first_exit_layer - 1)] = delta.delta * u;
  for (int layer = 1; layer < first_exit_layer; ++layer) {
    curve[static_cast<std::size_t>(layer - 1)] =
      delta.delta + slope * (first_exit_layer - layer);
  }
  for (int layer = first_exit_layer + 1; layer <= total_layers; ++layer) {
    curve[static_cast<std::size_t>(layer - 1)] = delta.delta * rng.next_uniform(0.1, 0.95);
  }
  return trace_from_curve(
    "firstexit-" + std::to_string(first_exit_layer) + "-" + std::to_string(seed), curve,
    horizon_steps, dt);
}

std::vector<int> sample_population(
  const std::map<int, double> & distribution, int n, std::uint64_t seed)
{
  if (n < 1) {
    throw InvalidArgumentError("population size must be >= 1");
  }
  if (distribution.empty()) {
    throw InvalidArgumentError("distribution must be nonempty");
  }
  double total = 0.0;
  for (const auto & [layer, probability] : distribution) {
    if (layer < 1) {
      throw InvalidArgumentError("distribution layer " + std::to_string(layer) + " must be >= 1");
    }
    if (!(probability >= 0.0) || !std::isfinite(probability)) {
      throw InvalidArgumentError("distribution probabilities must be nonnegative and finite");
    }
    total += probability;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidArgumentError(
      "distribution probabilities sum to " + std::to_string(total) + ", expected 1 within 1e-9");
  }

  SplitMix64 rng(seed);
  std::vector<int> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_double();
    double cumulative = 0.0;
    int picked = distribution.rbegin()->first;  // guards against rounding at the tail
    for (const auto & [layer, probability] : distribution) {
      cumulative += probability;
      if (u < cumulative) {
        picked = layer;
        break;
      }
    }
    samples.push_back(picked);
  }
  return samples;
}

const std::map<int, int> & benchmark_exit_counts()
{
  static const std::map<int, int> counts = {
    {7, 1},   {9, 1},   {13, 26},  {14, 28}, {15, 18}, {16, 16}, {17, 3},  {18, 5},
    {19, 8},  {20, 4},  {21, 8},   {22, 6},  {23, 8},  {24, 43}, {25, 146}, {26, 1},
    {27, 26}, {28, 32}, {29, 26},  {30, 3},  {31, 5},  {32, 226}};
  return counts;
}

std::map<int, double> benchmark_exit_distribution()
{
  const auto & counts = benchmark_exit_counts();
  int total = 0;
  for (const auto & [layer, count] : counts) {
    total += count;
  }
  std::map<int, double> distribution;
  for (const auto & [layer, count] : counts) {
    distribution[layer] = static_cast<double>(count) / static_cast<double>(total);
  }
  return distribution;
}

}  // namespace exitplan
