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

#ifndef EXITPLAN_SYNTHETIC_HPP_
#define EXITPLAN_SYNTHETIC_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exitplan/planner.hpp"
#include "exitplan/trajectory.hpp"

namespace exitplan
{

/// Closed-form layerwise deviation profile for synthetic traces:
///
///   d(l) = base_scale * exp(-decay_rate * l) + floor + noise(l)
///          [+ divergence_slope * (l - divergence_layer) for l past it]
///
/// noise(l) is zero-mean Gaussian drawn deterministically from seed, and the
/// result is clipped at zero. Convergence curves observed on real layerwise
/// planners decay gradually and occasionally re-diverge late; the divergence
/// term reproduces that late blow-up regime.
struct SyntheticProfile
{
  double base_scale = 0.0;   // initial deviation magnitude, meters
  double decay_rate = 0.0;   // per-layer exponential decay
  double floor = 0.0;        // asymptotic deviation, meters
  double noise_sd = 0.0;     // Gaussian noise, meters
  std::optional<int> divergence_layer;
  double divergence_slope = 0.0;  // meters per layer past divergence_layer
  std::uint64_t seed = 0;

  void validate() const;
};

/// Deterministic deviation curve value before noise is added.
double noise_free_deviation(const SyntheticProfile & profile, int layer);

/// Straight constant-speed reference line along +x, the comparison target all
/// synthetic traces share.
Trajectoryd straight_reference(int horizon_steps, double dt, double speed_mps = 5.0);

/// Builds a trace whose measured deviation-to-reference at layer l equals the
/// profile curve d(l) exactly (up to floating point): each layer trajectory
/// is the reference displaced laterally by d(l), which makes the metric
/// analytically invertible for testing.
ScenarioTrace generate_scenario(
  const SyntheticProfile & profile, int total_layers, int horizon_steps, double dt,
  const std::string & scenario_id = "");

/// Trace whose deviation curve never drops by more than delta per layer
/// (random decrements in [0, delta]; occasional increases allowed). This is
/// the regime in which the multi-hop controller provably misses no admissible
/// exit, and the equivalence suite draws its cases from here.
ScenarioTrace generate_lipschitz_scenario(
  std::uint64_t seed, const Toleranced & delta, int total_layers, int horizon_steps, double dt);

/// Trace whose earliest layer with deviation strictly below delta is exactly
/// first_exit_layer; the curve is also Lipschitz in the sense above, so scan
/// and hop policies agree on it. Used to synthesize populations with a
/// prescribed exit histogram.
ScenarioTrace generate_first_exit_scenario(
  std::uint64_t seed, const Toleranced & delta, int first_exit_layer, int total_layers,
  int horizon_steps, double dt);

/// Draws n earliest-exit layers from a categorical layer distribution whose
/// probabilities must sum to 1 within 1e-9.
std::vector<int> sample_population(
  const std::map<int, double> & distribution, int n, std::uint64_t seed);

/// Published earliest-exit layer counts measured on a 640-case driving
/// benchmark with a 2 m tolerance: the layer at which each case first came
/// within tolerance of its final plan. Layers with zero count are omitted.
const std::map<int, int> & benchmark_exit_counts();

/// The counts above normalized to probabilities.
std::map<int, double> benchmark_exit_distribution();

}  // namespace exitplan

#endif  // EXITPLAN_SYNTHETIC_HPP_
