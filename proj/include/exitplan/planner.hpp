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

#ifndef EXITPLAN_PLANNER_HPP_
#define EXITPLAN_PLANNER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "exitplan/error.hpp"
#include "exitplan/trajectory.hpp"

namespace exitplan
{

/// A planner that can decode an intermediate trajectory after any layer.
///
/// decode() must be deterministic: repeated calls with the same layer return
/// identical trajectories. Controllers call it only at layers they actually
/// check, in increasing order.
class LayerwisePlanner
{
public:
  virtual ~LayerwisePlanner() = default;

  virtual int total_layers() const = 0;

  /// layer is 1-based in [1, total_layers()].
  virtual Trajectoryd decode(int layer) const = 0;
};

/// Per-layer trajectories recorded for one driving case, plus the reference
/// prior they are compared against. Immutable once constructed; all layers
/// and the reference share length and dt.
class ScenarioTrace
{
public:
  ScenarioTrace(std::string scenario_id, Trajectoryd reference, std::vector<Trajectoryd> per_layer)
  : scenario_id_(std::move(scenario_id)),
    reference_(std::move(reference)),
    per_layer_(std::move(per_layer))
  {
    if (scenario_id_.empty()) {
      throw InvalidArgumentError("scenario_id must be nonempty");
    }
    if (scenario_id_.find_first_of(" \t\r\n") != std::string::npos) {
      throw InvalidArgumentError("scenario_id must not contain whitespace");
    }
    if (per_layer_.empty()) {
      throw InvalidArgumentError("trace needs at least one layer");
    }
    for (std::size_t i = 0; i < per_layer_.size(); ++i) {
      const Trajectoryd & layer = per_layer_[i];
      if (layer.size() != reference_.size()) {
        throw InvalidArgumentError(
          "layer " + std::to_string(i + 1) + " has " + std::to_string(layer.size()) +
          " points, expected " + std::to_string(reference_.size()));
      }
      if (layer.dt() != reference_.dt()) {
        throw InvalidArgumentError(
          "layer " + std::to_string(i + 1) + " dt differs from the reference dt");
      }
    }
  }

  const std::string & scenario_id() const { return scenario_id_; }
  int total_layers() const { return static_cast<int>(per_layer_.size()); }
  const Trajectoryd & reference() const { return reference_; }
  const std::vector<Trajectoryd> & per_layer() const { return per_layer_; }

  /// 1-based layer access.
  const Trajectoryd & layer(int layer_index) const
  {
    if (layer_index < 1 || layer_index > total_layers()) {
      throw InvalidArgumentError(
        "layer index " + std::to_string(layer_index) + " outside [1, " +
        std::to_string(total_layers()) + "]");
    }
    return per_layer_[static_cast<std::size_t>(layer_index - 1)];
  }

  bool operator==(const ScenarioTrace & other) const
  {
    return scenario_id_ == other.scenario_id_ && reference_ == other.reference_ &&
           per_layer_ == other.per_layer_;
  }

private:
  std::string scenario_id_;
  Trajectoryd reference_;
  std::vector<Trajectoryd> per_layer_;
};

/// Replays a recorded trace as a LayerwisePlanner. Non-owning: the trace must
/// outlive the planner.
class TracePlanner final : public LayerwisePlanner
{
public:
  explicit TracePlanner(const ScenarioTrace & trace) : trace_(&trace) {}

  int total_layers() const override { return trace_->total_layers(); }
  Trajectoryd decode(int layer) const override { return trace_->layer(layer); }

private:
  const ScenarioTrace * trace_;
};

}  // namespace exitplan

#endif  // EXITPLAN_PLANNER_HPP_
