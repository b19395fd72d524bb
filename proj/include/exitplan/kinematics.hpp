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

#ifndef EXITPLAN_KINEMATICS_HPP_
#define EXITPLAN_KINEMATICS_HPP_

#include <cmath>
#include <numbers>
#include <vector>

#include "exitplan/error.hpp"
#include "exitplan/trajectory.hpp"

namespace exitplan
{

/// Wraps an angle into (-pi, pi].
template <typename Scalar>
Scalar normalize_angle(Scalar angle)
{
  constexpr Scalar two_pi = Scalar{2} * std::numbers::pi_v<Scalar>;
  Scalar wrapped = std::fmod(angle + std::numbers::pi_v<Scalar>, two_pi);
  if (wrapped <= Scalar{0}) {
    wrapped += two_pi;
  }
  return wrapped - std::numbers::pi_v<Scalar>;
}

/// Speed and front-wheel steering command held over one integration step.
/// Speed commands are used directly; pedal-to-acceleration mapping is out of
/// scope, so a speed profile is assumed to be integrated already.
template <typename Scalar>
struct ControlSample
{
  Scalar speed;           // m/s, >= 0
  Scalar steering_angle;  // rad, |angle| < pi/2

  ControlSample(Scalar speed_in, Scalar steering_in) : speed(speed_in), steering_angle(steering_in)
  {
    if (!std::isfinite(speed) || speed < Scalar{0}) {
      throw InvalidArgumentError("control speed must be nonnegative and finite");
    }
    if (!std::isfinite(steering_angle) ||
        !(std::abs(steering_angle) < std::numbers::pi_v<Scalar> / Scalar{2})) {
      throw InvalidArgumentError("steering angle must satisfy |angle| < pi/2");
    }
  }
};

/// Planar pose plus the wheelbase that fixes the turning geometry.
/// The heading is normalized into (-pi, pi] at construction.
template <typename Scalar>
struct VehicleState
{
  Scalar x;
  Scalar y;
  Scalar heading;
  Scalar wheelbase;

  VehicleState(Scalar x_in, Scalar y_in, Scalar heading_in, Scalar wheelbase_in)
  : x(x_in), y(y_in), heading(normalize_angle(heading_in)), wheelbase(wheelbase_in)
  {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(heading_in)) {
      throw InvalidArgumentError("vehicle pose must be finite");
    }
    if (!std::isfinite(wheelbase) || !(wheelbase > Scalar{0})) {
      throw InvalidArgumentError("wheelbase must be positive and finite");
    }
  }
};

inline constexpr double kDefaultWheelbaseM = 2.8;

/// Explicit-Euler rollout of the kinematic bicycle model.
///
/// Per step, the heading is updated first and the position then advances
/// along the new heading:
///
///   heading += speed / wheelbase * tan(steering) * dt
///   x       += speed * cos(heading) * dt
///   y       += speed * sin(heading) * dt
///
/// Returns the post-step positions, so row t holds the pose at time
/// (t + 1) * dt, matching the Trajectory time convention. With constant
/// controls the points track a circle of radius wheelbase / tan(steering)
/// with O(dt) radial error.
template <typename Scalar>
Trajectory<Scalar> rollout_bicycle(
  const VehicleState<Scalar> & initial, const std::vector<ControlSample<Scalar>> & controls,
  Scalar dt)
{
  if (!std::isfinite(dt) || !(dt > Scalar{0})) {
    throw InvalidArgumentError("rollout dt must be positive and finite");
  }
  if (controls.empty()) {
    throw InvalidArgumentError("rollout needs at least one control sample");
  }

  typename Trajectory<Scalar>::PointMatrix points(
    static_cast<Eigen::Index>(controls.size()), 2);
  Scalar heading = initial.heading;
  Scalar x = initial.x;
  Scalar y = initial.y;
  for (std::size_t i = 0; i < controls.size(); ++i) {
    const ControlSample<Scalar> & u = controls[i];
    heading += u.speed / initial.wheelbase * std::tan(u.steering_angle) * dt;
    x += u.speed * std::cos(heading) * dt;
    y += u.speed * std::sin(heading) * dt;
    points(static_cast<Eigen::Index>(i), 0) = x;
    points(static_cast<Eigen::Index>(i), 1) = y;
  }
  return Trajectory<Scalar>(std::move(points), dt);
}

using ControlSampled = ControlSample<double>;
using VehicleStated = VehicleState<double>;

}  // namespace exitplan

#endif  // EXITPLAN_KINEMATICS_HPP_
