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

#ifndef EXITPLAN_TRAJECTORY_HPP_
#define EXITPLAN_TRAJECTORY_HPP_

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "exitplan/error.hpp"

namespace exitplan
{

/// Planar waypoint in ego-centric meters. Rejects NaN/Inf at construction.
template <typename Scalar>
struct Waypoint
{
  Scalar x;
  Scalar y;

  Waypoint(Scalar x_in, Scalar y_in) : x(x_in), y(y_in)
  {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw InvalidArgumentError("waypoint coordinates must be finite");
    }
  }

  Eigen::Matrix<Scalar, 1, 2> vec() const { return Eigen::Matrix<Scalar, 1, 2>{x, y}; }
};

/// Time-indexed 2D path sampled every dt seconds over a fixed horizon.
///
/// Row t (0-based) holds the position at time (t + 1) * dt, i.e. the first
/// sample sits one step ahead of the (implicit) current pose. A horizon query
/// such as "L2 at 2 s" therefore addresses row round(2 / dt) - 1.
template <typename Scalar>
class Trajectory
{
public:
  using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;

  Trajectory(PointMatrix points, Scalar dt) : points_(std::move(points)), dt_(dt)
  {
    if (points_.rows() < 1) {
      throw InvalidArgumentError("trajectory needs at least one point");
    }
    if (!std::isfinite(dt_) || !(dt_ > Scalar{0})) {
      throw InvalidArgumentError("trajectory dt must be positive and finite");
    }
    if (!points_.allFinite()) {
      throw InvalidArgumentError("trajectory coordinates must be finite");
    }
  }

  static Trajectory from_waypoints(const std::vector<Waypoint<Scalar>> & waypoints, Scalar dt)
  {
    PointMatrix points(static_cast<Eigen::Index>(waypoints.size()), 2);
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      points(i, 0) = waypoints[static_cast<std::size_t>(i)].x;
      points(i, 1) = waypoints[static_cast<std::size_t>(i)].y;
    }
    return Trajectory(std::move(points), dt);
  }

  Eigen::Index size() const { return points_.rows(); }
  Scalar dt() const { return dt_; }
  const PointMatrix & points() const { return points_; }
  Eigen::Matrix<Scalar, 1, 2> point(Eigen::Index row) const { return points_.row(row); }

  /// Time of the last sample.
  Scalar span() const { return dt_ * static_cast<Scalar>(points_.rows()); }

  /// 0-based row addressed by a time horizon, rounding to the nearest sample.
  /// Throws OutOfHorizonError when the horizon lies outside [dt, T * dt].
  Eigen::Index row_at(Scalar horizon_s) const
  {
    const auto step = static_cast<long long>(std::llround(horizon_s / dt_));
    if (!std::isfinite(horizon_s) || step < 1 || step > static_cast<long long>(points_.rows())) {
      throw OutOfHorizonError(
        "horizon " + std::to_string(horizon_s) + " s outside trajectory span [" +
        std::to_string(dt_) + ", " + std::to_string(span()) + "] s");
    }
    return static_cast<Eigen::Index>(step - 1);
  }

  bool operator==(const Trajectory & other) const
  {
    return dt_ == other.dt_ && points_.rows() == other.points_.rows() &&
           points_ == other.points_;
  }

private:
  PointMatrix points_;
  Scalar dt_;
};

/// Nonnegative spatial deviation between two plans, in meters.
template <typename Scalar>
struct DissimilarityScore
{
  Scalar value;

  explicit DissimilarityScore(Scalar v) : value(v)
  {
    if (!std::isfinite(value) || value < Scalar{0}) {
      throw InvalidArgumentError("dissimilarity must be nonnegative and finite");
    }
  }
};

/// Strictly positive admissibility threshold, in meters.
template <typename Scalar>
struct Tolerance
{
  Scalar delta;

  explicit Tolerance(Scalar d) : delta(d)
  {
    if (!std::isfinite(delta) || !(delta > Scalar{0})) {
      throw InvalidArgumentError("tolerance must be positive and finite");
    }
  }
};

/// Mean Euclidean distance between matching rows of two point sets. Accepts
/// any two-column Eigen expressions of equal row count.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar mean_row_distance(
  const Eigen::MatrixBase<DerivedA> & a, const Eigen::MatrixBase<DerivedB> & b)
{
  return (a - b).rowwise().norm().mean();
}

template <typename Scalar>
void require_same_shape(const Trajectory<Scalar> & a, const Trajectory<Scalar> & b)
{
  if (a.size() != b.size()) {
    throw ShapeMismatchError(
      "trajectory length mismatch: " + std::to_string(a.size()) + " vs " +
      std::to_string(b.size()) + " points");
  }
  if (a.dt() != b.dt()) {
    throw ShapeMismatchError(
      "trajectory dt mismatch: " + std::to_string(a.dt()) + " vs " + std::to_string(b.dt()) +
      " s");
  }
}

/// Mean per-point L2 deviation: (1/T) * sum_t ||pred_t - ref_t||.
/// Symmetric, and a metric on equal-shape trajectories.
template <typename Scalar>
DissimilarityScore<Scalar> l2_dissimilarity(
  const Trajectory<Scalar> & pred, const Trajectory<Scalar> & reference)
{
  require_same_shape(pred, reference);
  return DissimilarityScore<Scalar>(mean_row_distance(pred.points(), reference.points()));
}

/// Pointwise displacement at one time horizon ("L2 at 2 s" for horizon_s = 2).
template <typename Scalar>
Scalar displacement_at(
  const Trajectory<Scalar> & pred, const Trajectory<Scalar> & reference, Scalar horizon_s)
{
  require_same_shape(pred, reference);
  const Eigen::Index row = pred.row_at(horizon_s);
  return (pred.point(row) - reference.point(row)).norm();
}

/// Exit predicate: the deviation must lie strictly below the tolerance.
/// A score exactly equal to delta does not pass.
template <typename Scalar>
bool is_admissible(const DissimilarityScore<Scalar> & score, const Tolerance<Scalar> & tol)
{
  return score.value < tol.delta;
}

using Waypointd = Waypoint<double>;
using Trajectoryd = Trajectory<double>;
using DissimilarityScored = DissimilarityScore<double>;
using Toleranced = Tolerance<double>;

}  // namespace exitplan

#endif  // EXITPLAN_TRAJECTORY_HPP_
