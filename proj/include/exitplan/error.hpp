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

#ifndef EXITPLAN_ERROR_HPP_
#define EXITPLAN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace exitplan
{

/// Base class of every error thrown by this library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A constructor invariant or operation precondition was violated.
class InvalidArgumentError : public Error
{
public:
  using Error::Error;
};

/// Two trajectories that must share length and sampling interval do not.
class ShapeMismatchError : public Error
{
public:
  using Error::Error;
};

/// A requested time horizon falls outside the span a trajectory covers.
class OutOfHorizonError : public Error
{
public:
  using Error::Error;
};

/// A planner backend failed while decoding; carries the layer index.
class DecodeError : public Error
{
public:
  DecodeError(int layer, const std::string & detail)
  : Error("decode failed at layer " + std::to_string(layer) + ": " + detail), layer_(layer)
  {
  }

  int layer() const { return layer_; }

private:
  int layer_;
};

/// A trace file could not be read, parsed, or validated.
class TraceFormatError : public Error
{
public:
  using Error::Error;
};

/// A trace dataset is unusable as a whole (empty, mixed layer counts, ...).
class DatasetError : public Error
{
public:
  using Error::Error;
};

}  // namespace exitplan

#endif  // EXITPLAN_ERROR_HPP_
