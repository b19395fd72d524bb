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

#ifndef EXITPLAN_CLI_HPP_
#define EXITPLAN_CLI_HPP_

namespace exitplan
{

/// Entry point behind the `exitplan` binary. Subcommands:
///
///   gen          synthesize a trace dataset from a profile (or a sampled
///                exit-layer population) + seed + count
///   run          evaluate one exit policy over a dataset and write a report
///   ablate       evaluate the standard ablation lineup side by side
///   oracle-check multi-hop vs full-scan equivalence over n seeded traces
///   fit-cost     calibrate fixed/per-layer costs from latency anchors
///
/// Returns 0 on success; any error produces a one-line diagnostic on stderr
/// and a nonzero status. All randomness flows from explicit --seed flags.
int cli_main(int argc, char ** argv);

}  // namespace exitplan

#endif  // EXITPLAN_CLI_HPP_
