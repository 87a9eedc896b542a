// Copyright 2026 The phasekit authors
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

#pragma once

#include <optional>
#include <string>

#include "phasekit/channel.hpp"
#include "phasekit/matcore.hpp"

namespace phasekit {

struct SyntaxError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

/// Parsed and fully validated unit of work: a state, a channel, and options.
/// Every library-level invariant is checked at parse time, so a Scene that
/// parses never fails validation later.
struct Scene {
  Eigen::Index sys_dim = 0;
  DensityMatrix state;
  std::optional<KrausSet> kraus;      // present for kraus / builtin channels
  std::optional<Dilation> dilation;   // present when given or block-built
  std::optional<AncillaState> ancilla;  // explicit, or a builtin's default
  std::optional<Eigen::Index> mu;
  std::optional<double> tol;
  std::string channel_kind;  // "kraus" | "dilation" | "builtin:<name>"

  Scene() : state(bloch_identity()) {}

  /// The channel as a Kraus set, extracting from the dilation if needed.
  const KrausSet& kraus_set();
  /// The channel as a dilation, constructing one from the Kraus set if
  /// needed.
  const Dilation& dilation_rep();
  /// The ancilla preparation, defaulting to |0> on the dilation's ancilla.
  AncillaState ancilla_state();

 private:
  static DensityMatrix bloch_identity();
};

/// Parse a scene document (JSON). Throws SyntaxError on malformed input and
/// ValidationError (with the offending field path) on invariant violations.
Scene parse_scene(const std::string& text);

Scene load_scene(const std::string& path);

/// Serialize a scene with the channel replaced by the given dilation, for
/// the dilate subcommand.
std::string scene_to_json_with_dilation(const Scene& scene, const Dilation& d);

}  // namespace phasekit
