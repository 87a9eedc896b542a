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

#include <iosfwd>
#include <optional>
#include <string>

#include "phasekit/scene.hpp"

namespace phasekit {

// Exit-code contract shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUndefined = 2;
inline constexpr int kExitNotInPhase = 3;
inline constexpr int kExitIo = 4;

int cmd_phase(Scene& scene, std::optional<Eigen::Index> mu, bool degrees,
              std::ostream& out);
int cmd_fringe(Scene& scene, int samples, const std::string& out_path,
               std::ostream& out);
int cmd_compose(Scene& scene1, Scene& scene2, bool degrees, std::ostream& out);
int cmd_inphase(Scene& scene, std::optional<double> tol, std::ostream& out);
int cmd_check(Scene& scene, std::ostream& out);
int cmd_equal(Scene& a, Scene& b, std::optional<double> tol,
              std::ostream& out);
int cmd_dilate(Scene& scene, const std::string& out_path, std::ostream& out);

/// Top-level dispatch used by the phasekit binary; maps thrown errors onto
/// the exit-code contract.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace phasekit
