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

#include "phasekit/channel.hpp"
#include "phasekit/matcore.hpp"
#include "phasekit/phase.hpp"

namespace phasekit {

/// Pure state on system x ancilla x auxiliary (ordered s, a, s', all factors
/// slow-to-fast) whose (a, s')-trace recovers a given density matrix.
struct Purification {
  Eigen::Index sys_dim = 0;
  Eigen::Index anc_dim = 0;
  Eigen::Index aux_dim = 0;
  PureState vector;
};

/// Lift rho to sum_k sqrt(w_k) |k>|A>|k'>, using the deterministic
/// eigendecomposition of rho (eigenvalues descending). aux_dim = sys_dim.
Purification purify(const DensityMatrix& rho, const AncillaState& a);

/// Permutation exchanging ancilla basis states 0 and mu (unitary, involutive).
Mat flip_operator(Eigen::Index anc_dim, Eigen::Index mu);

/// Pancharatnam phase between the reference purification (ancilla flipped
/// 0 -> mu) and the target purification (joint unitary applied); agrees with
/// cp_phase_mu for a = |0>.
PhaseResult purified_phase(const Dilation& d, const DensityMatrix& rho,
                           const AncillaState& a, Eigen::Index mu);

}  // namespace phasekit
