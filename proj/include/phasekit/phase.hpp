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

#include <utility>
#include <vector>

#include "phasekit/channel.hpp"
#include "phasekit/matcore.hpp"

namespace phasekit {

/// Relative phase in (-pi, pi] plus the modulus of the traced interference
/// amplitude. When the amplitude vanishes the phase is undefined: defined is
/// false and phase reported as 0, so batch runs degrade gracefully instead of
/// throwing.
struct PhaseResult {
  double phase = 0.0;
  double visibility = 0.0;
  bool defined = false;
};

/// Build a PhaseResult from a traced amplitude.
PhaseResult phase_from_amplitude(Complex amp);

/// Arg <psi1|psi2>; undefined for (near-)orthogonal states.
PhaseResult pancharatnam(const PureState& psi1, const PureState& psi2);

/// Arg Tr[rho U] for a unitary evolution of a mixed state.
PhaseResult mixed_unitary_phase(const DensityMatrix& rho, const Mat& u);

/// Arg Tr[E_0 rho]: the relative phase acquired under a CP map, carried by
/// the Kraus operator at index 0. The value depends on this choice of
/// representation, just as it depends on the ancilla preparation.
PhaseResult cp_phase(const KrausSet& k, const DensityMatrix& rho);

/// Arg Tr[E_mu rho]: per-outcome interference amplitude, recovered by
/// flipping the reference-beam ancilla from |0> to |mu>.
PhaseResult cp_phase_mu(const KrausSet& k, const DensityMatrix& rho,
                        Eigen::Index mu);

/// N_s = <A|U|A>, the (generally non-unitary) system-space contraction of a
/// dilation; equals sum_mu conj(a_mu) F_mu.
Mat effective_operator(const Dilation& d, const AncillaState& a);

/// Arg Tr[rho N_s]: relative phase for an arbitrary ancilla preparation.
PhaseResult ancilla_phase(const Dilation& d, const AncillaState& a,
                          const DensityMatrix& rho);

/// True when Tr[rho N_s] is real and positive within tol, i.e. the channel
/// (with this preparation) leaves the state in phase.
bool in_phase(const Dilation& d, const AncillaState& a,
              const DensityMatrix& rho, double tol = kEqTol);

/// Interference fringe I(chi) = 1 + visibility * cos(chi - phase).
std::vector<std::pair<double, double>> fringe(
    const PhaseResult& pr, const std::vector<double>& chi_samples);

}  // namespace phasekit
