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

#include <vector>

#include "phasekit/channel.hpp"
#include "phasekit/matcore.hpp"
#include "phasekit/phase.hpp"

namespace phasekit {

/// Depolarizing channel {sqrt(1-p) I, sqrt(p/3) sigma_x, sqrt(p/3) sigma_y,
/// sqrt(p/3) sigma_z}. All four operators are kept even when their
/// coefficients vanish so per-outcome indexing stays stable.
KrausSet depolarizing(double p);

/// Complete randomization of a qubit: every pure state maps to I/2.
struct Randomizing {
  KrausSet kraus;      // {I/2, sigma_x/2, i sigma_y/2, sigma_z/2}
  Dilation dilation;   // 8x8 block unitary, one Pauli per ancilla sector
  AncillaState ancilla;  // (|0>+|1>+|2>+|3>)/2
};
Randomizing randomizing();

/// Conditional unitary U = sum_i P_i x u_i with P_i = |i><i| on the system
/// and u_i unitary on the ancilla.
struct ConditionalUnitarySpec {
  std::vector<Mat> unitaries;  // one per system basis state, equal dims
};
Dilation conditional_unitary(const ConditionalUnitarySpec& spec);

/// Closed-form relative phase of a pure-state ensemble under a conditional
/// unitary: quadrant-correct arctangent of the weighted Im/Re sums of
/// <A|u_i|A>. Agrees with the ancilla_phase route.
PhaseResult conditional_phase(
    const std::vector<std::pair<double, PureState>>& weights,
    const ConditionalUnitarySpec& spec, const AncillaState& a);

/// Relative phase acquired by the qubit (alpha, beta) under complete
/// randomization with the canonical ancilla preparation: direct evaluation
/// of the traced effective operator, Tr(rho N_s) = (1 + 2 Re(conj(alpha) beta)
/// + |alpha|^2 - |beta|^2)/4 + i Im(conj(alpha) beta)/2.
PhaseResult randomization_phase(Complex alpha, Complex beta);

/// Alternative closed form with numerator 1 + 2 Im(alpha conj(beta)). It
/// disagrees with the direct evaluation above (e.g. it gives arctan(1/2) for
/// alpha = 1, beta = 0 where the direct route gives 0); retained so the
/// regression test pins down the discrepancy.
double randomization_phase_printed_form(Complex alpha, Complex beta);

}  // namespace phasekit
