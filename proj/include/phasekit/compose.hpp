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

/// Phases along a two-operation sequence rho -> rho' -> rho'', computed in
/// the shared-ancilla purified picture where the non-additivity identity
/// wrap(phi_12 + phi_23 - phi_13) = Arg(bargmann) holds exactly.
struct SequenceReport {
  PhaseResult phi_12;
  PhaseResult phi_23;
  PhaseResult phi_13;
  double mismatch = 0.0;      // wrap(phi_12 + phi_23 - phi_13)
  Complex bargmann = 0.0;     // <Psi|Psi'><Psi'|Psi''><Psi''|Psi>
  bool mismatch_defined = false;
  /// Arg[Tr(rho E_0) Tr(rho' F_0) Tr(rho'' G_0)] with G_0 = F_0 E_0, the
  /// naive index-0 product; reported for comparison only, since with a shared
  /// ancilla the direct map's index-0 element picks up cross terms.
  PhaseResult eq22_literal;
};

/// Composite Kraus set G_{nu,mu} = F_nu E_mu, nu-major ordering, so index 0
/// is F_0 E_0.
KrausSet compose_kraus(const KrausSet& first, const KrausSet& second);

/// Three-point Bargmann invariant <v1|v2><v2|v3><v3|v1>; its argument is
/// invariant under rephasing any of the states.
Complex bargmann3(const PureState& v1, const PureState& v2,
                  const PureState& v3);

/// Run rho through d1 (prepared in a1) then d2 (prepared in a2) and report
/// the three relative phases, their additivity mismatch, and the Bargmann
/// invariant. Dilations with different ancilla dimensions are embedded into
/// the larger ancilla space (direct sum with the identity) so the sequence
/// shares a single ancilla as in the direct-map construction.
SequenceReport sequence_report(const DensityMatrix& rho, const Dilation& d1,
                               const AncillaState& a1, const Dilation& d2,
                               const AncillaState& a2);

/// Embed a dilation into a larger ancilla space: the added ancilla basis
/// states are acted on trivially (direct sum with identity).
Dilation embed_ancilla(const Dilation& d, Eigen::Index anc_dim);

/// Zero-pad an ancilla preparation to a larger ancilla dimension.
AncillaState embed_ancilla_state(const AncillaState& a, Eigen::Index anc_dim);

}  // namespace phasekit
