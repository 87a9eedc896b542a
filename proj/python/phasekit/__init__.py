# Copyright 2026 The phasekit authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Relative phase shifts of quantum states under quantum operations."""

from phasekit._core import (
    PhaseResult,
    PhasekitError,
    ancilla_phase,
    apply_dilation,
    apply_kraus,
    bargmann3,
    bloch_to_density,
    channels_equal,
    choi,
    compose_kraus,
    conditional_unitary,
    cp_phase,
    density_to_bloch,
    depolarizing,
    dilate,
    effective_operator,
    extract_kraus,
    in_phase,
    mixed_unitary_phase,
    pancharatnam,
    partial_trace_ancilla,
    purified_phase,
    randomization_phase,
    randomizing,
    sequence_report,
    tensor,
)

__all__ = [
    "PhaseResult",
    "PhasekitError",
    "ancilla_phase",
    "apply_dilation",
    "apply_kraus",
    "bargmann3",
    "bloch_to_density",
    "channels_equal",
    "choi",
    "compose_kraus",
    "conditional_unitary",
    "cp_phase",
    "density_to_bloch",
    "depolarizing",
    "dilate",
    "effective_operator",
    "extract_kraus",
    "in_phase",
    "mixed_unitary_phase",
    "pancharatnam",
    "partial_trace_ancilla",
    "purified_phase",
    "randomization_phase",
    "randomizing",
    "sequence_report",
    "tensor",
]
