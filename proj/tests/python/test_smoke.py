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

"""Smoke tests for the python bindings. Run directly: python test_smoke.py."""

import math

import numpy as np

import phasekit as pk


def test_depolarizing_visibility():
    ops = pk.depolarizing(0.3)
    assert len(ops) == 4
    rho = pk.bloch_to_density(0.2, -0.1, 0.4)
    pr = pk.cp_phase(ops, rho)
    assert pr.defined
    assert abs(pr.phase) < 1e-10
    assert abs(pr.visibility - math.sqrt(0.7)) < 1e-10


def test_bloch_shrink():
    out = pk.apply_kraus(pk.depolarizing(0.3), pk.bloch_to_density(0, 0, 1))
    x, y, z = pk.density_to_bloch(out)
    assert abs(z - 0.6) < 1e-10


def test_randomization_pi_over_4():
    r = pk.randomizing()
    s = 1 / math.sqrt(2)
    rho = np.outer([s, 1j * s], np.conj([s, 1j * s]))
    pr = pk.ancilla_phase(2, r["anc_dim"], r["unitary"], r["ancilla"], rho)
    assert abs(pr.phase - math.pi / 4) < 1e-10
    assert abs(pr.visibility - math.sqrt(2) / 4) < 1e-10
    closed = pk.randomization_phase(s, 1j * s)
    assert abs(closed.phase - math.pi / 4) < 1e-10


def test_dilate_round_trip():
    ops = pk.depolarizing(0.4)
    anc_dim, u = pk.dilate(ops)
    assert anc_dim == 4
    a0 = np.zeros(anc_dim, dtype=complex)
    a0[0] = 1.0
    back = pk.extract_kraus(2, anc_dim, u, a0)
    for want, got in zip(ops, back):
        assert np.max(np.abs(want - got)) < 1e-10


def test_bargmann_pi_over_4():
    s = 1 / math.sqrt(2)
    b = pk.bargmann3([1, 0], [s, s], [s, 1j * s])
    assert abs(b - (0.25 + 0.25j)) < 1e-12


def test_channels_equal():
    s = 1 / math.sqrt(2)
    mixture = [s * np.eye(2), s * np.diag([1, -1]).astype(complex)]
    projectors = [np.diag([1, 0]).astype(complex),
                  np.diag([0, 1]).astype(complex)]
    assert pk.channels_equal(mixture, projectors)
    assert not pk.channels_equal([np.eye(2, dtype=complex)],
                                 [np.array([[0, 1], [1, 0]], dtype=complex)])


def test_validation_errors_surface():
    try:
        pk.depolarizing(1.5)
    except pk.PhasekitError:
        pass
    else:
        raise AssertionError("expected PhasekitError")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
