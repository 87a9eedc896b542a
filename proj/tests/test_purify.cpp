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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phasekit/builtin.hpp"
#include "phasekit/purify.hpp"
#include "test_util.hpp"

using namespace phasekit;
namespace tu = phasekit::testutil;

namespace {

// Reduced system state of a purification, traced over ancilla and auxiliary.
Mat reduced_system(const Purification& p) {
  const CVec& v = p.vector.amplitudes();
  Mat joint = v * v.adjoint();
  return partial_trace_ancilla(joint, p.sys_dim, p.anc_dim * p.aux_dim);
}

}  // namespace

TEST_CASE("purify recovers the state on the system factor") {
  tu::Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    const Eigen::Index dim = 2 + (i % 3);
    const Eigen::Index anc = 1 + (i % 4);
    DensityMatrix rho = tu::random_density(dim, rng);
    AncillaState a = tu::random_ancilla(anc, rng);
    Purification p = purify(rho, a);
    CHECK(p.sys_dim == dim);
    CHECK(p.anc_dim == anc);
    CHECK(p.aux_dim == dim);
    CHECK(max_abs_diff(reduced_system(p), rho.matrix()) < 1e-10);
  }
}

TEST_CASE("purify of a pure state is a product with the ancilla") {
  tu::Rng rng(52);
  PureState psi = tu::random_pure(2, rng);
  AncillaState a = tu::random_ancilla(3, rng);
  Purification p = purify(DensityMatrix::from_pure(psi), a);
  // |Psi> = |psi>|A>|0'> up to the eigenvector's fixed global phase, so the
  // squared overlap with that product must be 1.
  CVec product = tensor(tensor(psi.amplitudes(), CVec(a.amplitudes())),
                        CVec(PureState::basis(2, 0).amplitudes()));
  CHECK(std::abs(std::abs(product.dot(p.vector.amplitudes())) - 1.0) < 1e-10);
}

TEST_CASE("purify is deterministic") {
  tu::Rng rng(53);
  DensityMatrix rho = tu::random_density(3, rng);
  AncillaState a = tu::random_ancilla(2, rng);
  CVec first = purify(rho, a).vector.amplitudes();
  CVec again = purify(rho, a).vector.amplitudes();
  CHECK(max_abs_diff(Mat(first), Mat(again)) == 0.0);
}

TEST_CASE("flip_operator") {
  SUBCASE("is the identity for mu = 0") {
    CHECK(max_abs_diff(flip_operator(4, 0), identity(4)) == 0.0);
  }

  SUBCASE("exchanges |0> and |mu> and is involutive") {
    for (Eigen::Index mu = 1; mu < 4; ++mu) {
      Mat f = flip_operator(4, mu);
      CHECK(max_abs_diff(f * f, identity(4)) == 0.0);
      CHECK(is_unitary(f));
      CVec e0 = PureState::basis(4, 0).amplitudes();
      CVec emu = PureState::basis(4, mu).amplitudes();
      CHECK(max_abs_diff(Mat(f * e0), Mat(emu)) == 0.0);
      CHECK(max_abs_diff(Mat(f * emu), Mat(e0)) == 0.0);
    }
  }

  SUBCASE("mu out of range") {
    CHECK_THROWS_AS(flip_operator(3, 3), IndexOutOfRange);
  }
}

TEST_CASE("purified_phase agrees with the per-outcome trace for a = |0>") {
  tu::Rng rng(54);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Index dim = 2 + (i % 2);
    const Eigen::Index anc = 2 + (i % 3);
    Dilation d = tu::random_dilation(dim, anc, rng);
    DensityMatrix rho = tu::random_density(dim, rng);
    AncillaState a0 = AncillaState::basis(anc, 0);
    KrausSet k = extract_kraus(d, a0);
    for (Eigen::Index mu = 0; mu < anc; ++mu) {
      PhaseResult via_pure = purified_phase(d, rho, a0, mu);
      PhaseResult via_trace = cp_phase_mu(k, rho, mu);
      CHECK(via_pure.defined == via_trace.defined);
      if (via_trace.defined) {
        CHECK(circular_distance(via_pure.phase, via_trace.phase) < 1e-9);
        CHECK(via_pure.visibility ==
              doctest::Approx(via_trace.visibility).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("purified_phase on the depolarizing channel") {
  Dilation d = dilate(depolarizing(0.3));
  AncillaState a0 = AncillaState::basis(4, 0);

  SUBCASE("mu = 0 visibility is sqrt(1 - p) * Tr(rho)") {
    tu::Rng rng(55);
    PhaseResult pr = purified_phase(d, tu::random_density(2, rng), a0, 0);
    CHECK(pr.phase == doctest::Approx(0.0));
    CHECK(pr.visibility == doctest::Approx(std::sqrt(0.7)).epsilon(1e-10));
  }

  SUBCASE("mu = 3 on a z-polarized state") {
    PhaseResult pr =
        purified_phase(d, bloch_to_density({0, 0, 0.5}), a0, 3);
    CHECK(pr.phase == doctest::Approx(0.0));
    CHECK(pr.visibility ==
          doctest::Approx(std::sqrt(0.1) * 0.5).epsilon(1e-10));
  }

  SUBCASE("mu = 1 on the maximally mixed state is undefined") {
    PhaseResult pr =
        purified_phase(d, DensityMatrix(0.5 * identity(2)), a0, 1);
    CHECK_FALSE(pr.defined);
  }
}

TEST_CASE("purified_phase of a unitary channel is the mixed-state phase") {
  tu::Rng rng(56);
  for (int i = 0; i < 20; ++i) {
    Mat u = tu::random_unitary(2, rng);
    DensityMatrix rho = tu::random_density(2, rng);
    PhaseResult pure_route =
        purified_phase(Dilation(2, 1, u), rho, AncillaState::basis(1, 0), 0);
    PhaseResult trace_route = mixed_unitary_phase(rho, u);
    if (trace_route.defined) {
      CHECK(circular_distance(pure_route.phase, trace_route.phase) < 1e-10);
      CHECK(pure_route.visibility ==
            doctest::Approx(trace_route.visibility).epsilon(1e-10));
    }
  }
}

TEST_CASE("purified_phase validates mu") {
  tu::Rng rng(57);
  Dilation d = tu::random_dilation(2, 2, rng);
  CHECK_THROWS_AS(purified_phase(d, tu::random_density(2, rng),
                                 AncillaState::basis(2, 0), 2),
                  IndexOutOfRange);
}
