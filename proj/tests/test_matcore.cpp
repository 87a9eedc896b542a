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

#include "phasekit/matcore.hpp"
#include "test_util.hpp"

using namespace phasekit;
namespace tu = phasekit::testutil;

TEST_CASE("bloch_to_density on the poles and center") {
  Mat north(2, 2);
  north << 1, 0, 0, 0;
  CHECK(max_abs_diff(bloch_to_density({0, 0, 1}).matrix(), north) < kExactTol);

  CHECK(max_abs_diff(bloch_to_density({0, 0, 0}).matrix(),
                     0.5 * identity(2)) < kExactTol);

  Mat plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  CHECK(max_abs_diff(bloch_to_density({1, 0, 0}).matrix(), plus) < kExactTol);
}

TEST_CASE("bloch vector outside the ball is rejected") {
  CHECK_THROWS_AS(bloch_to_density({1.0, 1.0, 0.0}), BlochOutOfBall);
}

TEST_CASE("density_to_bloch basics") {
  BlochVector r = density_to_bloch(DensityMatrix(0.5 * identity(2)));
  CHECK(std::abs(r.x) < kExactTol);
  CHECK(std::abs(r.y) < kExactTol);
  CHECK(std::abs(r.z) < kExactTol);

  r = density_to_bloch(bloch_to_density({0, 0, 1}));
  CHECK(r.z == doctest::Approx(1.0).epsilon(1e-12));

  r = density_to_bloch(DensityMatrix(0.5 * (identity(2) + 0.3 * pauli_x())));
  CHECK(r.x == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(std::abs(r.y) < kExactTol);
}

TEST_CASE("density_to_bloch rejects non-qubit input") {
  CHECK_THROWS_AS(density_to_bloch(DensityMatrix(identity(3) / 3.0)),
                  DimensionMismatch);
}

TEST_CASE("bloch round trip on random states") {
  tu::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    BlochVector r = tu::random_bloch(rng);
    BlochVector back = density_to_bloch(bloch_to_density(r));
    CHECK(std::abs(back.x - r.x) < kExactTol);
    CHECK(std::abs(back.y - r.y) < kExactTol);
    CHECK(std::abs(back.z - r.z) < kExactTol);
  }
}

TEST_CASE("tensor product shapes and entries") {
  CHECK(max_abs_diff(tensor(identity(2), identity(2)), identity(4)) == 0.0);

  Mat p0 = Mat::Zero(2, 2);
  p0(0, 0) = 1.0;
  Mat t = tensor(pauli_x(), p0);
  CHECK(t.rows() == 4);
  CHECK(std::abs(t(0, 2) - Complex(1.0)) < kExactTol);
  CHECK(std::abs(t(2, 0) - Complex(1.0)) < kExactTol);
  CHECK(t.cwiseAbs().sum() == doctest::Approx(2.0));

  tu::Rng rng(3);
  Mat a = tu::random_matrix(2, 2, rng);
  Mat b = tu::random_matrix(3, 3, rng);
  CHECK(tensor(a, b).rows() == 6);
  CHECK(tensor(a, b).cols() == 6);
}

TEST_CASE("tensor is associative") {
  tu::Rng rng(7);
  Mat a = tu::random_matrix(2, 2, rng);
  Mat b = tu::random_matrix(2, 3, rng);
  Mat c = tu::random_matrix(3, 2, rng);
  CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) <
        kExactTol);
}

TEST_CASE("partial trace over the ancilla") {
  tu::Rng rng(5);

  SUBCASE("product state identity") {
    Mat rho = tu::random_hermitian(2, rng);
    Mat sigma = tu::random_hermitian(3, rng);
    Mat reduced = partial_trace_ancilla(tensor(rho, sigma), 2, 3);
    CHECK(max_abs_diff(reduced, sigma.trace() * rho) < kExactTol);
  }

  SUBCASE("Bell state reduces to I/2") {
    CVec bell = CVec::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    Mat reduced = partial_trace_ancilla(bell * bell.adjoint(), 2, 2);
    CHECK(max_abs_diff(reduced, 0.5 * identity(2)) < kExactTol);
  }

  SUBCASE("random Hermitian against the index-summation oracle") {
    Mat m = tu::random_hermitian(4, rng);
    Mat got = partial_trace_ancilla(m, 2, 2);
    // Independent double-loop summation over the ancilla index.
    Mat want = Mat::Zero(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        want(i, j) = m(2 * i + 0, 2 * j + 0) + m(2 * i + 1, 2 * j + 1);
      }
    }
    CHECK(max_abs_diff(got, want) == 0.0);
    CHECK(std::abs(got.trace() - m.trace()) < kExactTol);
  }

  SUBCASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(partial_trace_ancilla(identity(4), 2, 3),
                    DimensionMismatch);
  }
}

TEST_CASE("pure state validation") {
  CVec bad(2);
  bad << 1.0, 1.0;
  CHECK_THROWS_AS(PureState{bad}, NormInvalid);
  CHECK_NOTHROW(PureState::basis(4, 2));
  CHECK_THROWS_AS(PureState::basis(2, 2), IndexOutOfRange);
}

TEST_CASE("density matrix validation") {
  Mat not_herm(2, 2);
  not_herm << 0.5, Complex(0.1, 0.2), 0.3, 0.5;
  CHECK_THROWS_AS(DensityMatrix{not_herm}, ValidationError);

  CHECK_THROWS_AS(DensityMatrix{identity(2)}, ValidationError);  // trace 2

  Mat not_psd(2, 2);
  not_psd << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{not_psd}, ValidationError);
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
  CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(3 * M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(0.5) == doctest::Approx(0.5));
  CHECK(wrap_angle(2 * M_PI + 0.25) == doctest::Approx(0.25));
  CHECK(circular_distance(M_PI - 1e-3, -M_PI + 1e-3) ==
        doctest::Approx(2e-3).epsilon(1e-6));
}

TEST_CASE("hermitian eigensystem is correct and deterministic") {
  tu::Rng rng(13);
  Mat m = tu::random_hermitian(4, rng);
  EigenSystem es = hermitian_eigensystem(m);
  for (Eigen::Index k = 0; k < 4; ++k) {
    CHECK((m * es.vectors.col(k) - es.values(k) * es.vectors.col(k)).norm() <
          1e-10);
    if (k > 0) CHECK(es.values(k) <= es.values(k - 1));
  }
  EigenSystem again = hermitian_eigensystem(m);
  CHECK(max_abs_diff(es.vectors, again.vectors) == 0.0);
}
