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

#include "phasekit/builtin.hpp"

#include <cmath>
#include <utility>

namespace phasekit {

KrausSet depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParamOutOfRange("depolarizing probability p = " + std::to_string(p));
  }
  const double s0 = std::sqrt(1.0 - p);
  const double s = std::sqrt(p / 3.0);
  std::vector<Mat> ops;
  ops.push_back(s0 * identity(2));
  ops.push_back(s * pauli_x());
  ops.push_back(s * pauli_y());
  ops.push_back(s * pauli_z());
  return make_kraus_set(std::move(ops));
}

Randomizing randomizing() {
  const Complex i(0.0, 1.0);
  std::vector<Mat> blocks = {identity(2), pauli_x(), i * pauli_y(), pauli_z()};

  std::vector<Mat> ops;
  for (const Mat& b : blocks) ops.push_back(0.5 * b);
  KrausSet kraus = make_kraus_set(std::move(ops));

  // Block unitary: ancilla sector mu applies blocks[mu] to the system.
  // System is the slow tensor factor.
  Mat u = Mat::Zero(8, 8);
  for (Eigen::Index mu = 0; mu < 4; ++mu) {
    for (Eigen::Index r = 0; r < 2; ++r) {
      for (Eigen::Index c = 0; c < 2; ++c) {
        u(r * 4 + mu, c * 4 + mu) = blocks[static_cast<size_t>(mu)](r, c);
      }
    }
  }
  Dilation dilation(2, 4, std::move(u));

  CVec a = CVec::Constant(4, Complex(0.5, 0.0));
  return Randomizing{std::move(kraus), std::move(dilation),
                     AncillaState(PureState(std::move(a)))};
}

Dilation conditional_unitary(const ConditionalUnitarySpec& spec) {
  if (spec.unitaries.empty()) {
    throw ValidationError("conditional unitary needs at least one block");
  }
  const Eigen::Index sd = static_cast<Eigen::Index>(spec.unitaries.size());
  const Eigen::Index ad = spec.unitaries.front().rows();
  for (const Mat& u : spec.unitaries) {
    if (u.rows() != ad || u.cols() != ad) {
      throw DimensionMismatch("conditional unitary blocks must share dims");
    }
    require_unitary(u);
  }
  Mat joint = Mat::Zero(sd * ad, sd * ad);
  for (Eigen::Index i = 0; i < sd; ++i) {
    joint.block(i * ad, i * ad, ad, ad) = spec.unitaries[static_cast<size_t>(i)];
  }
  return Dilation(sd, ad, std::move(joint));
}

PhaseResult conditional_phase(
    const std::vector<std::pair<double, PureState>>& weights,
    const ConditionalUnitarySpec& spec, const AncillaState& a) {
  if (weights.empty()) {
    throw WeightSumInvalid("empty ensemble");
  }
  double weight_sum = 0.0;
  for (const auto& [p, psi] : weights) weight_sum += p;
  if (std::abs(weight_sum - 1.0) > kEqTol) {
    throw WeightSumInvalid("ensemble weights sum to " +
                           std::to_string(weight_sum));
  }
  const Eigen::Index sd = static_cast<Eigen::Index>(spec.unitaries.size());

  // <A|u_i|A> per system basis state.
  std::vector<Complex> overlaps;
  for (const Mat& u : spec.unitaries) {
    if (u.rows() != a.dim()) {
      throw DimensionMismatch("conditional_phase: ancilla dim mismatch");
    }
    overlaps.push_back(a.amplitudes().dot(u * a.amplitudes()));
  }

  double re = 0.0;
  double im = 0.0;
  for (const auto& [p, psi] : weights) {
    if (psi.dim() != sd) {
      throw DimensionMismatch("conditional_phase: ensemble state dim");
    }
    for (Eigen::Index idx = 0; idx < sd; ++idx) {
      const double c2 = std::norm(psi.amplitude(idx));
      re += p * c2 * overlaps[static_cast<size_t>(idx)].real();
      im += p * c2 * overlaps[static_cast<size_t>(idx)].imag();
    }
  }
  return phase_from_amplitude(Complex(re, im));
}

PhaseResult randomization_phase(Complex alpha, Complex beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kEqTol) {
    throw NormInvalid("randomization_phase: |alpha|^2 + |beta|^2 != 1");
  }
  const Complex ab = std::conj(alpha) * beta;
  const double re =
      0.25 * (1.0 + 2.0 * ab.real() + std::norm(alpha) - std::norm(beta));
  const double im = 0.5 * ab.imag();
  return phase_from_amplitude(Complex(re, im));
}

double randomization_phase_printed_form(Complex alpha, Complex beta) {
  const Complex ab = alpha * std::conj(beta);
  const double num = 1.0 + 2.0 * ab.imag();
  const double den =
      1.0 + 2.0 * ab.real() + std::norm(alpha) - std::norm(beta);
  return std::atan(num / den);
}

}  // namespace phasekit
