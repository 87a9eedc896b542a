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

#include "phasekit/phase.hpp"

#include <cmath>

namespace phasekit {

PhaseResult phase_from_amplitude(Complex amp) {
  PhaseResult r;
  r.visibility = std::abs(amp);
  r.defined = r.visibility > kPhaseEps;
  // atan2-based Arg keeps the quadrant; wrap moves the -pi branch cut
  // endpoint onto +pi.
  r.phase = r.defined ? wrap_angle(std::arg(amp)) : 0.0;
  return r;
}

PhaseResult pancharatnam(const PureState& psi1, const PureState& psi2) {
  if (psi1.dim() != psi2.dim()) {
    throw DimensionMismatch("pancharatnam: state dims differ");
  }
  return phase_from_amplitude(psi1.amplitudes().dot(psi2.amplitudes()));
}

PhaseResult mixed_unitary_phase(const DensityMatrix& rho, const Mat& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw DimensionMismatch("mixed_unitary_phase: dims differ");
  }
  require_unitary(u);
  return phase_from_amplitude((rho.matrix() * u).trace());
}

PhaseResult cp_phase(const KrausSet& k, const DensityMatrix& rho) {
  return cp_phase_mu(k, rho, 0);
}

PhaseResult cp_phase_mu(const KrausSet& k, const DensityMatrix& rho,
                        Eigen::Index mu) {
  if (k.sys_dim() != rho.dim()) {
    throw DimensionMismatch("cp_phase: channel vs state dims differ");
  }
  return phase_from_amplitude((k.op(mu) * rho.matrix()).trace());
}

Mat effective_operator(const Dilation& d, const AncillaState& a) {
  if (a.dim() != d.anc_dim()) {
    throw DimensionMismatch("effective_operator: ancilla dim mismatch");
  }
  const Eigen::Index sd = d.sys_dim();
  const Eigen::Index nk = d.anc_dim();
  const Mat& u = d.unitary();
  const CVec& amp = a.amplitudes();
  Mat n = Mat::Zero(sd, sd);
  for (Eigen::Index i = 0; i < sd; ++i) {
    for (Eigen::Index j = 0; j < sd; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index mu = 0; mu < nk; ++mu) {
        for (Eigen::Index nu = 0; nu < nk; ++nu) {
          sum += std::conj(amp(mu)) * u(i * nk + mu, j * nk + nu) * amp(nu);
        }
      }
      n(i, j) = sum;
    }
  }
  return n;
}

PhaseResult ancilla_phase(const Dilation& d, const AncillaState& a,
                          const DensityMatrix& rho) {
  if (rho.dim() != d.sys_dim()) {
    throw DimensionMismatch("ancilla_phase: state dim mismatch");
  }
  Mat n = effective_operator(d, a);
  return phase_from_amplitude((rho.matrix() * n).trace());
}

bool in_phase(const Dilation& d, const AncillaState& a,
              const DensityMatrix& rho, double tol) {
  Mat n = effective_operator(d, a);
  const Complex amp = (rho.matrix() * n).trace();
  return std::abs(amp.imag()) <= tol * std::max(1.0, std::abs(amp)) &&
         amp.real() > tol;
}

std::vector<std::pair<double, double>> fringe(
    const PhaseResult& pr, const std::vector<double>& chi_samples) {
  if (!std::isfinite(pr.phase) || !std::isfinite(pr.visibility)) {
    throw ValidationError("fringe: non-finite phase result");
  }
  std::vector<std::pair<double, double>> out;
  out.reserve(chi_samples.size());
  for (double chi : chi_samples) {
    out.emplace_back(chi, 1.0 + pr.visibility * std::cos(chi - pr.phase));
  }
  return out;
}

}  // namespace phasekit
