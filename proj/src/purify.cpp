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

#include "phasekit/purify.hpp"

#include <cmath>

namespace phasekit {

Purification purify(const DensityMatrix& rho, const AncillaState& a) {
  const Eigen::Index d = rho.dim();
  const Eigen::Index nk = a.dim();
  EigenSystem es = hermitian_eigensystem(rho.matrix());

  CVec v = CVec::Zero(d * nk * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double w = std::max(es.values(k), 0.0);  // clip eigenvalue roundoff
    if (w == 0.0) continue;
    const double sw = std::sqrt(w);
    for (Eigen::Index i = 0; i < d; ++i) {
      const Complex c = sw * es.vectors(i, k);
      for (Eigen::Index m = 0; m < nk; ++m) {
        v((i * nk + m) * d + k) = c * a.amplitudes()(m);
      }
    }
  }
  v.normalize();
  return Purification{d, nk, d, PureState(std::move(v))};
}

Mat flip_operator(Eigen::Index anc_dim, Eigen::Index mu) {
  if (mu < 0 || mu >= anc_dim) {
    throw IndexOutOfRange("flip index " + std::to_string(mu) +
                          " out of range for anc_dim " +
                          std::to_string(anc_dim));
  }
  Mat f = Mat::Identity(anc_dim, anc_dim);
  if (mu != 0) {
    f(0, 0) = 0.0;
    f(mu, mu) = 0.0;
    f(0, mu) = 1.0;
    f(mu, 0) = 1.0;
  }
  return f;
}

PhaseResult purified_phase(const Dilation& d, const DensityMatrix& rho,
                           const AncillaState& a, Eigen::Index mu) {
  if (rho.dim() != d.sys_dim() || a.dim() != d.anc_dim()) {
    throw DimensionMismatch("purified_phase: incompatible dimensions");
  }
  if (mu < 0 || mu >= d.anc_dim()) {
    throw IndexOutOfRange("purified_phase: mu = " + std::to_string(mu));
  }
  Purification p = purify(rho, a);
  const Mat i_sys = identity(p.sys_dim);
  const Mat i_aux = identity(p.aux_dim);

  Mat target_op = tensor(d.unitary(), i_aux);
  Mat reference_op =
      tensor(tensor(i_sys, flip_operator(p.anc_dim, mu)), i_aux);

  PureState target(target_op * p.vector.amplitudes());
  PureState reference(reference_op * p.vector.amplitudes());
  return pancharatnam(reference, target);
}

}  // namespace phasekit
