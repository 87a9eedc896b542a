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

#include "phasekit/compose.hpp"

#include <cmath>
#include <utility>

namespace phasekit {

KrausSet compose_kraus(const KrausSet& first, const KrausSet& second) {
  if (first.sys_dim() != second.sys_dim()) {
    throw DimensionMismatch("compose_kraus: system dims differ");
  }
  std::vector<Mat> ops;
  ops.reserve(static_cast<size_t>(first.count() * second.count()));
  for (Eigen::Index nu = 0; nu < second.count(); ++nu) {
    for (Eigen::Index mu = 0; mu < first.count(); ++mu) {
      ops.push_back(second.op(nu) * first.op(mu));
    }
  }
  return make_kraus_set(std::move(ops));
}

Complex bargmann3(const PureState& v1, const PureState& v2,
                  const PureState& v3) {
  if (v1.dim() != v2.dim() || v2.dim() != v3.dim()) {
    throw DimensionMismatch("bargmann3: state dims differ");
  }
  const CVec& a = v1.amplitudes();
  const CVec& b = v2.amplitudes();
  const CVec& c = v3.amplitudes();
  return a.dot(b) * b.dot(c) * c.dot(a);
}

Dilation embed_ancilla(const Dilation& d, Eigen::Index anc_dim) {
  if (anc_dim < d.anc_dim()) {
    throw DimensionMismatch("embed_ancilla: target ancilla smaller");
  }
  if (anc_dim == d.anc_dim()) return d;
  const Eigen::Index sd = d.sys_dim();
  const Eigen::Index k0 = d.anc_dim();
  Mat w = Mat::Zero(sd * anc_dim, sd * anc_dim);
  for (Eigen::Index i = 0; i < sd; ++i) {
    for (Eigen::Index j = 0; j < sd; ++j) {
      for (Eigen::Index m = 0; m < k0; ++m) {
        for (Eigen::Index n = 0; n < k0; ++n) {
          w(i * anc_dim + m, j * anc_dim + n) =
              d.unitary()(i * k0 + m, j * k0 + n);
        }
      }
    }
    // Added ancilla basis states are left untouched.
    for (Eigen::Index m = k0; m < anc_dim; ++m) {
      w(i * anc_dim + m, i * anc_dim + m) = 1.0;
    }
  }
  return Dilation(sd, anc_dim, std::move(w));
}

AncillaState embed_ancilla_state(const AncillaState& a, Eigen::Index anc_dim) {
  if (anc_dim < a.dim()) {
    throw DimensionMismatch("embed_ancilla_state: target ancilla smaller");
  }
  if (anc_dim == a.dim()) return a;
  CVec v = CVec::Zero(anc_dim);
  v.head(a.dim()) = a.amplitudes();
  return AncillaState(PureState(std::move(v)));
}

namespace {

// Deterministic unitary mapping |from> to |to> (Householder completion of
// each vector to a basis, then the basis change between them).
Mat basis_change(const CVec& from, const CVec& to) {
  const Eigen::Index n = from.size();
  auto complete = [n](const CVec& v) {
    const Mat column = v;
    Eigen::HouseholderQR<Mat> qr(column);
    Mat q = qr.householderQ() * Mat::Identity(n, n);
    const Complex c = v.dot(q.col(0));  // q.col(0) = c * v with |c| = 1
    q.col(0) *= std::conj(c) / std::abs(c);
    return q;
  };
  Mat b_from = complete(from);
  Mat b_to = complete(to);
  return b_to * b_from.adjoint();
}

}  // namespace

SequenceReport sequence_report(const DensityMatrix& rho, const Dilation& d1,
                               const AncillaState& a1, const Dilation& d2,
                               const AncillaState& a2) {
  if (d1.sys_dim() != rho.dim() || d2.sys_dim() != rho.dim()) {
    throw DimensionMismatch("sequence_report: system dims differ");
  }
  const Eigen::Index k = std::max(d1.anc_dim(), d2.anc_dim());
  const Dilation u1 = embed_ancilla(d1, k);
  const Dilation u2 = embed_ancilla(d2, k);
  const AncillaState prep1 = embed_ancilla_state(a1, k);
  const AncillaState prep2 = embed_ancilla_state(a2, k);

  // Second unitary re-expressed on the shared ancilla prepared in |a1>: the
  // preparation difference is a local ancilla rotation, so V = U2 (I x u)
  // with u|a1> = |a2> has Kraus elements <mu|U2|a2> relative to |a1>.
  Mat v = u2.unitary();
  if ((prep1.amplitudes() - prep2.amplitudes()).norm() > kExactTol) {
    Mat u = basis_change(prep1.amplitudes(), prep2.amplitudes());
    v = u2.unitary() * tensor(identity(rho.dim()), u);
  }

  const CVec& amp1 = prep1.amplitudes();
  Mat joint0 = tensor(rho.matrix(), Mat(amp1 * amp1.adjoint()));
  Mat sigma = u1.unitary() * joint0 * u1.unitary().adjoint();
  Mat sigma2 = v * sigma * v.adjoint();

  // Purified inner products collapse to joint traces:
  //   <Psi|Psi'> = Tr[U1 rho_sa], <Psi'|Psi''> = Tr[V sigma],
  //   <Psi|Psi''> = Tr[V U1 rho_sa].
  const Complex z12 = (u1.unitary() * joint0).trace();
  const Complex z23 = (v * sigma).trace();
  const Complex z13 = (v * u1.unitary() * joint0).trace();

  SequenceReport report;
  report.phi_12 = phase_from_amplitude(z12);
  report.phi_23 = phase_from_amplitude(z23);
  report.phi_13 = phase_from_amplitude(z13);
  report.bargmann = z12 * z23 * std::conj(z13);
  report.mismatch_defined =
      report.phi_12.defined && report.phi_23.defined && report.phi_13.defined;
  report.mismatch =
      report.mismatch_defined
          ? wrap_angle(report.phi_12.phase + report.phi_23.phase -
                       report.phi_13.phase)
          : 0.0;

  // Naive Eq.-(22)-style product of index-0 elements, for comparison.
  Mat rho1 = partial_trace_ancilla(sigma, rho.dim(), k);
  Mat rho2 = partial_trace_ancilla(sigma2, rho.dim(), k);
  const Mat e0 = extract_kraus(d1, a1).op(0);
  const Mat f0 = extract_kraus(d2, a2).op(0);
  const Mat g0 = f0 * e0;
  report.eq22_literal = phase_from_amplitude((e0 * rho.matrix()).trace() *
                                             (f0 * rho1).trace() *
                                             (g0 * rho2).trace());
  return report;
}

}  // namespace phasekit
