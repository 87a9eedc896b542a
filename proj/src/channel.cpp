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

#include "phasekit/channel.hpp"

#include <cmath>
#include <utility>

namespace phasekit {

const Mat& KrausSet::op(Eigen::Index mu) const {
  if (mu < 0 || mu >= count()) {
    throw IndexOutOfRange("Kraus index " + std::to_string(mu) +
                          " out of range for K = " + std::to_string(count()));
  }
  return ops_[static_cast<size_t>(mu)];
}

double completeness_defect(const std::vector<Mat>& ops) {
  const Eigen::Index d = ops.front().rows();
  Mat sum = Mat::Zero(d, d);
  for (const Mat& e : ops) sum += e.adjoint() * e;
  return (sum - Mat::Identity(d, d)).norm();
}

KrausSet make_kraus_set(std::vector<Mat> ops) {
  if (ops.empty()) {
    throw ValidationError("Kraus set must be non-empty");
  }
  const Eigen::Index d = ops.front().rows();
  if (d == 0) throw DimensionMismatch("Kraus operators must be non-empty");
  for (const Mat& e : ops) {
    if (e.rows() != d || e.cols() != d) {
      throw DimensionMismatch("Kraus operators must all be " +
                              std::to_string(d) + "x" + std::to_string(d));
    }
    require_finite(e);
  }
  const double defect = completeness_defect(ops);
  if (defect > kEqTol) {
    throw CompletenessViolation("completeness defect " +
                                std::to_string(defect));
  }
  KrausSet k;
  k.sys_dim_ = d;
  k.redundant_ = static_cast<Eigen::Index>(ops.size()) > d * d;
  k.ops_ = std::move(ops);
  return k;
}

Dilation::Dilation(Eigen::Index sys_dim, Eigen::Index anc_dim, Mat unitary)
    : sys_dim_(sys_dim), anc_dim_(anc_dim), unitary_(std::move(unitary)) {
  if (sys_dim_ <= 0 || anc_dim_ <= 0) {
    throw DimensionMismatch("dilation dimensions must be positive");
  }
  const Eigen::Index joint = sys_dim_ * anc_dim_;
  if (unitary_.rows() != joint || unitary_.cols() != joint) {
    throw DimensionMismatch("dilation unitary must be " +
                            std::to_string(joint) + "-square");
  }
  require_finite(unitary_);
  require_unitary(unitary_);
}

DensityMatrix apply_kraus(const KrausSet& k, const DensityMatrix& rho) {
  if (k.sys_dim() != rho.dim()) {
    throw DimensionMismatch("Kraus set dim " + std::to_string(k.sys_dim()) +
                            " vs state dim " + std::to_string(rho.dim()));
  }
  Mat out = Mat::Zero(rho.dim(), rho.dim());
  for (const Mat& e : k.operators()) {
    out += e * rho.matrix() * e.adjoint();
  }
  // Symmetrize away roundoff before re-validating.
  out = 0.5 * (out + Mat(out.adjoint()));
  return DensityMatrix(std::move(out));
}

Dilation dilate(const KrausSet& k) {
  const Eigen::Index d = k.sys_dim();
  const Eigen::Index nk = k.count();
  const Eigen::Index joint = d * nk;

  // Block column for ancilla input |0>: U[(i,mu),(j,0)] = E_mu(i,j).
  // Completeness makes these d columns an isometry V.
  Mat iso(joint, d);
  for (Eigen::Index mu = 0; mu < nk; ++mu) {
    const Mat& e = k.op(mu);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        iso(i * nk + mu, j) = e(i, j);
      }
    }
  }

  // Orthonormal complement of the isometry's column span, via Householder QR
  // (deterministic).
  Eigen::HouseholderQR<Mat> qr(iso);
  Mat full_q = qr.householderQ() * Mat::Identity(joint, joint);
  Mat complement = full_q.rightCols(joint - d);

  Mat u(joint, joint);
  Eigen::Index next = 0;
  for (Eigen::Index col = 0; col < joint; ++col) {
    if (col % nk == 0) {
      u.col(col) = iso.col(col / nk);
    } else {
      u.col(col) = complement.col(next++);
    }
  }
  return Dilation(d, nk, std::move(u));
}

KrausSet extract_kraus(const Dilation& d, const AncillaState& a) {
  if (a.dim() != d.anc_dim()) {
    throw DimensionMismatch("ancilla dim " + std::to_string(a.dim()) +
                            " vs dilation anc_dim " +
                            std::to_string(d.anc_dim()));
  }
  const Eigen::Index sd = d.sys_dim();
  const Eigen::Index nk = d.anc_dim();
  const Mat& u = d.unitary();
  const CVec& amp = a.amplitudes();

  std::vector<Mat> ops;
  ops.reserve(static_cast<size_t>(nk));
  for (Eigen::Index mu = 0; mu < nk; ++mu) {
    Mat f = Mat::Zero(sd, sd);
    for (Eigen::Index i = 0; i < sd; ++i) {
      for (Eigen::Index j = 0; j < sd; ++j) {
        Complex sum = 0.0;
        for (Eigen::Index nu = 0; nu < nk; ++nu) {
          sum += u(i * nk + mu, j * nk + nu) * amp(nu);
        }
        f(i, j) = sum;
      }
    }
    ops.push_back(std::move(f));
  }
  return make_kraus_set(std::move(ops));
}

DensityMatrix apply_dilation(const Dilation& d, const AncillaState& a,
                             const DensityMatrix& rho) {
  if (a.dim() != d.anc_dim() || rho.dim() != d.sys_dim()) {
    throw DimensionMismatch("apply_dilation: incompatible dimensions");
  }
  const CVec& amp = a.amplitudes();
  Mat anc = amp * amp.adjoint();
  Mat joint = tensor(rho.matrix(), anc);
  Mat evolved = d.unitary() * joint * d.unitary().adjoint();
  Mat out = partial_trace_ancilla(evolved, d.sys_dim(), d.anc_dim());
  out = 0.5 * (out + Mat(out.adjoint()));
  return DensityMatrix(std::move(out));
}

Mat choi(const KrausSet& k) {
  const Eigen::Index d = k.sys_dim();
  Mat c = Mat::Zero(d * d, d * d);
  for (const Mat& e : k.operators()) {
    // (E x I)|Omega> is the row-major vectorization of E.
    CVec v(d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        v(i * d + j) = e(i, j);
      }
    }
    c += v * v.adjoint();
  }
  return c;
}

double choi_distance(const KrausSet& a, const KrausSet& b) {
  if (a.sys_dim() != b.sys_dim()) {
    throw DimensionMismatch("channels act on different dimensions");
  }
  return max_abs_diff(choi(a), choi(b));
}

bool channels_equal(const KrausSet& a, const KrausSet& b, double tol) {
  return choi_distance(a, b) <= tol;
}

}  // namespace phasekit
