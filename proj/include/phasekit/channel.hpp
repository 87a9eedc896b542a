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

#include <vector>

#include "phasekit/matcore.hpp"

namespace phasekit {

/// Ordered operator-sum representation {E_mu} of a trace-preserving CP map.
/// Index 0 is the designated interference-carrying element; see the phase
/// module for how the relative phase depends on this choice.
class KrausSet {
 public:
  Eigen::Index sys_dim() const { return sys_dim_; }
  Eigen::Index count() const { return static_cast<Eigen::Index>(ops_.size()); }
  const Mat& op(Eigen::Index mu) const;
  const std::vector<Mat>& operators() const { return ops_; }

  /// True when more operators were supplied than sys_dim^2; accepted with a
  /// warning since users may supply redundant representations.
  bool redundant() const { return redundant_; }

  friend KrausSet make_kraus_set(std::vector<Mat> ops);

 private:
  KrausSet() = default;
  Eigen::Index sys_dim_ = 0;
  std::vector<Mat> ops_;
  bool redundant_ = false;
};

/// Norm of the completeness defect || sum E^dag E - I ||_F of a raw list.
double completeness_defect(const std::vector<Mat>& ops);

KrausSet make_kraus_set(std::vector<Mat> ops);

/// Unit-norm preparation of the ancilla, |A> = sum_mu a_mu |mu>.
class AncillaState {
 public:
  explicit AncillaState(PureState state) : state_(std::move(state)) {}

  Eigen::Index dim() const { return state_.dim(); }
  const CVec& amplitudes() const { return state_.amplitudes(); }
  const PureState& state() const { return state_; }

  static AncillaState basis(Eigen::Index dim, Eigen::Index k) {
    return AncillaState(PureState::basis(dim, k));
  }

 private:
  PureState state_;
};

/// Joint unitary on system (slow factor) x ancilla (fast factor) realizing a
/// CP map; with a preparation |A> it induces Kraus operators <mu|U|A>.
class Dilation {
 public:
  Dilation(Eigen::Index sys_dim, Eigen::Index anc_dim, Mat unitary);

  Eigen::Index sys_dim() const { return sys_dim_; }
  Eigen::Index anc_dim() const { return anc_dim_; }
  const Mat& unitary() const { return unitary_; }

 private:
  Eigen::Index sys_dim_;
  Eigen::Index anc_dim_;
  Mat unitary_;
};

DensityMatrix apply_kraus(const KrausSet& k, const DensityMatrix& rho);

/// Build a unitary dilation with anc_dim = K: the block column for ancilla
/// input |0> holds the stacked Kraus operators, the remaining columns are
/// completed to an orthonormal set by a Householder QR (deterministic).
Dilation dilate(const KrausSet& k);

/// Kraus operators F_mu = <mu|U|A> induced by a dilation and an ancilla
/// preparation.
KrausSet extract_kraus(const Dilation& d, const AncillaState& a);

/// Tr_a[U (rho x |A><A|) U^dag]; agrees with the extract_kraus route.
DensityMatrix apply_dilation(const Dilation& d, const AncillaState& a,
                             const DensityMatrix& rho);

/// Choi matrix sum_mu (E_mu x I)|Omega><Omega|(E_mu x I)^dag with |Omega> the
/// unnormalized maximally entangled vector; canonical channel fingerprint.
Mat choi(const KrausSet& k);

double choi_distance(const KrausSet& a, const KrausSet& b);
bool channels_equal(const KrausSet& a, const KrausSet& b, double tol = kEqTol);

}  // namespace phasekit
