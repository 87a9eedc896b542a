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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace phasekit {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Module-wide tolerances.
inline constexpr double kEqTol = 1e-9;      // validation of physical invariants
inline constexpr double kOracleTol = 1e-9;  // cross-route checks
inline constexpr double kExactTol = 1e-12;  // algebraic identities
inline constexpr double kPhaseEps = 1e-12;  // visibility below this => phase undefined

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct BlochOutOfBall : ValidationError {
  using ValidationError::ValidationError;
};
struct NotUnitary : ValidationError {
  using ValidationError::ValidationError;
};
struct CompletenessViolation : ValidationError {
  using ValidationError::ValidationError;
};
struct ParamOutOfRange : ValidationError {
  using ValidationError::ValidationError;
};
struct NormInvalid : ValidationError {
  using ValidationError::ValidationError;
};
struct WeightSumInvalid : ValidationError {
  using ValidationError::ValidationError;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};

/// Real 3-vector r with |r| <= 1, parameterizing a qubit state
/// rho = (I + r.sigma)/2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double length() const;
};

/// Normalized complex amplitude vector.
class PureState {
 public:
  explicit PureState(CVec amplitudes);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const CVec& amplitudes() const { return amplitudes_; }
  Complex amplitude(Eigen::Index i) const { return amplitudes_(i); }

  /// Computational basis state |k> in the given dimension.
  static PureState basis(Eigen::Index dim, Eigen::Index k);

 private:
  CVec amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat m);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Mat& matrix() const { return matrix_; }

  static DensityMatrix from_pure(const PureState& psi);

 private:
  Mat matrix_;
};

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();
Mat identity(Eigen::Index dim);

DensityMatrix bloch_to_density(const BlochVector& r);
BlochVector density_to_bloch(const DensityMatrix& rho);

/// Kronecker product, left factor slow.
Mat tensor(const Mat& a, const Mat& b);
CVec tensor(const CVec& a, const CVec& b);

/// Trace out the fast (right) tensor factor of a (sys*anc)-square matrix.
Mat partial_trace_ancilla(const Mat& m, Eigen::Index sys_dim, Eigen::Index anc_dim);

/// Trace out the slow (left) tensor factor.
Mat partial_trace_system(const Mat& m, Eigen::Index sys_dim, Eigen::Index anc_dim);

bool is_unitary(const Mat& u, double tol = kEqTol);
void require_unitary(const Mat& u, double tol = kEqTol);
void require_finite(const Mat& m);

/// Largest entry magnitude of a - b.
double max_abs_diff(const Mat& a, const Mat& b);

/// Wrap an angle into (-pi, pi].
double wrap_angle(double theta);

/// Distance between two angles on the circle.
double circular_distance(double a, double b);

/// Hermitian eigendecomposition with eigenvalues sorted descending and a
/// deterministic phase/tie-break convention: each eigenvector's first entry
/// of magnitude > 1e-12 is made real positive, ties on eigenvalue broken by
/// lexicographic (Re, Im) order of the eigenvector entries.
struct EigenSystem {
  Eigen::VectorXd values;  // descending
  Mat vectors;             // columns
};
EigenSystem hermitian_eigensystem(const Mat& m);

}  // namespace phasekit
