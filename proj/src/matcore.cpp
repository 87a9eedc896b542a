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

#include "phasekit/matcore.hpp"

#include <cmath>

namespace phasekit {

double BlochVector::length() const { return std::sqrt(x * x + y * y + z * z); }

PureState::PureState(CVec amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw ValidationError("pure state must have positive dimension");
  }
  require_finite(amplitudes_);
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kEqTol) {
    throw NormInvalid("pure state norm^2 = " + std::to_string(norm2) +
                      ", expected 1");
  }
}

PureState PureState::basis(Eigen::Index dim, Eigen::Index k) {
  if (k < 0 || k >= dim) {
    throw IndexOutOfRange("basis index " + std::to_string(k) +
                          " out of range for dim " + std::to_string(dim));
  }
  CVec v = CVec::Zero(dim);
  v(k) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(Mat m) : matrix_(std::move(m)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw DimensionMismatch("density matrix must be square and non-empty");
  }
  require_finite(matrix_);
  const double herm_defect = max_abs_diff(matrix_, matrix_.adjoint());
  if (herm_defect > kEqTol) {
    throw ValidationError("density matrix not Hermitian, defect " +
                          std::to_string(herm_defect));
  }
  const double trace_defect = std::abs(matrix_.trace() - Complex(1.0));
  if (trace_defect > kEqTol) {
    throw ValidationError("density matrix trace defect " +
                          std::to_string(trace_defect));
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(matrix_,
                                            Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kEqTol) {
    throw ValidationError("density matrix not PSD, min eigenvalue " +
                          std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVec& v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat identity(Eigen::Index dim) { return Mat::Identity(dim, dim); }

DensityMatrix bloch_to_density(const BlochVector& r) {
  if (r.length() > 1.0 + kEqTol) {
    throw BlochOutOfBall("Bloch vector length " + std::to_string(r.length()) +
                         " exceeds 1");
  }
  Mat m = 0.5 * (identity(2) + r.x * pauli_x() + r.y * pauli_y() +
                 r.z * pauli_z());
  return DensityMatrix(std::move(m));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw DimensionMismatch("Bloch vector defined for qubits only, got dim " +
                            std::to_string(rho.dim()));
  }
  const Mat& m = rho.matrix();
  BlochVector r;
  r.x = (m * pauli_x()).trace().real();
  r.y = (m * pauli_y()).trace().real();
  r.z = (m * pauli_z()).trace().real();
  return r;
}

Mat tensor(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVec tensor(const CVec& a, const CVec& b) {
  CVec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Mat partial_trace_ancilla(const Mat& m, Eigen::Index sys_dim,
                          Eigen::Index anc_dim) {
  if (m.rows() != m.cols() || m.rows() != sys_dim * anc_dim) {
    throw DimensionMismatch("partial trace expects a (sys*anc)-square matrix");
  }
  Mat out = Mat::Zero(sys_dim, sys_dim);
  for (Eigen::Index i = 0; i < sys_dim; ++i) {
    for (Eigen::Index j = 0; j < sys_dim; ++j) {
      Complex sum = 0.0;
      for (Eigen::Index a = 0; a < anc_dim; ++a) {
        sum += m(i * anc_dim + a, j * anc_dim + a);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

Mat partial_trace_system(const Mat& m, Eigen::Index sys_dim,
                         Eigen::Index anc_dim) {
  if (m.rows() != m.cols() || m.rows() != sys_dim * anc_dim) {
    throw DimensionMismatch("partial trace expects a (sys*anc)-square matrix");
  }
  Mat out = Mat::Zero(anc_dim, anc_dim);
  for (Eigen::Index a = 0; a < anc_dim; ++a) {
    for (Eigen::Index b = 0; b < anc_dim; ++b) {
      Complex sum = 0.0;
      for (Eigen::Index i = 0; i < sys_dim; ++i) {
        sum += m(i * anc_dim + a, i * anc_dim + b);
      }
      out(a, b) = sum;
    }
  }
  return out;
}

bool is_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols()))
             .cwiseAbs()
             .maxCoeff() <= tol;
}

void require_unitary(const Mat& u, double tol) {
  if (!is_unitary(u, tol)) {
    throw NotUnitary("matrix is not unitary within tolerance " +
                     std::to_string(tol));
  }
}

void require_finite(const Mat& m) {
  if (!m.allFinite()) {
    throw ValidationError("matrix contains NaN/Inf entries");
  }
}

double max_abs_diff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double wrap_angle(double theta) {
  const double two_pi = 2.0 * M_PI;
  double t = std::fmod(theta, two_pi);
  if (t <= -M_PI) t += two_pi;
  if (t > M_PI) t -= two_pi;
  return t;
}

double circular_distance(double a, double b) {
  return std::abs(wrap_angle(a - b));
}

namespace {

// Lexicographic (Re, Im) order on column entries, used only as a tie-break.
bool column_less(const Mat& m, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex& x = m(i, a);
    const Complex& y = m(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

EigenSystem hermitian_eigensystem(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error("eigendecomposition failed");
  }
  const Eigen::Index n = m.rows();
  Mat vecs = solver.eigenvectors();
  Eigen::VectorXd vals = solver.eigenvalues();

  // Fix each eigenvector's overall phase.
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(vecs(i, c)) > 1e-12) {
        vecs.col(c) *= std::abs(vecs(i, c)) / vecs(i, c);
        break;
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (vals(a) != vals(b)) return vals(a) > vals(b);
    return column_less(vecs, a, b);
  });

  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = vals(order[static_cast<size_t>(i)]);
    out.vectors.col(i) = vecs.col(order[static_cast<size_t>(i)]);
  }
  return out;
}

}  // namespace phasekit
