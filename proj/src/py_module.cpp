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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phasekit/builtin.hpp"
#include "phasekit/channel.hpp"
#include "phasekit/compose.hpp"
#include "phasekit/matcore.hpp"
#include "phasekit/phase.hpp"
#include "phasekit/purify.hpp"

namespace py = pybind11;
using namespace phasekit;

namespace {

KrausSet kraus_from_list(const std::vector<Mat>& ops) {
  return make_kraus_set(ops);
}

std::vector<Mat> kraus_to_list(const KrausSet& k) { return k.operators(); }

Dilation dilation_from(Eigen::Index sys_dim, Eigen::Index anc_dim,
                       const Mat& u) {
  return Dilation(sys_dim, anc_dim, u);
}

py::dict result_to_dict(const PhaseResult& pr) {
  py::dict d;
  d["phase"] = pr.phase;
  d["visibility"] = pr.visibility;
  d["defined"] = pr.defined;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "relative phase shifts of quantum states under quantum operations";

  py::register_exception<Error>(m, "PhasekitError");

  py::class_<PhaseResult>(m, "PhaseResult")
      .def_readonly("phase", &PhaseResult::phase)
      .def_readonly("visibility", &PhaseResult::visibility)
      .def_readonly("defined", &PhaseResult::defined)
      .def("__repr__", [](const PhaseResult& pr) {
        return "PhaseResult(phase=" + std::to_string(pr.phase) +
               ", visibility=" + std::to_string(pr.visibility) +
               ", defined=" + (pr.defined ? std::string("True") : "False") +
               ")";
      });

  m.def("bloch_to_density", [](double x, double y, double z) {
    return bloch_to_density(BlochVector{x, y, z}).matrix();
  });
  m.def("density_to_bloch", [](const Mat& rho) {
    BlochVector r = density_to_bloch(DensityMatrix(rho));
    return py::make_tuple(r.x, r.y, r.z);
  });
  m.def("tensor", [](const Mat& a, const Mat& b) { return tensor(a, b); });
  m.def("partial_trace_ancilla", &partial_trace_ancilla);

  m.def("apply_kraus", [](const std::vector<Mat>& ops, const Mat& rho) {
    return apply_kraus(kraus_from_list(ops), DensityMatrix(rho)).matrix();
  });
  m.def("dilate", [](const std::vector<Mat>& ops) {
    Dilation d = dilate(kraus_from_list(ops));
    return py::make_tuple(d.anc_dim(), d.unitary());
  });
  m.def("extract_kraus",
        [](Eigen::Index sys_dim, Eigen::Index anc_dim, const Mat& u,
           const CVec& ancilla) {
          return kraus_to_list(extract_kraus(
              dilation_from(sys_dim, anc_dim, u), AncillaState(PureState(ancilla))));
        });
  m.def("apply_dilation",
        [](Eigen::Index sys_dim, Eigen::Index anc_dim, const Mat& u,
           const CVec& ancilla, const Mat& rho) {
          return apply_dilation(dilation_from(sys_dim, anc_dim, u),
                                AncillaState(PureState(ancilla)),
                                DensityMatrix(rho))
              .matrix();
        });
  m.def("choi", [](const std::vector<Mat>& ops) {
    return choi(kraus_from_list(ops));
  });
  m.def("channels_equal",
        [](const std::vector<Mat>& a, const std::vector<Mat>& b, double tol) {
          return channels_equal(kraus_from_list(a), kraus_from_list(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = kEqTol);

  m.def("pancharatnam", [](const CVec& a, const CVec& b) {
    return pancharatnam(PureState(a), PureState(b));
  });
  m.def("mixed_unitary_phase", [](const Mat& rho, const Mat& u) {
    return mixed_unitary_phase(DensityMatrix(rho), u);
  });
  m.def("cp_phase",
        [](const std::vector<Mat>& ops, const Mat& rho, Eigen::Index mu) {
          return cp_phase_mu(kraus_from_list(ops), DensityMatrix(rho), mu);
        },
        py::arg("ops"), py::arg("rho"), py::arg("mu") = 0);
  m.def("effective_operator",
        [](Eigen::Index sys_dim, Eigen::Index anc_dim, const Mat& u,
           const CVec& ancilla) {
          return effective_operator(dilation_from(sys_dim, anc_dim, u),
                                    AncillaState(PureState(ancilla)));
        });
  m.def("ancilla_phase",
        [](Eigen::Index sys_dim, Eigen::Index anc_dim, const Mat& u,
           const CVec& ancilla, const Mat& rho) {
          return ancilla_phase(dilation_from(sys_dim, anc_dim, u),
                               AncillaState(PureState(ancilla)),
                               DensityMatrix(rho));
        });
  m.def("in_phase",
        [](Eigen::Index sys_dim, Eigen::Index anc_dim, const Mat& u,
           const CVec& ancilla, const Mat& rho, double tol) {
          return in_phase(dilation_from(sys_dim, anc_dim, u),
                          AncillaState(PureState(ancilla)),
                          DensityMatrix(rho), tol);
        },
        py::arg("sys_dim"), py::arg("anc_dim"), py::arg("u"),
        py::arg("ancilla"), py::arg("rho"), py::arg("tol") = kEqTol);

  m.def("purified_phase",
        [](Eigen::Index sys_dim, Eigen::Index anc_dim, const Mat& u,
           const Mat& rho, const CVec& ancilla, Eigen::Index mu) {
          return purified_phase(dilation_from(sys_dim, anc_dim, u),
                                DensityMatrix(rho),
                                AncillaState(PureState(ancilla)), mu);
        });

  m.def("bargmann3", [](const CVec& a, const CVec& b, const CVec& c) {
    return bargmann3(PureState(a), PureState(b), PureState(c));
  });
  m.def("compose_kraus",
        [](const std::vector<Mat>& first, const std::vector<Mat>& second) {
          return kraus_to_list(
              compose_kraus(kraus_from_list(first), kraus_from_list(second)));
        });
  m.def("sequence_report",
        [](const Mat& rho, Eigen::Index sys_dim, Eigen::Index anc1,
           const Mat& u1, const CVec& a1, Eigen::Index anc2, const Mat& u2,
           const CVec& a2) {
          SequenceReport r = sequence_report(
              DensityMatrix(rho), dilation_from(sys_dim, anc1, u1),
              AncillaState(PureState(a1)), dilation_from(sys_dim, anc2, u2),
              AncillaState(PureState(a2)));
          py::dict d;
          d["phi_12"] = result_to_dict(r.phi_12);
          d["phi_23"] = result_to_dict(r.phi_23);
          d["phi_13"] = result_to_dict(r.phi_13);
          d["mismatch"] = r.mismatch;
          d["mismatch_defined"] = r.mismatch_defined;
          d["bargmann"] = r.bargmann;
          d["eq22_literal"] = result_to_dict(r.eq22_literal);
          return d;
        });

  m.def("depolarizing", [](double p) {
    return kraus_to_list(depolarizing(p));
  });
  m.def("randomizing", [] {
    Randomizing r = randomizing();
    py::dict d;
    d["kraus"] = kraus_to_list(r.kraus);
    d["anc_dim"] = r.dilation.anc_dim();
    d["unitary"] = r.dilation.unitary();
    d["ancilla"] = CVec(r.ancilla.amplitudes());
    return d;
  });
  m.def("conditional_unitary", [](const std::vector<Mat>& unitaries) {
    Dilation d = conditional_unitary(ConditionalUnitarySpec{unitaries});
    return py::make_tuple(d.anc_dim(), d.unitary());
  });
  m.def("randomization_phase", [](Complex alpha, Complex beta) {
    return randomization_phase(alpha, beta);
  });
}
