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

#include "phasekit/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "phasekit/compose.hpp"
#include "phasekit/phase.hpp"

namespace phasekit {

namespace {

std::string fmt_fixed(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::string fmt_sig(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double display_angle(double radians, bool degrees) {
  return degrees ? radians * 180.0 / M_PI : radians;
}

/// The phase selected by a scene: per-outcome Tr(E_mu rho) when a mu index
/// is requested, otherwise the ancilla-weighted phase for channels carrying
/// a dilation, otherwise the index-0 Kraus phase.
PhaseResult scene_phase(Scene& scene, std::optional<Eigen::Index> mu) {
  if (!mu) mu = scene.mu;
  if (mu) {
    return cp_phase_mu(scene.kraus_set(), scene.state, *mu);
  }
  if (scene.dilation || scene.ancilla) {
    return ancilla_phase(scene.dilation_rep(), scene.ancilla_state(),
                         scene.state);
  }
  return cp_phase(scene.kraus_set(), scene.state);
}

void print_phase_line(const std::string& label, const PhaseResult& pr,
                      bool degrees, std::ostream& out) {
  if (pr.defined) {
    out << label << " " << fmt_fixed(display_angle(pr.phase, degrees))
        << ", visibility " << fmt_fixed(pr.visibility) << "\n";
  } else {
    out << label << " undefined (visibility < 1e-12)\n";
  }
}

}  // namespace

int cmd_phase(Scene& scene, std::optional<Eigen::Index> mu, bool degrees,
              std::ostream& out) {
  const PhaseResult pr = scene_phase(scene, mu);
  print_phase_line("phase", pr, degrees, out);
  return pr.defined ? kExitOk : kExitUndefined;
}

int cmd_fringe(Scene& scene, int samples, const std::string& out_path,
               std::ostream& out) {
  if (samples < 2) {
    throw ValidationError("fringe needs at least 2 samples");
  }
  const PhaseResult pr = scene_phase(scene, std::nullopt);
  std::vector<double> chi(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    chi[static_cast<size_t>(i)] = 2.0 * M_PI * i / samples;
  }
  const auto rows = fringe(pr, chi);

  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    out << "cannot open output file: " << out_path << "\n";
    return kExitIo;
  }
  f << "chi,intensity\n";
  for (const auto& [x, intensity] : rows) {
    f << fmt_sig(x) << "," << fmt_sig(intensity) << "\n";
  }
  if (!f.good()) return kExitIo;
  out << "wrote " << samples << " samples to " << out_path << "\n";
  return kExitOk;
}

int cmd_compose(Scene& scene1, Scene& scene2, bool degrees,
                std::ostream& out) {
  const SequenceReport report =
      sequence_report(scene1.state, scene1.dilation_rep(),
                      scene1.ancilla_state(), scene2.dilation_rep(),
                      scene2.ancilla_state());
  print_phase_line("phi_12", report.phi_12, degrees, out);
  print_phase_line("phi_23", report.phi_23, degrees, out);
  print_phase_line("phi_13", report.phi_13, degrees, out);
  if (!report.mismatch_defined) {
    out << "mismatch undefined (a visibility vanished)\n";
    return kExitUndefined;
  }
  out << "mismatch " << fmt_fixed(display_angle(report.mismatch, degrees))
      << "\n";
  out << "bargmann_arg "
      << fmt_fixed(display_angle(std::arg(report.bargmann), degrees)) << "\n";
  print_phase_line("eq22_literal", report.eq22_literal, degrees, out);
  return kExitOk;
}

int cmd_inphase(Scene& scene, std::optional<double> tol, std::ostream& out) {
  double t = tol ? *tol : scene.tol.value_or(kEqTol);
  if (in_phase(scene.dilation_rep(), scene.ancilla_state(), scene.state, t)) {
    out << "in-phase\n";
    return kExitOk;
  }
  const PhaseResult pr = ancilla_phase(scene.dilation_rep(),
                                       scene.ancilla_state(), scene.state);
  out << "not in-phase, phase " << fmt_fixed(pr.phase) << "\n";
  return kExitNotInPhase;
}

int cmd_check(Scene& scene, std::ostream& out) {
  const Mat& m = scene.state.matrix();
  out << "state.hermiticity_defect " << fmt_sig(max_abs_diff(m, m.adjoint()))
      << "\n";
  out << "state.trace_defect " << fmt_sig(std::abs(m.trace() - Complex(1.0)))
      << "\n";
  const EigenSystem es = hermitian_eigensystem(m);
  out << "state.min_eigenvalue " << fmt_sig(es.values(es.values.size() - 1))
      << "\n";
  const KrausSet& k = scene.kraus_set();
  out << "channel.completeness_defect "
      << fmt_sig(completeness_defect(k.operators())) << "\n";
  if (k.redundant()) {
    out << "channel.warning kraus count " << k.count() << " exceeds dim^2\n";
  }
  const Mat& u = scene.dilation_rep().unitary();
  out << "channel.unitarity_defect "
      << fmt_sig(max_abs_diff(u.adjoint() * u,
                              Mat::Identity(u.rows(), u.cols())))
      << "\n";
  out << "ancilla.norm_defect "
      << fmt_sig(std::abs(scene.ancilla_state().amplitudes().norm() - 1.0))
      << "\n";
  return kExitOk;
}

int cmd_equal(Scene& a, Scene& b, std::optional<double> tol,
              std::ostream& out) {
  const double t = tol.value_or(kEqTol);
  const double dist = choi_distance(a.kraus_set(), b.kraus_set());
  out << "choi_distance " << fmt_sig(dist) << "\n";
  out << (dist <= t ? "equal" : "not equal") << "\n";
  return kExitOk;
}

int cmd_dilate(Scene& scene, const std::string& out_path, std::ostream& out) {
  const Dilation& d = scene.dilation_rep();
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    out << "cannot open output file: " << out_path << "\n";
    return kExitIo;
  }
  f << scene_to_json_with_dilation(scene, d);
  if (!f.good()) return kExitIo;
  out << "wrote dilation scene to " << out_path << "\n";
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"relative phase shifts of quantum states under quantum operations"};
  app.require_subcommand(1);

  std::string scene_path, scene2_path, out_path;
  std::optional<Eigen::Index> mu;
  std::optional<double> tol;
  bool degrees = false;
  int samples = 256;

  auto* phase = app.add_subcommand("phase", "relative phase of a scene");
  phase->add_option("scene", scene_path)->required();
  Eigen::Index mu_raw = -1;
  phase->add_option("--mu", mu_raw, "per-outcome Kraus index");
  phase->add_flag("--degrees", degrees, "display angles in degrees");

  auto* fr = app.add_subcommand("fringe", "interference fringe CSV");
  fr->add_option("scene", scene_path)->required();
  fr->add_option("--samples", samples, "number of chi samples");
  fr->add_option("--out", out_path)->required();

  auto* comp = app.add_subcommand("compose", "two-operation sequence report");
  comp->add_option("scene1", scene_path)->required();
  comp->add_option("scene2", scene2_path)->required();
  comp->add_flag("--degrees", degrees, "display angles in degrees");

  auto* inph = app.add_subcommand("inphase", "in-phase channel test");
  inph->add_option("scene", scene_path)->required();
  double tol_raw = -1.0;
  inph->add_option("--tol", tol_raw, "tolerance");

  auto* check = app.add_subcommand("check", "print invariant defects");
  check->add_option("scene", scene_path)->required();

  auto* eq = app.add_subcommand("equal", "compare two channels");
  eq->add_option("sceneA", scene_path)->required();
  eq->add_option("sceneB", scene2_path)->required();
  eq->add_option("--tol", tol_raw, "tolerance");

  auto* dil = app.add_subcommand("dilate", "emit a unitary dilation scene");
  dil->add_option("scene", scene_path)->required();
  dil->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (mu_raw >= 0) mu = mu_raw;
  if (tol_raw >= 0.0) tol = tol_raw;

  try {
    Scene scene = load_scene(scene_path);
    if (app.got_subcommand(phase)) return cmd_phase(scene, mu, degrees, out);
    if (app.got_subcommand(fr)) return cmd_fringe(scene, samples, out_path, out);
    if (app.got_subcommand(comp)) {
      Scene scene2 = load_scene(scene2_path);
      return cmd_compose(scene, scene2, degrees, out);
    }
    if (app.got_subcommand(inph)) return cmd_inphase(scene, tol, out);
    if (app.got_subcommand(check)) return cmd_check(scene, out);
    if (app.got_subcommand(eq)) {
      Scene scene2 = load_scene(scene2_path);
      return cmd_equal(scene, scene2, tol, out);
    }
    if (app.got_subcommand(dil)) return cmd_dilate(scene, out_path, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace phasekit
