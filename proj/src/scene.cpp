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

#include "phasekit/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phasekit/builtin.hpp"

namespace phasekit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

Complex parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    fail(path, "expected a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

CVec parse_vector(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array");
  CVec v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) =
        parse_complex(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

Mat parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array");
  const size_t rows = j.size();
  if (!j[0].is_array()) fail(path + "[0]", "expected a row array");
  const size_t cols = j[0].size();
  Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (size_t r = 0; r < rows; ++r) {
    const std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      fail(rpath, "ragged matrix row");
    }
    for (size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          parse_complex(j[r][c], rpath + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json dump_complex(Complex c) { return json::array({c.real(), c.imag()}); }

json dump_matrix(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(dump_complex(m(r, c)));
    }
    rows.push_back(row);
  }
  return rows;
}

// Re-raise a library error with the scene field path prepended.
template <typename Fn>
auto at_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    fail(path, e.what());
  } catch (const DimensionMismatch& e) {
    fail(path, e.what());
  } catch (const IndexOutOfRange& e) {
    fail(path, e.what());
  }
}

DensityMatrix parse_state(const json& j, Eigen::Index sys_dim) {
  if (!j.is_object()) fail("state", "expected an object");
  const std::string kind = j.value("kind", "");
  if (kind == "bloch") {
    if (!j.contains("r")) fail("state.r", "missing");
    const json& r = j["r"];
    if (!r.is_array() || r.size() != 3) fail("state.r", "expected [x,y,z]");
    if (sys_dim != 2) fail("state", "bloch states require system_dim 2");
    return at_path("state.r", [&] {
      return bloch_to_density(BlochVector{
          r[0].get<double>(), r[1].get<double>(), r[2].get<double>()});
    });
  }
  if (kind == "pure") {
    if (!j.contains("amplitudes")) fail("state.amplitudes", "missing");
    CVec v = parse_vector(j["amplitudes"], "state.amplitudes");
    if (v.size() != sys_dim) fail("state.amplitudes", "dim mismatch");
    return at_path("state.amplitudes", [&] {
      return DensityMatrix::from_pure(PureState(std::move(v)));
    });
  }
  if (kind == "density") {
    if (!j.contains("matrix")) fail("state.matrix", "missing");
    Mat m = parse_matrix(j["matrix"], "state.matrix");
    if (m.rows() != sys_dim) fail("state.matrix", "dim mismatch");
    return at_path("state.matrix",
                   [&] { return DensityMatrix(std::move(m)); });
  }
  fail("state.kind", "unknown kind '" + kind + "'");
}

}  // namespace

DensityMatrix Scene::bloch_identity() {
  return bloch_to_density(BlochVector{0, 0, 1});
}

const KrausSet& Scene::kraus_set() {
  if (!kraus) {
    kraus = extract_kraus(*dilation, ancilla_state());
  }
  return *kraus;
}

const Dilation& Scene::dilation_rep() {
  if (!dilation) {
    dilation = dilate(*kraus);
  }
  return *dilation;
}

AncillaState Scene::ancilla_state() {
  if (ancilla) return *ancilla;
  return AncillaState::basis(dilation_rep().anc_dim(), 0);
}

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed scene document: ") + e.what());
  }
  if (!doc.is_object()) throw SyntaxError("scene must be a JSON object");

  Scene scene;
  if (!doc.contains("system_dim") || !doc["system_dim"].is_number_integer()) {
    fail("system_dim", "missing or not an integer");
  }
  scene.sys_dim = doc["system_dim"].get<Eigen::Index>();
  if (scene.sys_dim < 1) fail("system_dim", "must be positive");

  if (!doc.contains("state")) fail("state", "missing");
  scene.state = parse_state(doc["state"], scene.sys_dim);

  if (!doc.contains("channel") || !doc["channel"].is_object()) {
    fail("channel", "missing or not an object");
  }
  const json& ch = doc["channel"];
  const std::string kind = ch.value("kind", "");
  if (kind == "kraus") {
    if (!ch.contains("operators")) fail("channel.operators", "missing");
    std::vector<Mat> ops;
    const json& arr = ch["operators"];
    if (!arr.is_array()) fail("channel.operators", "expected an array");
    for (size_t i = 0; i < arr.size(); ++i) {
      ops.push_back(parse_matrix(
          arr[i], "channel.operators[" + std::to_string(i) + "]"));
    }
    scene.kraus = at_path("channel.operators",
                          [&] { return make_kraus_set(std::move(ops)); });
    if (scene.kraus->sys_dim() != scene.sys_dim) {
      fail("channel.operators", "dim mismatch with system_dim");
    }
    scene.channel_kind = "kraus";
  } else if (kind == "dilation") {
    if (!ch.contains("anc_dim") || !ch.contains("unitary")) {
      fail("channel", "dilation needs anc_dim and unitary");
    }
    const Eigen::Index anc = ch["anc_dim"].get<Eigen::Index>();
    Mat u = parse_matrix(ch["unitary"], "channel.unitary");
    scene.dilation = at_path("channel.unitary", [&] {
      return Dilation(scene.sys_dim, anc, std::move(u));
    });
    scene.channel_kind = "dilation";
  } else if (kind == "builtin") {
    const std::string name = ch.value("name", "");
    if (name == "depolarizing") {
      if (!ch.contains("p")) fail("channel.p", "missing");
      if (scene.sys_dim != 2) fail("channel", "depolarizing is a qubit channel");
      scene.kraus = at_path(
          "channel.p", [&] { return depolarizing(ch["p"].get<double>()); });
    } else if (name == "randomizing") {
      if (scene.sys_dim != 2) fail("channel", "randomizing is a qubit channel");
      Randomizing r = randomizing();
      scene.kraus = std::move(r.kraus);
      scene.dilation = std::move(r.dilation);
      scene.ancilla = std::move(r.ancilla);
    } else if (name == "conditional_unitary") {
      if (!ch.contains("unitaries")) fail("channel.unitaries", "missing");
      ConditionalUnitarySpec spec;
      const json& arr = ch["unitaries"];
      if (!arr.is_array()) fail("channel.unitaries", "expected an array");
      for (size_t i = 0; i < arr.size(); ++i) {
        spec.unitaries.push_back(parse_matrix(
            arr[i], "channel.unitaries[" + std::to_string(i) + "]"));
      }
      if (static_cast<Eigen::Index>(spec.unitaries.size()) != scene.sys_dim) {
        fail("channel.unitaries", "need one unitary per system basis state");
      }
      scene.dilation = at_path("channel.unitaries",
                               [&] { return conditional_unitary(spec); });
    } else {
      fail("channel.name", "unknown builtin '" + name + "'");
    }
    scene.channel_kind = "builtin:" + name;
  } else {
    fail("channel.kind", "unknown kind '" + kind + "'");
  }

  if (doc.contains("ancilla")) {
    const json& anc = doc["ancilla"];
    if (!anc.is_object() || !anc.contains("amplitudes")) {
      fail("ancilla.amplitudes", "missing");
    }
    scene.ancilla = at_path("ancilla.amplitudes", [&] {
      return AncillaState(
          PureState(parse_vector(anc["amplitudes"], "ancilla.amplitudes")));
    });
    if (scene.dilation && scene.ancilla->dim() != scene.dilation->anc_dim()) {
      fail("ancilla.amplitudes", "dim mismatch with dilation ancilla");
    }
  }

  if (doc.contains("options")) {
    const json& opt = doc["options"];
    if (!opt.is_object()) fail("options", "expected an object");
    if (opt.contains("mu")) scene.mu = opt["mu"].get<Eigen::Index>();
    if (opt.contains("tol")) scene.tol = opt["tol"].get<double>();
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open scene file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

std::string scene_to_json_with_dilation(const Scene& scene,
                                        const Dilation& d) {
  json doc;
  doc["system_dim"] = scene.sys_dim;
  doc["state"] = {{"kind", "density"},
                  {"matrix", dump_matrix(scene.state.matrix())}};
  doc["channel"] = {{"kind", "dilation"},
                    {"anc_dim", d.anc_dim()},
                    {"unitary", dump_matrix(d.unitary())}};
  return doc.dump(2) + "\n";
}

}  // namespace phasekit
