#include "symcap/scene_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace symcap {

namespace {

json cplx_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::bad_input, "expected [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json set_to_json(const PlanarSet& set) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        json j;
        if constexpr (std::is_same_v<T, Polygon>) {
          j["type"] = "polygon";
          json verts = json::array();
          for (const cplx& v : s.vertices) verts.push_back(cplx_to_json(v));
          j["vertices"] = verts;
        } else if constexpr (std::is_same_v<T, Disk>) {
          j["type"] = "disk";
          j["center"] = cplx_to_json(s.center);
          j["radius"] = s.radius;
        } else if constexpr (std::is_same_v<T, Circle>) {
          j["type"] = "circle";
          j["center"] = cplx_to_json(s.center);
          j["radius"] = s.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          j["type"] = "segment";
          j["p"] = cplx_to_json(s.p);
          j["q"] = cplx_to_json(s.q);
        } else {
          j["type"] = "union";
          json parts = json::array();
          for (const PlanarSet& p : s.parts) parts.push_back(set_to_json(p));
          j["parts"] = parts;
        }
        return j;
      },
      set.shape);
}

PlanarSet set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw Error(ErrorCode::bad_input, "set object needs a \"type\" field");
  const std::string type = j["type"].get<std::string>();
  if (type == "polygon") {
    Polygon p;
    for (const json& v : j.at("vertices")) p.vertices.push_back(cplx_from_json(v));
    return PlanarSet{p};
  }
  if (type == "disk")
    return PlanarSet{Disk{cplx_from_json(j.at("center")), j.at("radius").get<double>()}};
  if (type == "circle")
    return PlanarSet{Circle{cplx_from_json(j.at("center")), j.at("radius").get<double>()}};
  if (type == "segment")
    return PlanarSet{Segment{cplx_from_json(j.at("p")), cplx_from_json(j.at("q"))}};
  if (type == "union") {
    ConnectedUnion u;
    for (const json& p : j.at("parts")) u.parts.push_back(set_from_json(p));
    return PlanarSet{u};
  }
  throw Error(ErrorCode::bad_input, "unknown set type \"" + type + "\"");
}

json scene_to_json(const Scene& scene) {
  json j;
  if (!scene.name.empty()) j["name"] = scene.name;
  j["set"] = set_to_json(scene.set);
  if (scene.inner) j["inner"] = set_to_json(*scene.inner);
  return j;
}

Scene scene_from_json(const json& j) {
  Scene scene;
  if (j.contains("name")) scene.name = j["name"].get<std::string>();
  scene.set = set_from_json(j.at("set"));
  if (j.contains("inner")) scene.inner = set_from_json(j["inner"]);
  return scene;
}

json map_to_json(const ExteriorMap& map) {
  json j;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, DiskMapData>) {
          j["type"] = "disk";
          j["center"] = cplx_to_json(p.center);
          j["radius"] = p.radius;
        } else if constexpr (std::is_same_v<T, SegmentMapData>) {
          j["type"] = "segment";
          j["p"] = cplx_to_json(p.p);
          j["q"] = cplx_to_json(p.q);
        } else if constexpr (std::is_same_v<T, SlitDiskMapData>) {
          j["type"] = "slit_disk";
          j["w0"] = cplx_to_json(p.w0);
          j["phi"] = p.phi;
          j["R"] = p.R;
          j["lambda"] = p.lambda;
        } else if constexpr (std::is_same_v<T, RectangleMapData>) {
          j["type"] = "rectangle";
          j["c"] = p.params.c;
          j["k"] = p.params.k;
          j["alpha"] = p.params.alpha;
          j["beta"] = p.params.beta;
          j["gamma"] = p.params.gamma;
        } else {
          j["type"] = "sc";
          json angles = json::array();
          for (double a : p->prevertex_angles) angles.push_back(a);
          j["prevertex_angles"] = angles;
          json turn = json::array();
          for (double t : p->turn) turn.push_back(t);
          j["turn"] = turn;
          j["C"] = cplx_to_json(p->C);
          j["residual"] = p->residual;
        }
      },
      map.payload());
  j["coefficients"] = {{"a1", cplx_to_json(map.a1())},
                       {"a0", cplx_to_json(map.a0())},
                       {"a_minus1", cplx_to_json(map.a_minus1())}};
  j["error_estimate"] = map.coeff_error();
  return j;
}

json inequality_report_to_json(const InequalityReport& report) {
  json j;
  j["name"] = inequality_name(report.name);
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["slack"] = report.slack;
  j["tol"] = report.tol;
  j["pass"] = report.pass;
  j["inputs"] = report.inputs_digest;
  if (!report.notes.empty()) {
    json notes;
    for (const auto& [k, v] : report.notes) notes[k] = v;
    j["notes"] = notes;
  }
  return j;
}

json capacity_report_to_json(const CapacityReport& report) {
  json j;
  j["logcap"] = report.logcap;
  j["functional"] = report.functional;
  j["hcap_valid"] = report.hcap_valid;
  switch (report.method) {
    case CapacityMethod::coefficients: j["method"] = "coefficients"; break;
    case CapacityMethod::monte_carlo: j["method"] = "monte_carlo"; break;
    case CapacityMethod::fekete: j["method"] = "fekete"; break;
  }
  j["error_estimate"] = report.error_estimate;
  return j;
}

json monte_carlo_to_json(const MonteCarloEstimate& est) {
  return {{"estimate", est.estimate}, {"stderr", est.stderr_}};
}

std::string corpus_csv(const std::vector<CorpusItemResult>& results) {
  std::ostringstream os;
  os.precision(15);
  os << "scene,name,lhs,rhs,slack,pass\n";
  for (const CorpusItemResult& item : results) {
    if (!item.error.empty()) {
      os << item.name << ",error,,,," << '"' << item.error << '"' << "\n";
      continue;
    }
    for (const InequalityReport& r : item.reports)
      os << item.name << "," << inequality_name(r.name) << "," << r.lhs << "," << r.rhs << ","
         << r.slack << "," << (r.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

Scene load_scene_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::bad_input, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::bad_input, "JSON parse error in " + path + ": " + e.what());
  }
  Scene scene = scene_from_json(j);
  if (scene.name.empty())
    scene.name = std::filesystem::path(path).stem().string();
  return scene;
}

void save_scene_file(const std::string& path, const Scene& scene) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::bad_input, "cannot write " + path);
  out << scene_to_json(scene).dump(2) << "\n";
}

std::vector<Scene> load_corpus_dir(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  std::vector<Scene> scenes;
  for (const std::string& f : files) scenes.push_back(load_scene_file(f));
  return scenes;
}

}  // namespace symcap
