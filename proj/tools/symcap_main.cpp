// symcap: symmetrization and exterior-map capacity checks for planar scenes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "symcap/capacity.hpp"
#include "symcap/inequality.hpp"
#include "symcap/scene_io.hpp"

namespace {

using namespace symcap;

void emit(const json& j, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw Error(ErrorCode::bad_input, "cannot write " + output_path);
  out << j.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw Error(ErrorCode::bad_input, "cannot write " + output_path);
  out << text;
}

/// Sigma-normalized view of a scene: set scaled by 1/|a1| so that the exterior
/// map has a1 = 1. Points and lengths supplied in original coordinates must be
/// scaled by the same factor before comparing against class-Sigma bounds.
struct SigmaView {
  PlanarSet set;
  double scale = 1.0;
  ExteriorMap map;
};

SigmaView sigma_view(const PlanarSet& set) {
  const PlanarSet checked = validate(set);
  ExteriorMap f = exterior_map_of(checked);
  const double s = 1.0 / std::abs(f.a1());
  return SigmaView{transformed(checked, 0.0, s, 0.0), s, f.normalized_sigma()};
}

int cmd_symmetrize(const std::string& scene_path, const std::string& output, bool circle,
                   double v, int resolution) {
  Scene scene = load_scene_file(scene_path);
  if (circle) {
    const SampledRadialSet radial = circle_symmetrize(validate(scene.set), v, resolution);
    json j;
    j["name"] = scene.name;
    j["v"] = v;
    json rays = json::array();
    for (const auto& s : radial.samples) rays.push_back(json::array({s.theta, s.R}));
    j["rays"] = rays;
    emit(j, output);
    return 0;
  }
  Scene out;
  out.name = scene.name.empty() ? "symmetrized" : scene.name + "_star";
  out.set = steiner_symmetrize(validate(scene.set), resolution);
  json j = scene_to_json(out);
  j["area"] = area(out.set);
  emit(j, output);
  return 0;
}

int cmd_map(const std::string& scene_path, const std::string& output, double rho, int samples) {
  const Scene scene = load_scene_file(scene_path);
  const ExteriorMap f = exterior_map_of(validate(scene.set));
  json j = map_to_json(f);
  const LaurentCoefficients lc = laurent_coefficients(f, rho, samples);
  j["laurent_check"] = {{"a1", json::array({lc.a1.real(), lc.a1.imag()})},
                        {"a0", json::array({lc.a0.real(), lc.a0.imag()})},
                        {"a_minus1", json::array({lc.am1.real(), lc.am1.imag()})},
                        {"error_estimate", lc.error_estimate}};
  emit(j, output);
  return 0;
}

int cmd_capacity(const std::string& scene_path, const std::string& output,
                 const std::string& method, std::uint64_t seed, std::int64_t walkers, double eps,
                 int fekete_points) {
  const Scene scene = load_scene_file(scene_path);
  const PlanarSet set = validate(scene.set);
  json j;
  if (method == "coeff") {
    const ExteriorMap f = exterior_map_of(set);
    j = capacity_report_to_json(capacity_report(f, set));
  } else if (method == "mc") {
    const MonteCarloEstimate est =
        eps > 0.0 ? hcap_monte_carlo(set, 25.0 * set_diameter(set), walkers, eps, seed)
                  : hcap_monte_carlo_default(set, walkers, seed);
    j = monte_carlo_to_json(est);
    j["method"] = "monte_carlo";
    j["walkers"] = walkers;
    j["seed"] = seed;
  } else if (method == "fekete") {
    j["logcap"] = logcap_fekete(set, fekete_points);
    j["method"] = "fekete";
    j["points"] = fekete_points;
  } else {
    throw Error(ErrorCode::bad_input, "unknown method \"" + method + "\"");
  }
  emit(j, output);
  return 0;
}

int cmd_verify(const std::string& corpus_dir, const std::string& output,
               const std::string& csv_path, double tol) {
  std::vector<Scene> corpus =
      corpus_dir.empty() ? builtin_corpus() : load_corpus_dir(corpus_dir);
  CorpusConfig config;
  if (tol > 0.0) config.tol_closed_form = config.tol_sc = tol;
  const std::vector<CorpusItemResult> results = run_corpus(corpus, config);

  json j = json::array();
  bool all_ok = true;
  std::ostringstream plot;
  plot.precision(15);
  plot << "scene,functional_E,functional_Estar,slack\n";
  for (const CorpusItemResult& item : results) {
    json ji;
    ji["scene"] = item.name;
    ji["ok"] = item.ok;
    if (!item.error.empty()) ji["error"] = item.error;
    json reports = json::array();
    for (const InequalityReport& r : item.reports) {
      reports.push_back(inequality_report_to_json(r));
      // theorem1 row: rhs = functional(E), lhs = functional(E*).
      if (r.name == InequalityName::theorem1)
        plot << item.name << "," << r.rhs << "," << r.lhs << "," << r.slack << "\n";
    }
    ji["reports"] = reports;
    j.push_back(ji);
    all_ok = all_ok && item.ok;
  }
  emit(j, output);
  if (!csv_path.empty()) {
    emit_text(corpus_csv(results), csv_path);
    const std::string plot_path = csv_path == "-" ? "-" : csv_path + ".plot.csv";
    emit_text(plot.str(), plot_path);
  }
  return all_ok ? 0 : 1;
}

int cmd_corollary1(const std::string& scene_path, const std::string& output, double w0x,
                   double w0y, double phi, double tol) {
  const Scene scene = load_scene_file(scene_path);
  const SigmaView sv = sigma_view(scene.set);
  const cplx w0 = cplx(w0x, w0y) * sv.scale;
  const InequalityReport rep =
      check_corollary1(sv.set, w0, phi, sv.map.a_minus1(), tol);
  emit(inequality_report_to_json(rep), output);
  return rep.pass ? 0 : 1;
}

int cmd_corollary2(const std::string& scene_path, const std::string& output, double alpha,
                   double beta, double gamma, double tol) {
  const Scene scene = load_scene_file(scene_path);
  const SigmaView sv = sigma_view(scene.set);
  double a = alpha * sv.scale;
  double b = beta * sv.scale;
  double g = gamma * sv.scale;
  if (alpha <= 0.0) {
    // Default strip: bounding-box abscissae, alpha = smallest interior slice.
    const BoundingBox bb = bounding_box(sv.set);
    b = bb.xmin;
    g = bb.xmax;
    a = 1e300;
    const int n = 256;
    for (int i = 0; i < n; ++i) {
      const double u = b + (g - b) * (i + 0.5) / n;
      a = std::min(a, vertical_slice(sv.set, u).measure());
    }
  }
  const InequalityReport rep = check_corollary2(sv.set, a, b, g, sv.map.a_minus1(), tol);
  emit(inequality_report_to_json(rep), output);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner/circle symmetrization, exterior conformal maps, and capacity checks"};
  app.require_subcommand(1);

  std::string scene_path, output, corpus_dir, csv_path;
  std::string method = "coeff";
  double tol = 1e-8, verify_tol = 0.0, eps = 0.0, rho = 1.5, v = 1.0;
  double w0x = 0.0, w0y = 0.0, phi = 0.0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  std::uint64_t seed = 0;
  std::int64_t walkers = 1000000;
  int samples = 256, resolution = 256, fekete_points = 200;
  bool circle = false;

  auto* sym = app.add_subcommand("symmetrize", "Write the symmetrized scene");
  sym->add_option("scene", scene_path, "scene JSON file")->required();
  sym->add_option("--output", output, "output path (default stdout)");
  sym->add_flag("--circle", circle, "circle symmetrization instead of Steiner");
  sym->add_option("--v", v, "circle parameter v (center iv, radius v)");
  sym->add_option("--resolution", resolution, "slice/ray resolution");

  auto* mp = app.add_subcommand("map", "Exterior map coefficients");
  mp->add_option("scene", scene_path)->required();
  mp->add_option("--output", output);
  mp->add_option("--rho", rho, "Laurent sampling radius");
  mp->add_option("--samples", samples, "Laurent sample count");

  auto* cap = app.add_subcommand("capacity", "Capacity report");
  cap->add_option("scene", scene_path)->required();
  cap->add_option("--output", output);
  cap->add_option("--method", method, "coeff, mc, or fekete");
  cap->add_option("--seed", seed);
  cap->add_option("--walkers", walkers);
  cap->add_option("--eps", eps, "absorption tolerance (mc)");
  cap->add_option("--samples", fekete_points, "point count (fekete)");

  auto* ver = app.add_subcommand("verify", "Run the inequality corpus");
  ver->add_option("--corpus", corpus_dir, "scene directory (default: built-in corpus)");
  ver->add_option("--output", output, "JSON report path");
  ver->add_option("--csv", csv_path, "aggregate CSV path (plot CSV written alongside)");
  ver->add_option("--tol", verify_tol, "override per-family tolerances (0: defaults)");

  auto* c1 = app.add_subcommand("corollary1", "Slice/inscribed-radius coefficient bound");
  c1->add_option("scene", scene_path)->required();
  c1->add_option("--output", output);
  c1->add_option("--w0x", w0x, "slice anchor, real part");
  c1->add_option("--w0y", w0y, "slice anchor, imaginary part");
  c1->add_option("--phi", phi, "slice direction");
  c1->add_option("--tol", tol);

  auto* c2 = app.add_subcommand("corollary2", "Strip-thickness coefficient bound");
  c2->add_option("scene", scene_path)->required();
  c2->add_option("--output", output);
  c2->add_option("--alpha", alpha, "minimum slice thickness (0: derive from scene)");
  c2->add_option("--beta", beta, "strip left abscissa");
  c2->add_option("--gamma", gamma, "strip right abscissa");
  c2->add_option("--tol", tol);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sym->parsed()) return cmd_symmetrize(scene_path, output, circle, v, resolution);
    if (mp->parsed()) return cmd_map(scene_path, output, rho, samples);
    if (cap->parsed())
      return cmd_capacity(scene_path, output, method, seed, walkers, eps, fekete_points);
    if (ver->parsed()) return cmd_verify(corpus_dir, output, csv_path, verify_tol);
    if (c1->parsed()) return cmd_corollary1(scene_path, output, w0x, w0y, phi, tol);
    if (c2->parsed()) return cmd_corollary2(scene_path, output, alpha, beta, gamma, tol);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
