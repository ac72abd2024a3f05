#include "symcap/inequality.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace symcap {

namespace {

constexpr double kPi = std::numbers::pi;

std::string shape_digest(const PlanarSet& set) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        std::ostringstream os;
        if constexpr (std::is_same_v<T, Polygon>) {
          os << "polygon[" << s.vertices.size() << "]";
        } else if constexpr (std::is_same_v<T, Disk>) {
          os << "disk(r=" << s.radius << ")";
        } else if constexpr (std::is_same_v<T, Circle>) {
          os << "circle(r=" << s.radius << ")";
        } else if constexpr (std::is_same_v<T, Segment>) {
          os << "segment(L=" << std::abs(s.q - s.p) << ")";
        } else {
          os << "union[" << s.parts.size() << "]";
        }
        return os.str();
      },
      set.shape);
}

// Slit-disk pattern: exactly one disk plus one segment through its center,
// symmetric about the center, at least a diameter long.
struct SlitDiskShape {
  cplx center;
  double phi, R, m;
};

std::optional<SlitDiskShape> match_slit_disk(const PlanarSet& set) {
  const auto* un = std::get_if<ConnectedUnion>(&set.shape);
  if (!un || un->parts.size() != 2) return std::nullopt;
  const Disk* d = nullptr;
  const Segment* s = nullptr;
  for (const PlanarSet& p : un->parts) {
    if (const auto* dd = std::get_if<Disk>(&p.shape)) d = dd;
    if (const auto* ss = std::get_if<Segment>(&p.shape)) s = ss;
  }
  if (!d || !s) return std::nullopt;
  const double tol = 1e-9 * (1.0 + d->radius + std::abs(s->q - s->p));
  const cplx mid = 0.5 * (s->p + s->q);
  if (std::abs(mid - d->center) > tol) return std::nullopt;
  const double m = std::abs(s->q - s->p);
  if (m < 2.0 * d->radius - tol) return std::nullopt;
  return SlitDiskShape{d->center, std::arg(s->q - s->p), d->radius, m};
}

}  // namespace

const char* inequality_name(InequalityName n) {
  switch (n) {
    case InequalityName::polya_szego: return "polya_szego";
    case InequalityName::theorem1: return "theorem1";
    case InequalityName::theorem2: return "theorem2";
    case InequalityName::schiffer: return "schiffer";
    case InequalityName::corollary1: return "corollary1";
    case InequalityName::corollary2: return "corollary2";
    case InequalityName::m_bound: return "m_bound";
  }
  return "unknown";
}

InequalityReport make_report(InequalityName name, double bounded, double bound, double tol,
                             const std::string& digest) {
  InequalityReport r;
  r.name = name;
  r.lhs = bounded;
  r.rhs = bound;
  r.slack = bound - bounded;
  r.tol = tol;
  r.pass = r.slack >= -tol;
  r.inputs_digest = digest;
  return r;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

bool has_closed_form_map(const PlanarSet& set) {
  if (std::holds_alternative<Disk>(set.shape) || std::holds_alternative<Circle>(set.shape) ||
      std::holds_alternative<Segment>(set.shape))
    return true;
  return match_slit_disk(set).has_value();
}

ExteriorMap exterior_map_of(const PlanarSet& set) {
  if (const auto* d = std::get_if<Disk>(&set.shape)) return map_disk(d->center, d->radius);
  // The circle curve and the closed disk share the same exterior complement.
  if (const auto* c = std::get_if<Circle>(&set.shape)) return map_disk(c->center, c->radius);
  if (const auto* s = std::get_if<Segment>(&set.shape)) return map_segment(s->p, s->q);
  if (const auto* p = std::get_if<Polygon>(&set.shape)) return map_polygon_exterior(*p);
  if (auto sd = match_slit_disk(set)) return map_slit_disk(sd->center, sd->phi, sd->R, sd->m);
  throw Error(ErrorCode::unsupported_set, "no exterior map family for " + shape_digest(set));
}

cplx representative_point(const PlanarSet& set) {
  return std::visit(
      [&](const auto& s) -> cplx {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return s.center;
        } else if constexpr (std::is_same_v<T, Circle>) {
          return s.center + cplx(s.radius, 0.0);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return 0.5 * (s.p + s.q);
        } else if constexpr (std::is_same_v<T, Polygon>) {
          cplx centroid = 0.0;
          for (const cplx& v : s.vertices) centroid += v;
          centroid /= double(s.vertices.size());
          if (in_interior(set, centroid)) return centroid;
          // Deterministic interior scan over the bounding box.
          const BoundingBox bb = bounding_box(set);
          for (int res = 8; res <= 512; res *= 2) {
            for (int i = 1; i < res; ++i) {
              for (int j = 1; j < res; ++j) {
                const cplx p(bb.xmin + (bb.xmax - bb.xmin) * i / res,
                             bb.ymin + (bb.ymax - bb.ymin) * j / res);
                if (in_interior(set, p)) return p;
              }
            }
          }
          return centroid;
        } else {
          for (const PlanarSet& part : s.parts) {
            const cplx p = representative_point(part);
            if (contains(set, p, kGeomEps)) return p;
          }
          return representative_point(s.parts.front());
        }
      },
      set.shape);
}

// ---------------------------------------------------------------------------
// Theorems 1 and 2
// ---------------------------------------------------------------------------

Theorem1Check check_theorem1_full(const PlanarSet& set, double tol) {
  const PlanarSet checked = validate(set);
  const ExteriorMap f = exterior_map_of(checked);
  const PlanarSet star = steiner_symmetrize(checked);
  const ExteriorMap fs = exterior_map_of(star);
  const std::string digest = shape_digest(checked) + " -> " + shape_digest(star);

  Theorem1Check out{
      make_report(InequalityName::theorem1, functional_from_map(fs), functional_from_map(f), tol,
                  digest),
      make_report(InequalityName::polya_szego, logcap_from_map(fs), logcap_from_map(f), tol,
                  digest),
      f.a1(), f.a_minus1(), fs.a1(), fs.a_minus1()};
  return out;
}

InequalityReport check_theorem1(const PlanarSet& set, double tol) {
  return check_theorem1_full(set, tol).inequality;
}

InequalityReport check_theorem2(const PlanarSet& outer, const PlanarSet& inner, double tol) {
  const PlanarSet star = steiner_symmetrize(validate(outer));
  const PlanarSet in = validate(inner);
  const double scale = 1.0 + set_diameter(star);
  for (const cplx& p : boundary_sample(in, 1024)) {
    if (!contains(star, p, 1e-9 * scale))
      throw Error(ErrorCode::containment_violated, "inner set leaves steiner(outer)");
  }
  const ExteriorMap fs = exterior_map_of(star);
  const ExteriorMap ft = exterior_map_of(in);
  return make_report(InequalityName::theorem2, functional_from_map(ft), functional_from_map(fs),
                     tol, shape_digest(star) + " >= " + shape_digest(in));
}

// ---------------------------------------------------------------------------
// Green-function comparison on exteriors of disks
// ---------------------------------------------------------------------------

InequalityReport check_schiffer_disks(double v, double rho1, double rho2, double tol) {
  if (!(rho2 > 0.0) || !(rho2 <= rho1) || !(rho1 < v))
    throw Error(ErrorCode::domain_error, "need 0 < rho2 <= rho1 < v");
  // For G = {|w| > rho}: r(G, infinity) = 1/rho, r(G, iv) = (v^2 - rho^2)/rho,
  // g_G(iv, infinity) = log(v/rho); the functional collapses to
  // log[(v^2 - rho^2)/v^2].
  auto side = [v](double rho) { return std::log((v * v - rho * rho) / (v * v)); };
  std::ostringstream digest;
  digest << "v=" << v << " rho1=" << rho1 << " rho2=" << rho2;
  return make_report(InequalityName::schiffer, side(rho1), side(rho2), tol, digest.str());
}

// ---------------------------------------------------------------------------
// Corollaries
// ---------------------------------------------------------------------------

InequalityReport check_corollary1(const PlanarSet& set, cplx w0, double phi, cplx a_minus1,
                                  double tol) {
  const double m = line_slice_measure(set, w0, phi);
  if (m <= kGeomEps)
    throw Error(ErrorCode::zero_measure_slice, "slice through w0 has zero measure");
  const double R = largest_inscribed_radius(set, w0);
  const double lhs = (std::pow(m, 4) + 16.0 * std::pow(R, 4)) / (8.0 * m * m);
  const double rhs = 1.0 + (std::polar(1.0, -2.0 * phi) * a_minus1).real();
  std::ostringstream digest;
  digest << shape_digest(set) << " w0=(" << w0.real() << "," << w0.imag() << ") phi=" << phi;
  InequalityReport rep = make_report(InequalityName::corollary1, lhs, rhs, tol, digest.str());
  const double mod = std::abs(a_minus1);
  rep.notes.emplace_back("m", m);
  rep.notes.emplace_back("R", R);
  rep.notes.emplace_back("m_parallel_bound", std::sqrt(8.0 * (1.0 + mod)));
  rep.notes.emplace_back("m_perp_bound", std::sqrt(8.0 * (1.0 - std::min(1.0, mod))));
  return rep;
}

InequalityReport check_corollary2(const PlanarSet& set, double alpha, double beta, double gamma,
                                  cplx a_minus1, double tol) {
  if (!(alpha > 0.0) || !(gamma > beta))
    throw Error(ErrorCode::domain_error, "need alpha > 0 and gamma > beta");
  const double scale = 1.0 + set_diameter(set);
  const int n_check = 256;
  for (int i = 0; i < n_check; ++i) {
    const double u = beta + (gamma - beta) * (i + 0.5) / n_check;
    if (vertical_slice(set, u).measure() < alpha - 1e-9 * scale)
      throw Error(ErrorCode::slice_hypothesis_violated,
                  "vertical slice at u=" + std::to_string(u) + " is thinner than alpha");
  }
  const RectangleMapParams p = solve_rectangle_params(alpha, beta, gamma);
  const double bound = 1.0 - 0.5 * p.c * p.c * (1.0 - p.k * p.k);
  std::ostringstream digest;
  digest << shape_digest(set) << " alpha=" << alpha << " beta=" << beta << " gamma=" << gamma;
  InequalityReport rep =
      make_report(InequalityName::corollary2, a_minus1.real(), bound, tol, digest.str());
  rep.notes.emplace_back("c", p.c);
  rep.notes.emplace_back("k", p.k);
  return rep;
}

InequalityReport check_m_bound(const PlanarSet& set, cplx w0, int n_phi, double tol) {
  const ExteriorMap f = exterior_map_of(validate(set));
  const double scale = std::abs(f.a1());  // m on the Sigma-normalized set = m/|a1|
  double worst = 0.0;
  double worst_phi = 0.0;
  for (int i = 0; i < n_phi; ++i) {
    const double phi = kPi * i / n_phi;
    const double m = line_slice_measure(set, w0, phi) / scale;
    if (m > worst) {
      worst = m;
      worst_phi = phi;
    }
  }
  InequalityReport rep = make_report(InequalityName::m_bound, worst, 4.0, tol,
                                     shape_digest(set) + " over " + std::to_string(n_phi) +
                                         " directions");
  rep.notes.emplace_back("worst_phi", worst_phi);
  return rep;
}

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

std::vector<CorpusItemResult> run_corpus(const std::vector<Scene>& corpus,
                                         const CorpusConfig& config) {
  std::vector<CorpusItemResult> out;
  for (const Scene& scene : corpus) {
    CorpusItemResult item;
    item.name = scene.name;
    try {
      const PlanarSet checked = validate(scene.set);
      const bool closed = has_closed_form_map(checked) &&
                          has_closed_form_map(steiner_symmetrize(checked));
      const double tol = closed ? config.tol_closed_form : config.tol_sc;
      const Theorem1Check t1 = check_theorem1_full(checked, tol);
      item.reports.push_back(t1.inequality);
      item.reports.push_back(t1.polya_szego);
      if (scene.inner) item.reports.push_back(check_theorem2(checked, *scene.inner, tol));
      item.ok = true;
      for (const InequalityReport& r : item.reports) item.ok = item.ok && r.pass;
    } catch (const Error& e) {
      item.ok = false;
      item.error = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<Scene> builtin_corpus() {
  std::vector<Scene> corpus;
  for (int k = 0; k < 6; ++k) {
    const double theta = kPi * k / 6.0;
    const cplx e = std::polar(2.0, theta);
    corpus.push_back({"segment_" + std::to_string(30 * k), PlanarSet{Segment{-e, e}}, {}});
  }
  corpus.push_back({"circle_unit", PlanarSet{Circle{{0.0, 0.0}, 1.0}}, {}});
  corpus.push_back(
      {"square", PlanarSet{Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}}, {}});
  corpus.push_back(
      {"l_shape",
       PlanarSet{Polygon{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}},
       {}});
  corpus.push_back(
      {"rect_tall", PlanarSet{Polygon{{{-0.5, -2}, {0.5, -2}, {0.5, 2}, {-0.5, 2}}}}, {}});
  corpus.push_back(
      {"rect_flat", PlanarSet{Polygon{{{-2, -0.4}, {2, -0.4}, {2, 0.4}, {-2, 0.4}}}}, {}});
  {
    const double m = 2.0 + std::sqrt(3.0);
    ConnectedUnion u;
    u.parts.push_back(PlanarSet{Disk{{0.0, 0.0}, 0.5}});
    u.parts.push_back(PlanarSet{Segment{{-0.5 * m, 0.0}, {0.5 * m, 0.0}}});
    corpus.push_back({"slit_disk", PlanarSet{u}, {}});
  }
  return corpus;
}

}  // namespace symcap
