// End-to-end acceptance checks. Each numbered criterion prints one PASS/FAIL
// line; the process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "symcap/capacity.hpp"
#include "symcap/inequality.hpp"
#include "symcap/scene_io.hpp"

using namespace symcap;
using std::numbers::pi;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& fn) {
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("criterion %d (%s): %s%s%s\n", number, label.c_str(), ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

PlanarSet slit_disk_extremal(double lambda, double phi) {
  const double R = 1.0 / lambda;
  const double m = 2.0 * (lambda + std::sqrt(lambda * lambda - 1.0)) / lambda;
  const cplx tip = std::polar(0.5 * m, phi);
  ConnectedUnion u;
  u.parts.push_back(PlanarSet{Disk{{0.0, 0.0}, R}});
  u.parts.push_back(PlanarSet{Segment{-tip, tip}});
  return PlanarSet{u};
}

}  // namespace

int main() {
  criterion(1, "unit circle equalities", [](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const Theorem1Check t = check_theorem1_full(PlanarSet{Circle{{0.0, 0.0}, 1.0}});
    const double elapsed = seconds_since(t0);
    detail = "elapsed " + std::to_string(elapsed) + " s";
    return std::abs(t.inequality.rhs - 1.0) < 1e-12 && std::abs(t.inequality.lhs) < 1e-12 &&
           std::abs(t.am1) < 1e-12 && std::abs(std::abs(t.am1_star) - 0.5) < 1e-12 &&
           t.inequality.pass && t.polya_szego.pass && elapsed < 1.0;
  });

  criterion(2, "symmetrization inequalities on the 12-scene corpus", [](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_corpus(builtin_corpus());
    const double elapsed = seconds_since(t0);
    detail = std::to_string(results.size()) + " scenes, elapsed " + std::to_string(elapsed) + " s";
    if (results.size() != 12 || elapsed >= 60.0) return false;
    for (const auto& item : results) {
      if (!item.ok) {
        detail += "; " + item.name + " failed";
        return false;
      }
      for (const auto& r : item.reports)
        if (!r.pass) return false;
    }
    return true;
  });

  criterion(3, "slice/inscribed-radius bound equality cases", [](std::string&) {
    for (double lambda : {1.5, 2.0, 3.0}) {
      for (double phi : {0.0, pi / 4.0, pi / 2.0}) {
        const PlanarSet set = slit_disk_extremal(lambda, phi);
        const cplx am1 = exterior_map_of(set).normalized_sigma().a_minus1();
        const InequalityReport r = check_corollary1(set, cplx(0.0, 0.0), phi, am1);
        if (std::abs(r.slack) > 1e-6) return false;
        if (lambda == 2.0 && phi == pi / 2.0 &&
            (std::abs(r.lhs - 1.75) > 1e-10 || std::abs(r.rhs - 1.75) > 1e-10))
          return false;
      }
    }
    const PlanarSet seg{Segment{{0.0, -2.0}, {0.0, 2.0}}};
    const cplx am1 = exterior_map_of(seg).normalized_sigma().a_minus1();
    const InequalityReport joukowski = check_corollary1(seg, cplx(0.0, 0.0), pi / 2.0, am1);
    return std::abs(joukowski.lhs - 2.0) < 1e-12 && std::abs(joukowski.rhs - 2.0) < 1e-12;
  });

  criterion(4, "slice bound of four across the corpus", [](std::string& detail) {
    double worst = 0.0;
    for (const Scene& scene : builtin_corpus()) {
      const InequalityReport r = check_m_bound(scene.set, representative_point(scene.set), 64);
      worst = std::max(worst, r.lhs);
      if (!r.pass || r.lhs > 4.0 + 1e-9) {
        detail = scene.name + " exceeds the bound";
        return false;
      }
    }
    detail = "max normalized slice " + std::to_string(worst);
    return true;
  });

  criterion(5, "strip-thickness bound and elliptic parameter solver", [](std::string&) {
    const double k = 0.5;
    const auto [A, B] = elliptic_side_integrals(k);
    const double alpha = 4.0 * B, half = 2.0 * A;
    const PlanarSet rect{Polygon{{{-half, -0.5 * alpha},
                                  {half, -0.5 * alpha},
                                  {half, 0.5 * alpha},
                                  {-half, 0.5 * alpha}}}};
    const ExteriorMap f = map_rectangle(alpha, -half, half);
    const InequalityReport r = check_corollary2(rect, alpha, -half, half, f.a_minus1());
    if (std::abs(r.slack) > 1e-10) return false;
    // solver residual: both side equations of the parameter problem
    const RectangleMapParams p = solve_rectangle_params(alpha, -half, half);
    const auto [A2, B2] = elliptic_side_integrals(p.k);
    if (std::abs(2.0 * p.c * A2 - 2.0 * half) > 1e-10) return false;
    if (std::abs(2.0 * p.c * B2 - alpha) > 1e-10) return false;
    // degenerate limits of the side integrals
    const auto [A0, B0] = elliptic_side_integrals(1e-6);
    const auto [A1, B1] = elliptic_side_integrals(1.0 - 1e-10);
    return std::abs(A0) < 1e-8 && std::abs(B0 - 1.0) < 1e-8 && std::abs(A1 - 1.0) < 1e-8 &&
           std::abs(B1) < 1e-8;
  });

  criterion(6, "cross-pipeline coefficient agreement", [](std::string&) {
    const double alpha = 1.0, beta = -2.0, gamma = 2.0;
    const Polygon rect{{{beta, -0.5 * alpha},
                        {gamma, -0.5 * alpha},
                        {gamma, 0.5 * alpha},
                        {beta, 0.5 * alpha}}};
    // a1 of the polygon map carries the free prevertex rotation; align phases
    const ExteriorMap raw = map_polygon_exterior(rect);
    const ExteriorMap sc = raw.rotated(-std::arg(raw.a1()));
    const ExteriorMap el = map_rectangle(alpha, beta, gamma);
    if (std::abs(sc.a1() - el.a1()) > 1e-6 || std::abs(sc.a0() - el.a0()) > 1e-6 ||
        std::abs(sc.a_minus1() - el.a_minus1()) > 1e-6)
      return false;
    const double m = 2.0 + std::sqrt(3.0);
    const ExteriorMap maps[] = {map_disk(cplx(0.3, -0.2), 1.4),
                                map_segment(cplx(-1.0, -2.0), cplx(2.0, 1.0)),
                                map_slit_disk(cplx(0.1, 0.4), 0.6, 0.5, m),
                                map_rectangle(alpha, beta, gamma)};
    for (const ExteriorMap& f : maps) {
      const LaurentCoefficients lc = laurent_coefficients(f, 1.5, 512);
      if (std::abs(lc.a1 - f.a1()) > 1e-10 || std::abs(lc.a0 - f.a0()) > 1e-10 ||
          std::abs(lc.am1 - f.a_minus1()) > 1e-10)
        return false;
    }
    return true;
  });

  criterion(7, "stochastic and greedy capacity oracles", [](std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const PlanarSet seg{Segment{{0.0, -2.0}, {0.0, 2.0}}};
    const MonteCarloEstimate est = hcap_monte_carlo_default(seg, 1000000, 42);
    const double elapsed = seconds_since(t0);
    detail = "mc " + std::to_string(est.estimate) + " +- " + std::to_string(est.stderr_) +
             ", elapsed " + std::to_string(elapsed) + " s";
    if (std::abs(est.estimate - 2.0) > 3.0 * est.stderr_ || elapsed >= 120.0) return false;
    if (std::abs(logcap_fekete(PlanarSet{Disk{{0.0, 0.0}, 1.0}}, 200) - 1.0) > 0.01) return false;
    return std::abs(logcap_fekete(PlanarSet{Segment{{-2.0, 0.0}, {2.0, 0.0}}}, 200) - 1.0) <= 0.01;
  });

  criterion(8, "green-function comparison on a parameter grid", [](std::string&) {
    const InequalityReport pinned = check_schiffer_disks(2.0, 1.0, 0.5);
    if (std::abs(pinned.lhs + 0.287682) > 1e-4 || std::abs(pinned.rhs + 0.064539) > 1e-4 ||
        !pinned.pass)
      return false;
    int points = 1;
    for (double v : {1.5, 2.0, 4.0}) {
      for (auto [r1, r2] : {std::pair{0.9 * v, 0.3 * v}, {0.5 * v, 0.5 * v}, {0.7 * v, 0.1 * v}}) {
        if (!check_schiffer_disks(v, r1, r2).pass) return false;
        ++points;
      }
    }
    return points == 10;
  });

  criterion(9, "invariant suites", [](std::string& detail) {
    // Steiner symmetrization preserves area
    for (const Scene& scene : builtin_corpus()) {
      const double before = area(scene.set);
      if (before <= 0.0) continue;
      const double after = area(steiner_symmetrize(scene.set));
      if (std::abs(after - before) > 1e-10 * before) {
        detail = scene.name + " area drift";
        return false;
      }
    }
    // circle symmetrization preserves per-ray log measure (exact slices)
    const PlanarSet s{Disk{{3.0, 1.0}, 0.8}};
    const double v = 2.0;
    const cplx dir_scale = cplx(v, -1.0);  // the ray rho e^{i theta} (v - i)
    for (const auto& sample : circle_symmetrize(s, v, 64).samples) {
      const cplx dir = std::polar(1.0, sample.theta) * dir_scale;
      const IntervalSet hit = line_intersect(s, cplx(0.0, 0.0), std::arg(dir));
      double log_measure = 0.0;
      for (const Interval& iv : hit.intervals())
        if (iv.hi > kGeomEps && iv.lo > 0.0) log_measure += std::log(iv.hi / iv.lo);
      if (std::abs(2.0 * std::log(sample.R) - log_measure) > 1e-8) {
        detail = "ray measure drift";
        return false;
      }
    }
    // rotating the set leaves |a1| and a1 a_{-1} e^{-2 i phi} unchanged
    const double m = 2.0 + std::sqrt(3.0);
    const ExteriorMap base = map_slit_disk(cplx(0.0, 0.0), 0.0, 0.5, m);
    for (double phi : {0.3, 1.1, 2.9}) {
      const ExteriorMap g = map_slit_disk(cplx(0.0, 0.0), phi, 0.5, m);
      if (std::abs(std::abs(g.a1()) - std::abs(base.a1())) > 1e-12) return false;
      const cplx prod = g.a1() * g.a_minus1() * std::polar(1.0, -2.0 * phi);
      if (std::abs(prod - base.a1() * base.a_minus1()) > 1e-12) return false;
    }
    // seeded Monte Carlo is bit-exact
    const PlanarSet seg{Segment{{0.0, -2.0}, {0.0, 2.0}}};
    const MonteCarloEstimate a = hcap_monte_carlo_default(seg, 20000, 7);
    const MonteCarloEstimate b = hcap_monte_carlo_default(seg, 20000, 7);
    return a.estimate == b.estimate && a.stderr_ == b.stderr_;
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
