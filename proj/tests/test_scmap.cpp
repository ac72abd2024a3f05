#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symcap/confmap.hpp"

using namespace symcap;
using std::numbers::pi;

namespace {

double dist_to_polygon_boundary(const std::vector<cplx>& v, cplx w) {
  double best = 1e300;
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const cplx a = v[i], b = v[(i + 1) % n], d = b - a;
    double t = ((w - a).real() * d.real() + (w - a).imag() * d.imag()) / std::norm(d);
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(w - (a + t * d)));
  }
  return best;
}

}  // namespace

TEST_CASE("polygon exterior map rejects too many vertices") {
  Polygon poly;
  for (int i = 0; i < 25; ++i) poly.vertices.push_back(std::polar(1.0, 2.0 * pi * i / 25.0));
  CHECK_THROWS_AS(map_polygon_exterior(poly), Error);
}

TEST_CASE("square exterior map: symmetry pins the coefficients") {
  const Polygon square{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  const ExteriorMap f = map_polygon_exterior(square);
  // four-fold symmetry kills a_{-1} and centers a_0
  CHECK(std::abs(f.a_minus1()) < 1e-10);
  CHECK(std::abs(f.a0()) < 1e-10);
  // logarithmic capacity of the square of side 2:
  // 2 * Gamma(1/4)^2 / (4 pi^{3/2}) with side s = 2 -> s * 0.59017...
  const double cap_square_unit = std::pow(std::tgamma(0.25), 2.0) / (4.0 * std::pow(pi, 1.5));
  CHECK(std::abs(f.a1()) == doctest::Approx(2.0 * cap_square_unit).epsilon(1e-8));
  const auto& sc = *std::get<std::shared_ptr<const SCExteriorData>>(f.payload());
  double turn_sum = 0.0;
  for (double t : sc.turn) turn_sum += t;
  CHECK(turn_sum == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(sc.residual < 1e-10);
}

TEST_CASE("rectangle via exterior schwarz-christoffel matches the elliptic map") {
  const double alpha = 1.0, beta = -2.0, gamma = 2.0;
  const Polygon rect{{{beta, -0.5 * alpha},
                      {gamma, -0.5 * alpha},
                      {gamma, 0.5 * alpha},
                      {beta, 0.5 * alpha}}};
  // a1 carries the free prevertex rotation; compare with a1 made real positive
  const ExteriorMap sc =
      [&] {
        const ExteriorMap raw = map_polygon_exterior(rect);
        return raw.rotated(-std::arg(raw.a1()));
      }();
  const ExteriorMap el = map_rectangle(alpha, beta, gamma);
  CHECK(std::abs(sc.a1() - el.a1()) < 1e-6);
  CHECK(std::abs(sc.a0() - el.a0()) < 1e-6);
  CHECK(std::abs(sc.a_minus1() - el.a_minus1()) < 1e-6);
}

TEST_CASE("triangle exterior map traces the boundary") {
  const Polygon tri{{{0, 0}, {3, 0}, {1, 2}}};
  const ExteriorMap f = map_polygon_exterior(tri);
  double worst = 0.0;
  const int n = 256;
  for (int i = 0; i < n; ++i) {
    const cplx w = f(std::polar(1.0, 2.0 * pi * (i + 0.37) / n));
    worst = std::max(worst, dist_to_polygon_boundary(tri.vertices, w));
  }
  const double diam = 3.2;  // > max pairwise vertex distance
  CHECK(worst < 1e-6 * diam);
}

TEST_CASE("l-shape exterior map is consistent and univalent") {
  const Polygon l{{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}};
  const ExteriorMap f = map_polygon_exterior(l);
  CHECK(f.coeff_error() < 1e-9);
  // capacity bracketed by the inscribed square of side 1 and the hull square
  // of side 2 (monotonicity of capacity under inclusion)
  const double cap_square_unit = std::pow(std::tgamma(0.25), 2.0) / (4.0 * std::pow(pi, 1.5));
  CHECK(std::abs(f.a1()) > cap_square_unit);
  CHECK(std::abs(f.a1()) < 2.0 * cap_square_unit);
  CHECK(image_curve_simple(f, 512));
  // boundary points fall on the polygon
  double worst = 0.0;
  for (int i = 0; i < 128; ++i) {
    const cplx w = f(std::polar(1.0, 2.0 * pi * (i + 0.5) / 128));
    worst = std::max(worst, dist_to_polygon_boundary(l.vertices, w));
  }
  CHECK(worst < 1e-6 * 2.83);
}

TEST_CASE("rotated polygon keeps |a1| and a1 a_{-1}") {
  const Polygon tri{{{0, 0}, {3, 0}, {1, 2}}};
  const ExteriorMap f = map_polygon_exterior(tri);
  const double phi = 0.7;
  Polygon rotated = tri;
  for (cplx& v : rotated.vertices) v *= std::polar(1.0, phi);
  const ExteriorMap g = map_polygon_exterior(rotated);
  CHECK(std::abs(g.a1()) == doctest::Approx(std::abs(f.a1())).epsilon(1e-9));
  // a1 a_{-1} transforms by e^{2 i phi}
  const cplx expect = f.a1() * f.a_minus1() * std::polar(1.0, 2.0 * phi);
  CHECK(std::abs(g.a1() * g.a_minus1() - expect) < 1e-8);
}

TEST_CASE("laurent cross-check on a schwarz-christoffel map") {
  const Polygon tri{{{0, 0}, {3, 0}, {1, 2}}};
  const ExteriorMap f = map_polygon_exterior(tri);
  const LaurentCoefficients lc = laurent_coefficients(f, 1.5, 256);
  CHECK(std::abs(lc.a1 - f.a1()) < 1e-9);
  CHECK(std::abs(lc.am1 - f.a_minus1()) < 1e-9);
}
