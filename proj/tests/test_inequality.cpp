#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symcap/inequality.hpp"

using namespace symcap;
using std::numbers::pi;

namespace {

PlanarSet slit_disk_set(double lambda, double phi) {
  // Extremal configuration: disk of radius 1/lambda with the diametral slit of
  // extent m = 2 (lambda + sqrt(lambda^2 - 1)) / lambda in the e^{i phi}
  // direction; the exterior map has a1 = e^{i phi}.
  const double R = 1.0 / lambda;
  const double m = 2.0 * (lambda + std::sqrt(lambda * lambda - 1.0)) / lambda;
  const cplx tip = std::polar(0.5 * m, phi);
  ConnectedUnion u;
  u.parts.push_back(PlanarSet{Disk{{0.0, 0.0}, R}});
  u.parts.push_back(PlanarSet{Segment{-tip, tip}});
  return PlanarSet{u};
}

}  // namespace

TEST_CASE("map dispatch recognizes closed forms") {
  CHECK(has_closed_form_map(PlanarSet{Disk{{0, 0}, 1.0}}));
  CHECK(has_closed_form_map(PlanarSet{Circle{{0, 0}, 1.0}}));
  CHECK(has_closed_form_map(PlanarSet{Segment{{0, 0}, {1, 1}}}));
  CHECK(!has_closed_form_map(PlanarSet{Polygon{{{0, 0}, {1, 0}, {0, 1}}}}));
  CHECK(has_closed_form_map(slit_disk_set(2.0, 0.0)));
}

TEST_CASE("unit circle: the motivating example") {
  const PlanarSet circle{Circle{{0.0, 0.0}, 1.0}};
  const Theorem1Check t = check_theorem1_full(circle);
  // E: |a1| = 1, a_{-1} = 0; E* = [-1, 1]: a1 = a_{-1} = 1/2
  CHECK(std::abs(t.a1 - cplx(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(t.am1) < 1e-12);
  CHECK(std::abs(t.a1_star - cplx(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(t.am1_star - cplx(0.5, 0.0)) < 1e-12);
  CHECK(t.inequality.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.inequality.lhs == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.inequality.pass);
  CHECK(t.polya_szego.pass);
}

TEST_CASE("tilted segments: exact functional values") {
  for (int k = 0; k < 6; ++k) {
    const double theta = pi * k / 6.0;
    const cplx e = std::polar(2.0, theta);
    const Theorem1Check t = check_theorem1_full(PlanarSet{Segment{-e, e}});
    // functional(E) = 2 sin^2 theta for the segment of capacity 1
    CHECK(t.inequality.rhs ==
          doctest::Approx(2.0 * std::sin(theta) * std::sin(theta)).epsilon(1e-12));
    const double expected_star = (k == 3) ? 2.0 : 0.0;  // vertical stays put
    CHECK(t.inequality.lhs == doctest::Approx(expected_star).epsilon(1e-12));
    CHECK(t.inequality.pass);
  }
}

TEST_CASE("containment comparison on symmetrized sets") {
  const PlanarSet square{Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}};
  const InequalityReport ok = check_theorem2(square, PlanarSet{Disk{{0.0, 0.0}, 0.5}});
  CHECK(ok.pass);
  CHECK(ok.slack > 0.0);
  // equality when the inner set is the symmetrization itself
  const InequalityReport eq = check_theorem2(square, square);
  CHECK(eq.pass);
  CHECK(std::abs(eq.slack) < 1e-10);
  CHECK_THROWS_AS(check_theorem2(square, PlanarSet{Disk{{0.0, 0.0}, 3.0}}), Error);
}

TEST_CASE("green-function comparison on disk exteriors") {
  // v = 2, rho = 1 vs rho = 1/2: both sides log((v^2 - rho^2)/v^2)
  const InequalityReport r = check_schiffer_disks(2.0, 1.0, 0.5);
  CHECK(r.lhs == doctest::Approx(std::log(0.75)).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(std::log(0.9375)).epsilon(1e-14));
  CHECK(r.lhs == doctest::Approx(-0.287682).epsilon(1e-5));
  CHECK(r.rhs == doctest::Approx(-0.064539).epsilon(1e-4));
  CHECK(r.pass);
  // equality at rho1 = rho2
  CHECK(std::abs(check_schiffer_disks(2.0, 0.7, 0.7).slack) < 1e-14);
  CHECK_THROWS_AS(check_schiffer_disks(1.0, 2.0, 0.5), Error);
}

TEST_CASE("slice and inscribed-radius bound: extremal equality") {
  for (double lambda : {1.5, 2.0, 3.0}) {
    for (double phi : {0.0, pi / 4.0, pi / 2.0}) {
      const PlanarSet set = slit_disk_set(lambda, phi);
      const ExteriorMap f = exterior_map_of(set).normalized_sigma();
      const InequalityReport r = check_corollary1(set, cplx(0.0, 0.0), phi, f.a_minus1());
      CHECK(std::abs(r.slack) < 1e-6);
      if (lambda == 2.0 && phi == pi / 2.0) {
        CHECK(r.lhs == doctest::Approx(1.75).epsilon(1e-10));
        CHECK(r.rhs == doctest::Approx(1.75).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("slice and inscribed-radius bound: segment case is sharp") {
  for (double phi : {0.0, 0.6, pi / 2.0}) {
    const cplx tip = std::polar(2.0, phi);
    const PlanarSet seg{Segment{-tip, tip}};
    const ExteriorMap f = exterior_map_of(seg).normalized_sigma();
    const InequalityReport r = check_corollary1(seg, cplx(0.0, 0.0), phi, f.a_minus1());
    // m = 4, R = 0: both sides equal 2
    CHECK(r.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("slice and inscribed-radius bound: strict for the disk") {
  const PlanarSet d{Disk{{0.0, 0.0}, 1.0}};
  const ExteriorMap f = exterior_map_of(d).normalized_sigma();
  const InequalityReport r = check_corollary1(d, cplx(0.0, 0.0), 0.0, f.a_minus1());
  // m = 2R = 2: lhs = (16 + 16)/32 = 1 = rhs with a_{-1} = 0
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.pass);
}

TEST_CASE("strip-thickness bound: rectangle extremal with c = 2") {
  const double k = 0.5;
  const auto [A, B] = elliptic_side_integrals(k);
  const double alpha = 4.0 * B, half = 2.0 * A;
  const PlanarSet rect{Polygon{
      {{-half, -0.5 * alpha}, {half, -0.5 * alpha}, {half, 0.5 * alpha}, {-half, 0.5 * alpha}}}};
  const ExteriorMap f = map_rectangle(alpha, -half, half);
  CHECK(std::abs(f.a1() - cplx(1.0, 0.0)) < 1e-10);  // c = 2 normalizes the map
  const InequalityReport r = check_corollary2(rect, alpha, -half, half, f.a_minus1());
  CHECK(std::abs(r.slack) < 1e-10);
  CHECK(r.lhs == doctest::Approx(2.0 * k * k - 1.0).epsilon(1e-9));
}

TEST_CASE("strip-thickness bound rejects thin slices") {
  const PlanarSet rect{Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}};
  CHECK_THROWS_AS(check_corollary2(rect, 5.0, -1.0, 1.0, cplx(0.0, 0.0)), Error);
}

TEST_CASE("slice bound of four on normalized sets") {
  for (const PlanarSet& s :
       {PlanarSet{Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}},
        PlanarSet{Segment{{-2, 0}, {2, 0}}}, PlanarSet{Disk{{0, 0}, 1.5}}}) {
    const InequalityReport r = check_m_bound(s, representative_point(s));
    CHECK(r.pass);
    CHECK(r.lhs <= 4.0 + 1e-9);
  }
}

TEST_CASE("built-in corpus satisfies both symmetrization inequalities") {
  const auto results = run_corpus(builtin_corpus());
  CHECK(results.size() == 12);
  for (const auto& item : results) {
    CAPTURE(item.name);
    CHECK(item.ok);
    CHECK(item.error.empty());
    for (const auto& r : item.reports) CHECK(r.pass);
  }
}

TEST_CASE("representative points are interior where possible") {
  const PlanarSet sq{Polygon{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}}};
  CHECK(in_interior(sq, representative_point(sq)));
  const PlanarSet d{Disk{{3.0, 4.0}, 1.0}};
  CHECK(in_interior(d, representative_point(d)));
}
