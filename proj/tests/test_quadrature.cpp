#include <doctest.h>

#include <cmath>
#include <numbers>

#include "symcap/quadrature.hpp"

using namespace symcap;
using std::numbers::pi;

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
  const GaussRule& rule = gauss_legendre(16);
  REQUIRE(rule.nodes.size() == 16);
  double s0 = 0.0, s2 = 0.0, s30 = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    s0 += rule.weights[i];
    s2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    s30 += rule.weights[i] * std::pow(rule.nodes[i], 30);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s2 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // degree 30 < 2*16 - 1: still exact
  CHECK(s30 == doctest::Approx(2.0 / 31.0).epsilon(1e-13));
}

TEST_CASE("adaptive integration of smooth functions") {
  auto f = [](double t) { return std::complex<double>(std::exp(t), std::cos(t)); };
  const auto v = integrate(f, 0.0, 1.0);
  CHECK(v.real() == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));
  CHECK(v.imag() == doctest::Approx(std::sin(1.0)).epsilon(1e-13));
}

TEST_CASE("adaptive integration handles oscillation") {
  auto f = [](double t) { return std::complex<double>(std::sin(40.0 * t), 0.0); };
  const auto v = integrate(f, 0.0, pi);
  CHECK(v.real() == doctest::Approx((1.0 - std::cos(40.0 * pi)) / 40.0).epsilon(1e-11));
}

TEST_CASE("endpoint singular integration: inverse square root") {
  // int_0^1 t^{-1/2} dt = 2
  auto f = [](double t) { return std::complex<double>(1.0 / std::sqrt(t), 0.0); };
  const auto v = integrate_endpoint_singular(f, 0.0, 1.0, -0.5, 0.0);
  CHECK(v.real() == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("endpoint singular integration: both endpoints") {
  // int_{-1}^1 (1-t^2)^{-1/2} dt = pi. Accuracy is limited by cancellation in
  // the integrand itself (1 - t^2 loses relative precision near t = +-1).
  auto f = [](double t) { return std::complex<double>(1.0 / std::sqrt(1.0 - t * t), 0.0); };
  const auto v = integrate_endpoint_singular(f, -1.0, 1.0, -0.5, -0.5);
  CHECK(v.real() == doctest::Approx(pi).epsilon(1e-7));
}

TEST_CASE("endpoint singular integration: positive power") {
  // int_0^1 sqrt(t) dt = 2/3
  auto f = [](double t) { return std::complex<double>(std::sqrt(t), 0.0); };
  const auto v = integrate_endpoint_singular(f, 0.0, 1.0, 0.5, 0.0);
  CHECK(v.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}
