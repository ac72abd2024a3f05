#ifndef SYMCAP_QUADRATURE_HPP
#define SYMCAP_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace symcap {

/// Nodes and weights of n-point Gauss-Legendre quadrature on [-1, 1],
/// computed once per order by Newton iteration and cached.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

using RealToCplx = std::function<std::complex<double>(double)>;

/// Adaptive bisection with an embedded GL16/GL32 error estimate.
std::complex<double> integrate(const RealToCplx& f, double a, double b,
                               double abs_tol = 1e-12, int max_depth = 48);

/// Integral with algebraic endpoint singularities: the integrand behaves like
/// (t-a)^{mu_a} (respectively (b-t)^{mu_b}) with mu > -1 near the endpoints.
/// A power substitution absorbs both before adaptive integration.
std::complex<double> integrate_endpoint_singular(const RealToCplx& f, double a, double b,
                                                 double mu_a, double mu_b,
                                                 double abs_tol = 1e-12);

}  // namespace symcap

#endif
