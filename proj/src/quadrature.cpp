#include "symcap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace symcap {

namespace {

GaussRule compute_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

std::complex<double> panel(const RealToCplx& f, double a, double b, const GaussRule& rule) {
  const double h = 0.5 * (b - a), c = 0.5 * (a + b);
  std::complex<double> acc = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(c + h * rule.nodes[i]);
  return h * acc;
}

std::complex<double> adapt(const RealToCplx& f, double a, double b, double tol, int depth,
                           const GaussRule& lo, const GaussRule& hi, long& budget) {
  const std::complex<double> coarse = panel(f, a, b, lo);
  const std::complex<double> fine = panel(f, a, b, hi);
  --budget;
  if (std::abs(fine - coarse) <= tol || depth <= 0 || budget <= 0) return fine;
  const double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * tol, depth - 1, lo, hi, budget) +
         adapt(f, m, b, 0.5 * tol, depth - 1, lo, hi, budget);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

std::complex<double> integrate(const RealToCplx& f, double a, double b, double abs_tol,
                               int max_depth) {
  if (a == b) return 0.0;
  const GaussRule& lo = gauss_legendre(16);
  const GaussRule& hi = gauss_legendre(32);
  // Panel budget caps the cost of near-singular integrands; the interval
  // bisection stops refining once it is spent.
  long budget = 20000;
  return adapt(f, a, b, abs_tol, max_depth, lo, hi, budget);
}

std::complex<double> integrate_endpoint_singular(const RealToCplx& f, double a, double b,
                                                 double mu_a, double mu_b, double abs_tol) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  auto one_side = [&](double end, double mid, double mu) -> std::complex<double> {
    // t = end + (mid - end) u^q, q = 2/(1+mu): integrand becomes O(u) smooth.
    const double q = 2.0 / (1.0 + mu);
    const double span = mid - end;
    auto g = [&](double u) -> std::complex<double> {
      const double t = end + span * std::pow(u, q);
      const std::complex<double> v = f(t) * (span * q * std::pow(u, q - 1.0));
      // When t rounds onto the endpoint a singular f overflows; the true
      // substituted integrand tends to 0 there for any mu > -1.
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return 0.0;
      return v;
    };
    return integrate(g, 0.0, 1.0, 0.5 * abs_tol);
  };
  // one_side integrates from the endpoint toward the midpoint.
  return one_side(a, m, mu_a) - one_side(b, m, mu_b);
}

}  // namespace symcap
