#include <algorithm>
#include <cmath>
#include <numbers>

#include "symcap/confmap.hpp"
#include "symcap/quadrature.hpp"

namespace symcap {

namespace {

constexpr double kPi = std::numbers::pi;

// Exterior turning fractions mu_k = (turn angle at w_k)/pi for a CCW simple
// polygon; sum is exactly 2.
std::vector<double> turning_fractions(const std::vector<cplx>& w) {
  const size_t n = w.size();
  std::vector<double> mu(n);
  for (size_t k = 0; k < n; ++k) {
    const cplx d1 = w[k] - w[(k + n - 1) % n];
    const cplx d2 = w[(k + 1) % n] - w[k];
    mu[k] = std::arg(d2 / d1) / kPi;
  }
  return mu;
}

// 1 - e^{i psi}, free of cancellation for small psi.
cplx one_minus_cis(double psi) {
  const double h = 0.5 * psi;
  return cplx(0.0, -2.0 * std::sin(h)) * std::polar(1.0, h);
}

// Integral of i e^{i(origin + t)} prod_k (1 - e^{i(off_k - t)})^{mu_k} dt over
// t in [A, B], where off_k are prevertex angles in the same offset coordinate
// as A and B. Endpoints coinciding with an off_k carry that factor's exponent
// in mu_A/mu_B; the power substitution t = end + span u^q (q = 2/(1+mu))
// absorbs the endpoint singularity, and distances to the singular prevertex
// are formed in offset space so they never lose precision to the O(1) angle.
cplx arc_integral(const std::vector<double>& off, const std::vector<double>& mu, double origin,
                  double A, double B, double mu_A, double mu_B, double tol) {
  if (A == B) return 0.0;
  const double mid = 0.5 * (A + B);
  auto value_at = [&](double end, double delta) -> cplx {
    cplx acc = cplx(0.0, 1.0) * std::polar(1.0, origin + end + delta);
    for (size_t k = 0; k < off.size(); ++k)
      acc *= std::pow(one_minus_cis((off[k] - end) - delta), mu[k]);
    return acc;
  };
  auto half = [&](double end, double mu_end) -> cplx {
    const double q = 2.0 / (1.0 + mu_end);
    const double span = mid - end;
    auto g = [&](double u) -> cplx {
      const double delta = span * std::pow(u, q);
      return value_at(end, delta) * (span * q * std::pow(u, q - 1.0));
    };
    return integrate(g, 0.0, 1.0, 0.5 * tol);
  };
  return half(A, mu_A) - half(B, mu_B);
}

struct Problem {
  std::vector<cplx> w;       // vertices, CCW
  std::vector<double> mu;    // turning fractions
  size_t n;

  // f'(zeta)/C for |zeta| >= 1 given prevertices z.
  cplx fprime_unit(const std::vector<cplx>& z, cplx zeta) const {
    cplx acc = 1.0;
    for (size_t k = 0; k < n; ++k)
      acc *= std::pow(1.0 - z[k] / zeta, mu[k]);
    return acc;
  }

  // Side vector between prevertices j and j+1 along the unit circle.
  cplx side_vector(const std::vector<double>& theta, const std::vector<cplx>&, size_t j,
                   double tol) const {
    const double a = theta[j];
    const double b = j + 1 < n ? theta[j + 1] : theta[0] + 2.0 * kPi;
    return arc_integral(theta, mu, 0.0, a, b, mu[j], mu[(j + 1) % n], tol);
  }

  std::vector<double> angles_from(const std::vector<double>& y) const {
    // Gaps via normalized exponentials; theta_1 fixed at 0.
    std::vector<double> g(n);
    double sum = 0.0;
    for (size_t k = 0; k < n; ++k) {
      g[k] = std::exp(k + 1 < n ? y[k] : 0.0);
      sum += g[k];
    }
    std::vector<double> theta(n);
    theta[0] = 0.0;
    for (size_t k = 1; k < n; ++k) theta[k] = theta[k - 1] + 2.0 * kPi * g[k - 1] / sum;
    return theta;
  }

  std::vector<double> residual(const std::vector<double>& y, double tol) const {
    const std::vector<double> theta = angles_from(y);
    std::vector<cplx> z(n);
    for (size_t k = 0; k < n; ++k) z[k] = std::polar(1.0, theta[k]);
    std::vector<double> r;
    cplx s1 = 0.0;
    for (size_t k = 0; k < n; ++k) s1 += mu[k] * z[k];
    r.push_back(s1.real());
    r.push_back(s1.imag());
    if (n > 3) {
      const double L1 = std::abs(side_vector(theta, z, 0, tol));
      for (size_t j = 1; j + 2 < n; ++j) {
        const double Lj = std::abs(side_vector(theta, z, j, tol));
        const double ell1 = std::abs(w[1] - w[0]);
        const double ellj = std::abs(w[j + 1] - w[j]);
        r.push_back(std::log(Lj / L1) - std::log(ellj / ell1));
      }
    }
    return r;
  }
};

double norm_inf(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Dense Gaussian elimination with partial pivoting.
std::vector<double> solve_linear(std::vector<std::vector<double>> A, std::vector<double> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    if (std::abs(A[col][col]) < 1e-300)
      throw Error(ErrorCode::solver_divergence, "singular Jacobian in prevertex solve");
    for (size_t r = col + 1; r < n; ++r) {
      const double f = A[r][col] / A[col][col];
      for (size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (size_t r = n; r-- > 0;) {
    double acc = b[r];
    for (size_t c = r + 1; c < n; ++c) acc -= A[r][c] * x[c];
    x[r] = acc / A[r][r];
  }
  return x;
}

// Damped Newton with finite-difference Jacobian on the log-gap unknowns.
std::vector<double> solve_prevertices(const Problem& prob, double& final_residual) {
  const size_t m = prob.n - 1;
  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(m, 0.0));  // uniform angles
  for (int s = 1; s <= 3; ++s) {
    std::vector<double> y(m);
    for (size_t i = 0; i < m; ++i) y[i] = 0.3 * std::sin(1.7 * s * (i + 1));
    starts.push_back(y);
  }
  const double quad_tol = 1e-11;
  for (const auto& start : starts) {
    std::vector<double> y = start;
    std::vector<double> r = prob.residual(y, quad_tol);
    double rn = norm_inf(r);
    bool ok = false;
    for (int it = 0; it < 80 && !ok; ++it) {
      if (rn < 1e-11) {
        ok = true;
        break;
      }
      std::vector<std::vector<double>> J(m, std::vector<double>(m));
      const double h = 1e-6;
      for (size_t c = 0; c < m; ++c) {
        std::vector<double> yp = y;
        yp[c] += h;
        const std::vector<double> rp = prob.residual(yp, quad_tol);
        for (size_t rr = 0; rr < m; ++rr) J[rr][c] = (rp[rr] - r[rr]) / h;
      }
      std::vector<double> step;
      try {
        step = solve_linear(J, r);
      } catch (const Error&) {
        break;
      }
      double t = 1.0;
      bool accepted = false;
      for (int half = 0; half < 25; ++half) {
        std::vector<double> yn(m);
        for (size_t i = 0; i < m; ++i) yn[i] = y[i] - t * step[i];
        std::vector<double> rnew = prob.residual(yn, quad_tol);
        const double rnn = norm_inf(rnew);
        if (rnn < rn) {
          y = yn;
          r = rnew;
          rn = rnn;
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) break;
    }
    if (rn < 1e-11 || ok) {
      final_residual = rn;
      return y;
    }
  }
  throw Error(ErrorCode::solver_divergence, "prevertex iteration did not converge");
}

}  // namespace

namespace detail {

cplx sc_eval(const SCExteriorData& sc, cplx z) {
  const size_t n = sc.prevertices.size();
  std::vector<double> mu(n);
  for (size_t k = 0; k < n; ++k) mu[k] = -sc.turn[k];

  const double R = std::abs(z);
  if (R < 1.0 - 1e-9)
    throw Error(ErrorCode::domain_error, "point inside the unit disk");
  const double theta1 = sc.prevertex_angles[0];
  double phi = std::arg(z) - theta1;
  phi -= 2.0 * kPi * std::floor(phi / (2.0 * kPi));  // into [0, 2pi)

  // Prevertex offsets from theta1 keep distances to prevertices exact.
  std::vector<double> off(n);
  for (size_t k = 0; k < n; ++k) {
    double o = sc.prevertex_angles[k] - theta1;
    o -= 2.0 * kPi * std::floor(o / (2.0 * kPi));
    off[k] = o;
  }
  auto mu_at = [&](double o) {
    for (size_t k = 0; k < n; ++k) {
      double d = off[k] - o;
      d -= 2.0 * kPi * std::round(d / (2.0 * kPi));
      if (std::abs(d) < 1e-12) return mu[k];
    }
    return 0.0;
  };
  // Each factor 1 - z_k/zeta at radius r and arc offset t is
  // ((r - 1) + (1 - e^{i(off_k - t)})) / r, accurate when zeta is close to
  // the unit circle or to a prevertex.
  auto fprime_at = [&](double r, double t) -> cplx {
    cplx acc = 1.0;
    for (size_t k = 0; k < n; ++k)
      acc *= std::pow(((r - 1.0) + one_minus_cis(off[k] - t)) / r, mu[k]);
    return acc;
  };

  cplx integral = 0.0;
  if (R > 1.05) {
    // Far from the circle: radial leg at theta1 (singular only at its own
    // prevertex), then a smooth arc at radius R.
    const cplx dir = std::polar(1.0, theta1);
    auto frad = [&](double r) { return fprime_at(r, 0.0) * dir; };
    integral += integrate_endpoint_singular(frad, 1.0, R, mu[0], 0.0);
    auto farc = [&](double t) -> cplx {
      return fprime_at(R, t) * cplx(0.0, 1.0) * std::polar(R, theta1 + t);
    };
    integral += integrate(farc, 0.0, phi, 1e-12);
  } else {
    // Near or on the circle: walk the boundary to the target angle, splitting
    // at prevertices, then step radially outward. An arc at radius 1 + eps
    // would skim every prevertex; the boundary walk absorbs each singularity
    // exactly and the radial leg stays short.
    std::vector<double> stops;  // strictly inside (0, phi)
    for (size_t k = 1; k < n; ++k)
      if (off[k] > 1e-14 && off[k] < phi - 1e-14) stops.push_back(off[k]);
    std::sort(stops.begin(), stops.end());
    double cur = 0.0;
    stops.push_back(phi);
    for (double next : stops) {
      integral += arc_integral(off, mu, theta1, cur, next, mu_at(cur), mu_at(next), 1e-12);
      cur = next;
    }
    if (R > 1.0 + 1e-15) {
      const cplx dir = std::polar(1.0, theta1 + phi);
      auto frad = [&](double r) { return fprime_at(r, phi) * dir; };
      integral += integrate_endpoint_singular(frad, 1.0, R, mu_at(phi), 0.0);
    }
  }
  return sc.vertices[0] + sc.C * integral;
}

}  // namespace detail

ExteriorMap map_polygon_exterior(const Polygon& polygon) {
  PlanarSet checked = validate(PlanarSet{polygon});
  const Polygon& poly = std::get<Polygon>(checked.shape);
  const size_t n = poly.vertices.size();
  if (n > 20) throw Error(ErrorCode::too_many_vertices, "at most 20 vertices supported");

  Problem prob{poly.vertices, turning_fractions(poly.vertices), n};
  double residual = 0.0;
  const std::vector<double> y = solve_prevertices(prob, residual);
  const std::vector<double> theta = prob.angles_from(y);
  std::vector<cplx> z(n);
  for (size_t k = 0; k < n; ++k) z[k] = std::polar(1.0, theta[k]);

  const cplx V1 = prob.side_vector(theta, z, 0, 1e-13);
  const cplx C = (poly.vertices[1] - poly.vertices[0]) / V1;

  auto sc = std::make_shared<SCExteriorData>();
  sc->prevertex_angles = theta;
  sc->prevertices = z;
  sc->turn.resize(n);
  for (size_t k = 0; k < n; ++k) sc->turn[k] = -prob.mu[k];
  sc->C = C;
  sc->vertices = poly.vertices;
  sc->residual = residual;

  // a1 = C exactly; a_{-1} from the expansion of the derivative product.
  cplx s2 = 0.0;
  for (size_t k = 0; k < n; ++k) s2 += prob.mu[k] * z[k] * z[k];
  const cplx am1 = 0.5 * C * s2;

  ExteriorMap provisional(sc, C, 0.0, am1);
  const LaurentCoefficients lc = laurent_coefficients(provisional, 2.0, 256);
  const double err = std::max({lc.error_estimate, std::abs(lc.a1 - C), std::abs(lc.am1 - am1)});
  return ExteriorMap(sc, C, lc.a0, am1, err);
}

}  // namespace symcap
