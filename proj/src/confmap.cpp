#include "symcap/confmap.hpp"

#include <cmath>
#include <numbers>

#include "symcap/quadrature.hpp"

namespace symcap {

namespace {

constexpr double kPi = std::numbers::pi;

cplx joukowski(cplx z) { return z + 1.0 / z; }

// sqrt(z - a) sqrt(z + a) with principal square roots: the two half-line cut
// jumps cancel, leaving a single cut on [-a, a] and the branch ~ z at infinity.
cplx sqrt_pair(cplx z, double a) { return std::sqrt(z - a) * std::sqrt(z + a); }

// ---------------------------------------------------------------------------
// Rectangle map kernel: F(zeta) = i alpha/2 + c int_0^zeta g, with
// g = sqrt((zeta^2-k^2)/(zeta^2-1)) on the branch that is positive on (0, k)
// and -i (positive) on (k, 1) from the upper side.
// ---------------------------------------------------------------------------

struct RectangleKernel {
  double c, k, alpha, half_len;  // half_len = (gamma - beta)/2

  cplx g(cplx zeta) const { return sqrt_pair(zeta, k) / sqrt_pair(zeta, 1.0); }

  // F on the closed upper half-plane.
  cplx F_upper(cplx zeta) const {
    const double split = 0.5 * (1.0 + k);
    if (zeta.real() >= split) {
      // Straight path from the prevertex 1; g ~ (zeta - 1)^{-1/2} there. The
      // singular factor is built from span * t directly so it keeps full
      // precision near the prevertex.
      const cplx span = zeta - 1.0;
      if (std::abs(span) < 1e-300) return cplx(half_len, 0.0);
      auto f = [&](double t) {
        const cplx zm1 = span * t;  // zeta' - 1, exact
        const cplx z = 1.0 + zm1;
        return sqrt_pair(z, k) / (std::sqrt(zm1) * std::sqrt(z + 1.0)) * span;
      };
      return cplx(half_len, 0.0) + c * integrate_endpoint_singular(f, 0.0, 1.0, -0.5, 0.0);
    }
    if (zeta.real() <= -split) {
      const cplx span = zeta + 1.0;
      if (std::abs(span) < 1e-300) return cplx(-half_len, 0.0);
      auto f = [&](double t) {
        const cplx zp1 = span * t;  // zeta' + 1, exact
        const cplx z = -1.0 + zp1;
        return sqrt_pair(z, k) / (std::sqrt(z - 1.0) * std::sqrt(zp1)) * span;
      };
      return cplx(-half_len, 0.0) + c * integrate_endpoint_singular(f, 0.0, 1.0, -0.5, 0.0);
    }
    // Straight path from 0 (regular point of g).
    auto f = [&](double t) { return g(zeta * t) * zeta; };
    return cplx(0.0, 0.5 * alpha) + c * integrate(f, 0.0, 1.0, 1e-12);
  }

  cplx F(cplx zeta) const {
    if (zeta.imag() >= 0.0) return F_upper(zeta);
    return std::conj(F_upper(std::conj(zeta)));
  }
};

RectangleKernel kernel_of(const RectangleMapData& d) {
  return {d.params.c, d.params.k, d.params.alpha, 0.5 * (d.params.gamma - d.params.beta)};
}

cplx base_eval(const ExteriorMap::Payload& payload, cplx z) {
  return std::visit(
      [&](const auto& p) -> cplx {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, DiskMapData>) {
          return p.center + p.radius * z;
        } else if constexpr (std::is_same_v<T, SegmentMapData>) {
          const cplx mid = 0.5 * (p.p + p.q);
          const cplx quarter = 0.25 * (p.q - p.p);
          return mid + quarter * joukowski(z);
        } else if constexpr (std::is_same_v<T, SlitDiskMapData>) {
          return p.w0 + std::polar(p.R, p.phi) * joukowski_inverse(p.lambda * joukowski(z));
        } else if constexpr (std::is_same_v<T, RectangleMapData>) {
          return p.center + kernel_of(p).F(0.5 * joukowski(z));
        } else {
          return detail::sc_eval(*p, z);
        }
      },
      payload);
}

}  // namespace

cplx joukowski_inverse(cplx w) {
  const cplx s = sqrt_pair(w, 2.0);
  const cplx z = 0.5 * (w + s);
  if (std::abs(z) >= 1.0) return z;
  return 0.5 * (w - s);
}

// ---------------------------------------------------------------------------
// ExteriorMap
// ---------------------------------------------------------------------------

cplx ExteriorMap::eval(cplx z) const {
  const cplx zr = std::polar(1.0, inner_rot_) * z;
  return post_scale_ * base_eval(payload_, zr) + post_shift_;
}

ExteriorMap ExteriorMap::rotated(double tau) const {
  ExteriorMap out = *this;
  out.inner_rot_ += tau;
  const cplx e = std::polar(1.0, tau);
  out.a1_ *= e;
  out.am1_ /= e;
  return out;
}

ExteriorMap ExteriorMap::affine(cplx s, cplx t) const {
  ExteriorMap out = *this;
  out.post_scale_ *= s;
  out.post_shift_ = s * out.post_shift_ + t;
  out.a1_ *= s;
  out.a0_ = s * out.a0_ + t;
  out.am1_ *= s;
  return out;
}

ExteriorMap ExteriorMap::normalized_sigma() const {
  const double mod = std::abs(a1_);
  if (mod <= 0.0) throw Error(ErrorCode::degenerate_primitive, "map has a1 = 0");
  return rotated(-std::arg(a1_)).affine(cplx(1.0 / mod, 0.0), cplx(0.0, 0.0));
}

// ---------------------------------------------------------------------------
// Closed-form constructors
// ---------------------------------------------------------------------------

ExteriorMap map_segment(cplx p, cplx q) {
  if (std::abs(p - q) <= kGeomEps)
    throw Error(ErrorCode::degenerate_primitive, "segment endpoints coincide");
  const cplx a1 = 0.25 * (q - p);  // e^{i psi} L / 4
  return ExteriorMap(SegmentMapData{p, q}, a1, 0.5 * (p + q), a1);
}

ExteriorMap map_disk(cplx center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::degenerate_primitive, "disk radius must be positive");
  return ExteriorMap(DiskMapData{center, radius}, radius, center, 0.0);
}

ExteriorMap map_slit_disk(cplx w0, double phi, double R, double m) {
  if (!(R > 0.0)) throw Error(ErrorCode::degenerate_primitive, "slit disk radius must be positive");
  if (m < 2.0 * R - kGeomEps)
    throw Error(ErrorCode::invalid_slit_extent, "slit extent must be at least the diameter");
  const double lambda = (m * m + 4.0 * R * R) / (4.0 * R * m);
  const cplx e = std::polar(1.0, phi);
  const cplx a1 = e * R * lambda;
  const cplx am1 = e * R * (lambda - 1.0 / lambda);
  return ExteriorMap(SlitDiskMapData{w0, phi, R, lambda}, a1, w0, am1);
}

// ---------------------------------------------------------------------------
// Elliptic side integrals and the rectangle parameter problem
// ---------------------------------------------------------------------------

std::pair<double, double> elliptic_side_integrals(double k) {
  if (!(k > 0.0 && k < 1.0))
    throw Error(ErrorCode::domain_error, "k must lie in (0, 1)");
  // A: t = k sin s absorbs both square roots.
  auto fa = [k](double s) -> cplx {
    const double sn = std::sin(s), cs = std::cos(s);
    return k * k * cs * cs / std::sqrt(1.0 - k * k * sn * sn);
  };
  // B: t = sqrt(k^2 + (1-k^2) sin^2 s).
  auto fb = [k](double s) -> cplx {
    const double sn = std::sin(s);
    const double t = std::sqrt(k * k + (1.0 - k * k) * sn * sn);
    return (1.0 - k * k) * sn * sn / t;
  };
  const double A = integrate(fa, 0.0, kPi / 2.0, 1e-13).real();
  const double B = integrate(fb, 0.0, kPi / 2.0, 1e-13).real();
  return {A, B};
}

RectangleMapParams solve_rectangle_params(double alpha, double beta, double gamma) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::domain_error, "alpha must be positive");
  if (!(gamma > beta)) throw Error(ErrorCode::domain_error, "gamma must exceed beta");
  const double target = std::log((gamma - beta) / alpha);
  double lo = 1e-12, hi = 1.0 - 1e-15;
  auto ratio = [](double k) {
    auto [A, B] = elliptic_side_integrals(k);
    return std::log(A / B);
  };
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ratio(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  const double k = 0.5 * (lo + hi);
  auto [A, B] = elliptic_side_integrals(k);
  const double c = 0.5 * (gamma - beta) / A;
  RectangleMapParams params{c, k, alpha, beta, gamma};
  const double res = std::abs(c * B - 0.5 * alpha) / (1.0 + alpha);
  if (res > 1e-10)
    throw Error(ErrorCode::solver_divergence, "rectangle parameter residual " + std::to_string(res));
  return params;
}

ExteriorMap map_rectangle(double alpha, double beta, double gamma) {
  RectangleMapParams params = solve_rectangle_params(alpha, beta, gamma);
  const cplx center(0.5 * (beta + gamma), 0.0);
  const cplx a1(0.5 * params.c, 0.0);
  const cplx am1(-params.c * (0.5 - params.k * params.k), 0.0);
  return ExteriorMap(RectangleMapData{params, center}, a1, center, am1);
}

// ---------------------------------------------------------------------------
// Laurent extraction
// ---------------------------------------------------------------------------

namespace {

LaurentCoefficients laurent_at(const ExteriorMap& map, double rho, int n) {
  std::vector<cplx> samples(n);
  for (int j = 0; j < n; ++j)
    samples[j] = map.eval(std::polar(rho, 2.0 * kPi * j / n));
  auto coeff = [&](int m) {
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += samples[j] * std::polar(1.0, -2.0 * kPi * m * j / n);
    return acc / double(n) / std::pow(rho, m);
  };
  return {coeff(1), coeff(0), coeff(-1), 0.0};
}

}  // namespace

LaurentCoefficients laurent_coefficients(const ExteriorMap& map, double rho, int n_samples) {
  if (!(rho > 1.0)) throw Error(ErrorCode::domain_error, "rho must exceed 1");
  LaurentCoefficients a = laurent_at(map, rho, n_samples);
  LaurentCoefficients b = laurent_at(map, 1.0 + 1.25 * (rho - 1.0), n_samples);
  a.error_estimate = std::max({std::abs(a.a1 - b.a1), std::abs(a.a0 - b.a0),
                               std::abs(a.am1 - b.am1)});
  return a;
}

bool image_curve_simple(const ExteriorMap& map, int n, double radius) {
  std::vector<cplx> pts(n);
  for (int i = 0; i < n; ++i)
    pts[i] = map.eval(std::polar(radius, 2.0 * kPi * i / n));
  auto crosses = [](cplx a, cplx b, cplx c, cplx d) {
    auto cr = [](cplx u, cplx v) { return u.real() * v.imag() - u.imag() * v.real(); };
    const double d1 = cr(b - a, c - a), d2 = cr(b - a, d - a);
    const double d3 = cr(d - c, a - c), d4 = cr(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the loop
      if (crosses(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
    }
  }
  return true;
}

}  // namespace symcap
