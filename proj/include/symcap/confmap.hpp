#ifndef SYMCAP_CONFMAP_HPP
#define SYMCAP_CONFMAP_HPP

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "symcap/geometry.hpp"

namespace symcap {

// ---------------------------------------------------------------------------
// Map payloads
// ---------------------------------------------------------------------------

struct DiskMapData {
  cplx center;
  double radius;
};

struct SegmentMapData {
  cplx p, q;
};

/// Disk of radius R about w0 with two radial slits of total extent m >= 2R in
/// the e^{i phi} direction; lambda = (m^2 + 4R^2) / (4Rm).
struct SlitDiskMapData {
  cplx w0;
  double phi;
  double R;
  double lambda;
};

struct RectangleMapParams {
  double c = 0.0;      // > 0
  double k = 0.0;      // in (0, 1)
  double alpha = 0.0;  // height
  double beta = 0.0;   // left abscissa
  double gamma = 0.0;  // right abscissa, > beta
};

struct RectangleMapData {
  RectangleMapParams params;
  cplx center;  // (beta + gamma)/2 on the real axis
};

/// Exterior Schwarz-Christoffel data. Prevertices are in circular order;
/// turning parameters sum to -2 and the derivative is
/// C prod_k (1 - z_k/z)^{-turn_k}.
struct SCExteriorData {
  std::vector<double> prevertex_angles;  // strictly increasing, in [0, 2pi)
  std::vector<cplx> prevertices;         // e^{i angle}
  std::vector<double> turn;              // sum = -2
  cplx C;                                // multiplier; a1 = C
  std::vector<cplx> vertices;            // target polygon, counterclockwise
  double residual = 0.0;                 // parameter-problem residual
};

// ---------------------------------------------------------------------------
// ExteriorMap
// ---------------------------------------------------------------------------

/// Conformal map f of {|z| > 1} onto the complement of a continuum, stored as
/// a closed-form family member or SC data plus an optional reparametrization
/// z -> e^{i tau} z and target-side affine transform w -> s w + t.
class ExteriorMap {
 public:
  using Payload = std::variant<DiskMapData, SegmentMapData, SlitDiskMapData, RectangleMapData,
                               std::shared_ptr<const SCExteriorData>>;

  ExteriorMap(Payload payload, cplx a1, cplx a0, cplx am1, double coeff_error = 0.0)
      : payload_(std::move(payload)), a1_(a1), a0_(a0), am1_(am1), coeff_error_(coeff_error) {}

  cplx operator()(cplx z) const { return eval(z); }
  cplx eval(cplx z) const;

  cplx a1() const { return a1_; }
  cplx a0() const { return a0_; }
  cplx a_minus1() const { return am1_; }
  double coeff_error() const { return coeff_error_; }

  /// Reparametrized map z -> f(e^{i tau} z); same image set.
  ExteriorMap rotated(double tau) const;

  /// Target-side affine map w -> s w + t; image set becomes s E + t.
  ExteriorMap affine(cplx s, cplx t) const;

  /// Combination of rotation and real rescaling making a1 = 1 (class Sigma);
  /// the image set is scaled by 1/|a1|.
  ExteriorMap normalized_sigma() const;

  /// Scale factor applied to the original target set by affine()/normalization.
  cplx target_scale() const { return post_scale_; }

  const Payload& payload() const { return payload_; }

 private:
  Payload payload_;
  cplx a1_, a0_, am1_;
  double coeff_error_ = 0.0;
  double inner_rot_ = 0.0;
  cplx post_scale_{1.0, 0.0};
  cplx post_shift_{0.0, 0.0};
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

/// Joukowski image of a segment: f(z) = (p+q)/2 + e^{i psi} (L/4)(z + 1/z).
ExteriorMap map_segment(cplx p, cplx q);

/// Affine map of a disk: f(z) = center + radius z.
ExteriorMap map_disk(cplx center, double radius);

/// f(z) = w0 + e^{i phi} R h^{-1}(lambda h(z)), h the Joukowski map.
ExteriorMap map_slit_disk(cplx w0, double phi, double R, double m);

/// A(k) = int_0^k sqrt((k^2-t^2)/(1-t^2)) dt,
/// B(k) = int_k^1 sqrt((t^2-k^2)/(1-t^2)) dt; absolute error <= 1e-12.
std::pair<double, double> elliptic_side_integrals(double k);

/// Solves c A(k) = (gamma-beta)/2, c B(k) = alpha/2 by bisection on the
/// monotone ratio A/B.
RectangleMapParams solve_rectangle_params(double alpha, double beta, double gamma);

/// Exterior map of the rectangle [beta, gamma] x [-alpha/2, alpha/2].
ExteriorMap map_rectangle(double alpha, double beta, double gamma);

/// Numerical exterior Schwarz-Christoffel map of a simple polygon
/// (3..20 vertices).
ExteriorMap map_polygon_exterior(const Polygon& polygon);

/// Joukowski inverse with |h^{-1}(w)| >= 1, continuous off [-2, 2].
cplx joukowski_inverse(cplx w);

// ---------------------------------------------------------------------------
// Laurent extraction
// ---------------------------------------------------------------------------

struct LaurentCoefficients {
  cplx a1, a0, am1;
  double error_estimate = 0.0;
};

/// Coefficients from uniform samples of f on |z| = rho (discrete Fourier
/// transform); the error estimate comes from repeating at a second radius.
LaurentCoefficients laurent_coefficients(const ExteriorMap& map, double rho = 1.5,
                                         int n_samples = 256);

/// True when the polyline through n images of points on |z| = radius has no
/// self-intersection (univalence spot check).
bool image_curve_simple(const ExteriorMap& map, int n = 2048, double radius = 1.0 + 1e-6);

namespace detail {
cplx sc_eval(const SCExteriorData& sc, cplx z);
}

}  // namespace symcap

#endif
