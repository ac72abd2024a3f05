#ifndef SYMCAP_GEOMETRY_HPP
#define SYMCAP_GEOMETRY_HPP

#include <complex>
#include <variant>
#include <vector>

#include "symcap/error.hpp"

namespace symcap {

using cplx = std::complex<double>;

// Absolute tolerance for coordinate comparisons and interval merging.
inline constexpr double kGeomEps = 1e-12;

// ---------------------------------------------------------------------------
// Interval sets (slices of a set by a line, in the line parameter)
// ---------------------------------------------------------------------------

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// Sorted list of disjoint closed intervals on the real line. Degenerate
/// [t, t] intervals are kept; they carry zero measure.
class IntervalSet {
 public:
  void add(double lo, double hi);
  void merge_from(const IntervalSet& other);
  double measure() const;
  bool empty() const { return intervals_.empty(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  /// Smallest interval containing everything; undefined when empty.
  Interval hull() const;

 private:
  void normalize();
  std::vector<Interval> intervals_;  // kept sorted and disjoint
};

// ---------------------------------------------------------------------------
// Planar sets
// ---------------------------------------------------------------------------

struct PlanarSet;

struct Polygon {
  std::vector<cplx> vertices;  // counterclockwise, simple
};

struct Disk {
  cplx center;
  double radius = 0.0;
};

struct Segment {
  cplx p, q;
};

/// The circle *curve* {|w - center| = radius}, as opposed to the closed Disk.
/// A one-dimensional set: zero area, measure-zero vertical slices.
struct Circle {
  cplx center;
  double radius = 0.0;
};

struct ConnectedUnion {
  std::vector<PlanarSet> parts;
};

struct PlanarSet {
  std::variant<Polygon, Disk, Segment, Circle, ConnectedUnion> shape;
};

/// Symmetrization output in the sense of circle symmetrization: per-ray radii
/// in the L_v-transformed plane. Only nonempty rays are stored.
struct SampledRadialSet {
  double v = 1.0;
  struct Sample {
    double theta;  // in [0, 2pi)
    double R;      // >= 1; slice is {rho : 1/R <= rho <= R}
  };
  std::vector<Sample> samples;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Normalizes and checks invariants: polygon simplicity/orientation, positive
/// radii, distinct segment endpoints, union connectivity.
PlanarSet validate(const PlanarSet& set);

/// Intersection of the set with the line {w0 + t e^{i phi}} as an IntervalSet
/// in t. Transversal crossings of 1-D pieces and polygon-vertex touches give
/// degenerate [t, t] intervals; collinear segments and edges give their extent.
IntervalSet line_intersect(const PlanarSet& set, cplx w0, double phi);

/// Slice by the vertical line Re w = u, parameterized by v = Im w.
IntervalSet vertical_slice(const PlanarSet& set, double u);

/// Steiner symmetrization with respect to the real axis. Exact for polygons,
/// disks and 1-D pieces; unions of positive-area polygons use adaptive
/// breakpoint refinement. n_slices bounds the polygonal resolution of curved
/// boundaries that have no exact representation.
PlanarSet steiner_symmetrize(const PlanarSet& set, int n_slices = 256);

/// Circle symmetrization with respect to |w - iv| = v, via the direct per-ray
/// logarithmic-measure formula in the L_v(w) = w/(v - i) plane.
SampledRadialSet circle_symmetrize(const PlanarSet& set, double v, int n_rays = 64);

/// Radius of the largest disk centered at w0 contained in the set
/// (0 when w0 is not an interior point).
double largest_inscribed_radius(const PlanarSet& set, cplx w0);

/// Linear measure of the intersection of the set with {w0 + t e^{i phi}}.
double line_slice_measure(const PlanarSet& set, cplx w0, double phi);

// -- Supporting queries -----------------------------------------------------

/// Closed-set membership with tolerance (distance to the set <= tol counts).
bool contains(const PlanarSet& set, cplx w, double tol = kGeomEps);

/// Strict interior membership.
bool in_interior(const PlanarSet& set, cplx w);

/// Distance from an exterior point to the set (0 if w is in the set).
double distance_to_set(const PlanarSet& set, cplx w);

/// n points distributed along the boundary (per part for unions).
std::vector<cplx> boundary_sample(const PlanarSet& set, int n);

struct BoundingBox {
  double xmin, xmax, ymin, ymax;
};
BoundingBox bounding_box(const PlanarSet& set);

double set_diameter(const PlanarSet& set);

/// Shoelace / closed-form area. Union parts are summed without overlap
/// correction; exact when parts overlap only in measure-zero sets.
double area(const PlanarSet& set);

/// w -> scale * e^{i rot} * (w - pivot) + pivot + shift applied to the set.
PlanarSet transformed(const PlanarSet& set, double rot, double scale, cplx shift,
                      cplx pivot = {0.0, 0.0});

/// True when the set equals its reflection in the real axis (numerically,
/// boundary samples of the reflection lie on the boundary).
bool symmetric_about_real_axis(const PlanarSet& set, double rel_tol = 1e-9);

}  // namespace symcap

#endif
