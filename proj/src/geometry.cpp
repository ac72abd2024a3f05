#include "symcap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <utility>

namespace symcap {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::self_intersecting_polygon: return "SelfIntersectingPolygon";
    case ErrorCode::degenerate_primitive: return "DegeneratePrimitive";
    case ErrorCode::disconnected_union: return "DisconnectedUnion";
    case ErrorCode::unbounded_set: return "UnboundedSet";
    case ErrorCode::origin_in_set: return "OriginInSet";
    case ErrorCode::invalid_slit_extent: return "InvalidSlitExtent";
    case ErrorCode::too_many_vertices: return "TooManyVertices";
    case ErrorCode::solver_divergence: return "SolverDivergence";
    case ErrorCode::non_symmetric_set: return "NonSymmetricSet";
    case ErrorCode::containment_violated: return "ContainmentViolated";
    case ErrorCode::zero_measure_slice: return "ZeroMeasureSlice";
    case ErrorCode::slice_hypothesis_violated: return "SliceHypothesisViolated";
    case ErrorCode::unsupported_set: return "UnsupportedSet";
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::bad_input: return "BadInput";
  }
  return "UnknownError";
}

namespace {

constexpr double kPi = std::numbers::pi;

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double point_segment_distance(cplx w, cplx p, cplx q) {
  const cplx d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(w - p);
  double t = ((w - p).real() * d.real() + (w - p).imag() * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(w - (p + t * d));
}

double polygon_signed_area(const std::vector<cplx>& v) {
  double a = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const cplx& p = v[i];
    const cplx& q = v[(i + 1) % v.size()];
    a += cross(p, q);
  }
  return 0.5 * a;
}

// Proper or touching intersection of segments [a,b] and [c,d].
bool segments_intersect(cplx a, cplx b, cplx c, cplx d, double eps) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
      ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
    return true;
  auto on = [eps](cplx p, cplx q, cplx r) {
    if (std::abs(cross(q - p, r - p)) > eps) return false;
    return r.real() >= std::min(p.real(), q.real()) - eps &&
           r.real() <= std::max(p.real(), q.real()) + eps &&
           r.imag() >= std::min(p.imag(), q.imag()) - eps &&
           r.imag() <= std::max(p.imag(), q.imag()) + eps;
  };
  return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

bool point_in_polygon(const std::vector<cplx>& v, cplx w) {
  // Even-odd crossing count with a half-open rule on the ray Im = const.
  bool inside = false;
  for (size_t i = 0; i < v.size(); ++i) {
    const cplx a = v[i];
    const cplx b = v[(i + 1) % v.size()];
    if ((a.imag() <= w.imag()) != (b.imag() <= w.imag())) {
      const double x = a.real() + (b.real() - a.real()) * (w.imag() - a.imag()) / (b.imag() - a.imag());
      if (x > w.real()) inside = !inside;
    }
  }
  return inside;
}

double polygon_boundary_distance(const std::vector<cplx>& v, cplx w) {
  double d = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i)
    d = std::min(d, point_segment_distance(w, v[i], v[(i + 1) % v.size()]));
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntervalSet
// ---------------------------------------------------------------------------

void IntervalSet::add(double lo, double hi) {
  if (hi < lo) std::swap(lo, hi);
  intervals_.push_back({lo, hi});
  normalize();
}

void IntervalSet::merge_from(const IntervalSet& other) {
  intervals_.insert(intervals_.end(), other.intervals_.begin(), other.intervals_.end());
  normalize();
}

void IntervalSet::normalize() {
  if (intervals_.empty()) return;
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  merged.push_back(intervals_.front());
  for (size_t i = 1; i < intervals_.size(); ++i) {
    Interval& last = merged.back();
    if (intervals_[i].lo <= last.hi + kGeomEps)
      last.hi = std::max(last.hi, intervals_[i].hi);
    else
      merged.push_back(intervals_[i]);
  }
  intervals_ = std::move(merged);
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const Interval& iv : intervals_) m += iv.length();
  return m;
}

Interval IntervalSet::hull() const {
  return {intervals_.front().lo, intervals_.back().hi};
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

namespace {

Polygon normalize_polygon(const Polygon& poly) {
  std::vector<cplx> v;
  for (const cplx& p : poly.vertices) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()))
      throw Error(ErrorCode::unbounded_set, "non-finite polygon vertex");
    if (v.empty() || std::abs(p - v.back()) > kGeomEps) v.push_back(p);
  }
  while (v.size() > 1 && std::abs(v.front() - v.back()) <= kGeomEps) v.pop_back();
  if (v.size() < 3)
    throw Error(ErrorCode::degenerate_primitive, "polygon needs >= 3 distinct vertices");
  double a = polygon_signed_area(v);
  if (std::abs(a) <= kGeomEps)
    throw Error(ErrorCode::degenerate_primitive, "polygon has zero area");
  if (a < 0.0) std::reverse(v.begin(), v.end());
  // Simplicity: no intersections between non-adjacent edges.
  const size_t n = v.size();
  const double eps = 1e-12 * (1.0 + std::abs(a));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], eps))
        throw Error(ErrorCode::self_intersecting_polygon, "edges cross");
    }
  }
  return Polygon{v};
}

// Overlap test for the union connectivity graph: two parts are linked when
// they share at least one point.
bool parts_overlap(const PlanarSet& a, const PlanarSet& b) {
  const double tol = 1e-9 * (1.0 + set_diameter(a) + set_diameter(b));
  for (const cplx& p : boundary_sample(a, 512))
    if (contains(b, p, tol)) return true;
  for (const cplx& p : boundary_sample(b, 512))
    if (contains(a, p, tol)) return true;
  // One part fully inside the other.
  if (contains(b, boundary_sample(a, 1).front(), tol)) return true;
  if (contains(a, boundary_sample(b, 1).front(), tol)) return true;
  return false;
}

}  // namespace

PlanarSet validate(const PlanarSet& set) {
  return std::visit(
      [&](const auto& s) -> PlanarSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          return PlanarSet{normalize_polygon(s)};
        } else if constexpr (std::is_same_v<T, Disk>) {
          if (!(s.radius > kGeomEps))
            throw Error(ErrorCode::degenerate_primitive, "disk radius must be positive");
          return set;
        } else if constexpr (std::is_same_v<T, Circle>) {
          if (!(s.radius > kGeomEps))
            throw Error(ErrorCode::degenerate_primitive, "circle radius must be positive");
          return set;
        } else if constexpr (std::is_same_v<T, Segment>) {
          if (std::abs(s.p - s.q) <= kGeomEps)
            throw Error(ErrorCode::degenerate_primitive, "segment endpoints coincide");
          return set;
        } else {  // ConnectedUnion
          if (s.parts.empty())
            throw Error(ErrorCode::degenerate_primitive, "empty union");
          ConnectedUnion out;
          for (const PlanarSet& part : s.parts) out.parts.push_back(validate(part));
          const size_t n = out.parts.size();
          // Connectivity of the pairwise-overlap graph.
          std::vector<char> seen(n, 0);
          std::queue<size_t> q;
          q.push(0);
          seen[0] = 1;
          size_t count = 1;
          while (!q.empty()) {
            size_t i = q.front();
            q.pop();
            for (size_t j = 0; j < n; ++j) {
              if (!seen[j] && parts_overlap(out.parts[i], out.parts[j])) {
                seen[j] = 1;
                ++count;
                q.push(j);
              }
            }
          }
          if (count != n)
            throw Error(ErrorCode::disconnected_union, "union parts are not connected");
          return PlanarSet{out};
        }
      },
      set.shape);
}

// ---------------------------------------------------------------------------
// line_intersect
// ---------------------------------------------------------------------------

namespace {

// Polygon cut by the real axis after the vertices have been moved into line
// coordinates zeta = e^{-i phi} (w - w0).
IntervalSet polygon_axis_intersect(const std::vector<cplx>& zeta) {
  IntervalSet out;
  const size_t n = zeta.size();
  double scale = 0.0;
  for (const cplx& z : zeta) scale = std::max(scale, std::abs(z));
  const double eps = kGeomEps * (1.0 + scale);

  std::vector<double> crossings;
  for (size_t i = 0; i < n; ++i) {
    const cplx a = zeta[i];
    const cplx b = zeta[(i + 1) % n];
    const double ya = std::abs(a.imag()) <= eps ? 0.0 : a.imag();
    const double yb = std::abs(b.imag()) <= eps ? 0.0 : b.imag();
    if (ya == 0.0 && yb == 0.0) {
      out.add(a.real(), b.real());  // edge collinear with the line
      continue;
    }
    // Half-open rule: each genuine crossing counted exactly once.
    if ((ya <= 0.0 && yb > 0.0) || (yb <= 0.0 && ya > 0.0)) {
      crossings.push_back(a.real() + (b.real() - a.real()) * (0.0 - ya) / (yb - ya));
    }
  }
  std::sort(crossings.begin(), crossings.end());
  for (size_t i = 0; i + 1 < crossings.size(); i += 2) out.add(crossings[i], crossings[i + 1]);
  // Touch points (vertices on the line not already covered).
  for (const cplx& z : zeta)
    if (std::abs(z.imag()) <= eps) out.add(z.real(), z.real());
  return out;
}

}  // namespace

IntervalSet line_intersect(const PlanarSet& set, cplx w0, double phi) {
  const cplx e = std::polar(1.0, -phi);
  return std::visit(
      [&](const auto& s) -> IntervalSet {
        using T = std::decay_t<decltype(s)>;
        IntervalSet out;
        if constexpr (std::is_same_v<T, Polygon>) {
          std::vector<cplx> zeta;
          zeta.reserve(s.vertices.size());
          for (const cplx& v : s.vertices) zeta.push_back(e * (v - w0));
          return polygon_axis_intersect(zeta);
        } else if constexpr (std::is_same_v<T, Disk>) {
          const cplx c = e * (s.center - w0);
          const double d = std::abs(c.imag());
          if (d <= s.radius) {
            const double h = std::sqrt(std::max(0.0, s.radius * s.radius - d * d));
            out.add(c.real() - h, c.real() + h);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Circle>) {
          const cplx c = e * (s.center - w0);
          const double d = std::abs(c.imag());
          const double eps = kGeomEps * (1.0 + s.radius + std::abs(c));
          if (d <= s.radius + eps) {
            const double h = std::sqrt(std::max(0.0, s.radius * s.radius - d * d));
            out.add(c.real() - h, c.real() - h);
            out.add(c.real() + h, c.real() + h);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Segment>) {
          const cplx a = e * (s.p - w0);
          const cplx b = e * (s.q - w0);
          const double eps = kGeomEps * (1.0 + std::abs(a) + std::abs(b));
          const double ya = std::abs(a.imag()) <= eps ? 0.0 : a.imag();
          const double yb = std::abs(b.imag()) <= eps ? 0.0 : b.imag();
          if (ya == 0.0 && yb == 0.0) {
            out.add(a.real(), b.real());
          } else if ((ya <= 0.0 && yb >= 0.0) || (yb <= 0.0 && ya >= 0.0)) {
            const double t = a.real() + (b.real() - a.real()) * (0.0 - ya) / (yb - ya);
            out.add(t, t);
          }
          return out;
        } else {  // ConnectedUnion
          for (const PlanarSet& part : s.parts) out.merge_from(line_intersect(part, w0, phi));
          return out;
        }
      },
      set.shape);
}

IntervalSet vertical_slice(const PlanarSet& set, double u) {
  // Line {u + i t}: w0 = u, direction e^{i pi/2}.
  return line_intersect(set, cplx(u, 0.0), kPi / 2.0);
}

double line_slice_measure(const PlanarSet& set, cplx w0, double phi) {
  return line_intersect(set, w0, phi).measure();
}

// ---------------------------------------------------------------------------
// Steiner symmetrization
// ---------------------------------------------------------------------------

namespace {

double slice_measure(const PlanarSet& set, double u) {
  return vertical_slice(set, u).measure();
}

bool is_thin(const PlanarSet& set) {
  return std::visit(
      [](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Segment> || std::is_same_v<T, Circle>) return true;
        else if constexpr (std::is_same_v<T, ConnectedUnion>) {
          for (const PlanarSet& p : s.parts)
            if (!is_thin(p)) return false;
          return true;
        } else
          return false;
      },
      set.shape);
}

// Vertical segment within tolerance.
bool is_vertical_segment(const Segment& s) {
  return std::abs(s.p.real() - s.q.real()) <= kGeomEps * (1.0 + std::abs(s.p - s.q));
}

// Critical abscissae where the slice topology of a primitive can change.
void collect_breakpoints(const PlanarSet& set, std::vector<double>& xs) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          for (const cplx& v : s.vertices) xs.push_back(v.real());
        } else if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, Circle>) {
          xs.push_back(s.center.real() - s.radius);
          xs.push_back(s.center.real());
          xs.push_back(s.center.real() + s.radius);
        } else if constexpr (std::is_same_v<T, Segment>) {
          xs.push_back(s.p.real());
          xs.push_back(s.q.real());
        } else {
          for (const PlanarSet& p : s.parts) collect_breakpoints(p, xs);
        }
      },
      set.shape);
}

// Piecewise-linear profile u -> mu(u)/2 assembled into the symmetric polygon
// {(u, v) : 2|v| <= mu(u)} (plus a real-axis Segment when the profile is flat).
PlanarSet polygon_from_profile(const std::vector<double>& xs,
                               const std::vector<double>& mu_left,
                               const std::vector<double>& mu_right) {
  const size_t n = xs.size();
  double mu_max = 0.0;
  for (size_t i = 0; i < n; ++i) mu_max = std::max({mu_max, mu_left[i], mu_right[i]});
  if (mu_max <= kGeomEps)
    return PlanarSet{Segment{cplx(xs.front(), 0.0), cplx(xs.back(), 0.0)}};

  std::vector<cplx> lower, upper;
  auto push = [](std::vector<cplx>& chain, cplx p) {
    if (chain.empty() || std::abs(chain.back() - p) > kGeomEps) chain.push_back(p);
  };
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) push(lower, cplx(xs[i], -0.5 * mu_left[i]));
    if (i + 1 < n) push(lower, cplx(xs[i], -0.5 * mu_right[i]));
  }
  for (size_t i = n; i-- > 0;) {
    if (i + 1 < n) push(upper, cplx(xs[i], 0.5 * mu_right[i]));
    if (i > 0) push(upper, cplx(xs[i], 0.5 * mu_left[i]));
  }
  std::vector<cplx> v = lower;
  for (const cplx& p : upper) push(v, p);
  while (v.size() > 1 && std::abs(v.front() - v.back()) <= kGeomEps) v.pop_back();
  // Drop collinear interior vertices so polygon output is minimal.
  std::vector<cplx> out;
  const size_t m = v.size();
  for (size_t i = 0; i < m; ++i) {
    const cplx a = v[(i + m - 1) % m], b = v[i], c = v[(i + 1) % m];
    if (std::abs(cross(b - a, c - b)) > kGeomEps * (1.0 + std::abs(c - a))) out.push_back(b);
  }
  if (out.size() < 3)
    return PlanarSet{Segment{cplx(xs.front(), 0.0), cplx(xs.back(), 0.0)}};
  return validate(PlanarSet{Polygon{out}});
}

// Exact strip-wise profile: within each strip between consecutive breakpoints
// the measure is linear in u, so two interior evaluations determine the
// one-sided limits at the strip ends.
void strip_profile(const PlanarSet& set, const std::vector<double>& xs,
                   std::vector<double>& mu_left, std::vector<double>& mu_right) {
  const size_t n = xs.size();
  mu_left.assign(n, 0.0);
  mu_right.assign(n, 0.0);
  for (size_t i = 0; i + 1 < n; ++i) {
    const double a = xs[i], b = xs[i + 1];
    const double u1 = a + 0.25 * (b - a), u2 = a + 0.75 * (b - a);
    const double m1 = slice_measure(set, u1), m2 = slice_measure(set, u2);
    const double slope = (m2 - m1) / (u2 - u1);
    mu_right[i] = std::max(0.0, m1 + slope * (a - u1));
    mu_left[i + 1] = std::max(0.0, m1 + slope * (b - u1));
  }
}

// Refine breakpoints of a union of polygons: slice-measure kinks can occur
// where slice intervals of different parts merge or split, away from any
// vertex abscissa. Bisection localizes them.
void refine_breakpoints(const PlanarSet& set, std::vector<double>& xs) {
  const double span = xs.back() - xs.front();
  std::vector<double> extra;
  std::queue<std::pair<double, double>> work;
  for (size_t i = 0; i + 1 < xs.size(); ++i) work.push({xs[i], xs[i + 1]});
  int budget = 4096;
  while (!work.empty() && budget-- > 0) {
    auto [a, b] = work.front();
    work.pop();
    if (b - a < 1e-11 * (1.0 + span)) {
      extra.push_back(0.5 * (a + b));
      continue;
    }
    const double u1 = a + 0.25 * (b - a), um = 0.5 * (a + b), u2 = a + 0.75 * (b - a);
    const double m1 = slice_measure(set, u1), mm = slice_measure(set, um),
                 m2 = slice_measure(set, u2);
    if (std::abs(mm - 0.5 * (m1 + m2)) > 1e-12 * (1.0 + mm)) {
      work.push({a, um});
      work.push({um, b});
    }
  }
  xs.insert(xs.end(), extra.begin(), extra.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end(),
                       [&](double a, double b) { return b - a <= 1e-12 * (1.0 + span); }),
           xs.end());
}

}  // namespace

PlanarSet steiner_symmetrize(const PlanarSet& set, int n_slices) {
  if (n_slices < 2) throw Error(ErrorCode::bad_input, "n_slices must be >= 2");
  return std::visit(
      [&](const auto& s) -> PlanarSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return PlanarSet{Disk{cplx(s.center.real(), 0.0), s.radius}};
        } else if constexpr (std::is_same_v<T, Circle>) {
          // Measure-zero slices: the image is the projection on the real axis.
          return PlanarSet{Segment{cplx(s.center.real() - s.radius, 0.0),
                                   cplx(s.center.real() + s.radius, 0.0)}};
        } else if constexpr (std::is_same_v<T, Segment>) {
          if (is_vertical_segment(s)) {
            const double x = 0.5 * (s.p.real() + s.q.real());
            const double h = 0.5 * std::abs(s.p.imag() - s.q.imag());
            return PlanarSet{Segment{cplx(x, -h), cplx(x, h)}};
          }
          const double lo = std::min(s.p.real(), s.q.real());
          const double hi = std::max(s.p.real(), s.q.real());
          return PlanarSet{Segment{cplx(lo, 0.0), cplx(hi, 0.0)}};
        } else if constexpr (std::is_same_v<T, Polygon>) {
          std::vector<double> xs;
          collect_breakpoints(set, xs);
          std::sort(xs.begin(), xs.end());
          xs.erase(std::unique(xs.begin(), xs.end(),
                               [&](double a, double b) { return b - a <= kGeomEps; }),
                   xs.end());
          std::vector<double> mu_l, mu_r;
          strip_profile(set, xs, mu_l, mu_r);
          return polygon_from_profile(xs, mu_l, mu_r);
        } else {  // ConnectedUnion
          // Thin union: projection segment plus centered vertical pieces.
          if (is_thin(set)) {
            BoundingBox bb = bounding_box(set);
            ConnectedUnion out;
            out.parts.push_back(
                PlanarSet{Segment{cplx(bb.xmin, 0.0), cplx(bb.xmax, 0.0)}});
            std::function<void(const PlanarSet&)> add_vertical = [&](const PlanarSet& p) {
              if (const auto* seg = std::get_if<Segment>(&p.shape)) {
                if (is_vertical_segment(*seg)) {
                  const double x = 0.5 * (seg->p.real() + seg->q.real());
                  const double h = 0.5 * std::abs(seg->p.imag() - seg->q.imag());
                  out.parts.push_back(PlanarSet{Segment{cplx(x, -h), cplx(x, h)}});
                }
              } else if (const auto* un = std::get_if<ConnectedUnion>(&p.shape)) {
                for (const PlanarSet& q : un->parts) add_vertical(q);
              }
            };
            add_vertical(set);
            if (out.parts.size() == 1) return out.parts.front();
            return PlanarSet{out};
          }
          // One disk plus thin non-vertical parts keeps an exact closed form.
          {
            const Disk* disk = nullptr;
            bool ok = true;
            for (const PlanarSet& p : s.parts) {
              if (const auto* d = std::get_if<Disk>(&p.shape)) {
                if (disk) { ok = false; break; }
                disk = d;
              } else if (const auto* seg = std::get_if<Segment>(&p.shape)) {
                if (is_vertical_segment(*seg)) { ok = false; break; }
              } else if (!std::holds_alternative<Circle>(p.shape)) {
                ok = false;
                break;
              }
            }
            if (ok && disk) {
              BoundingBox bb = bounding_box(set);
              const Disk d{cplx(disk->center.real(), 0.0), disk->radius};
              if (bb.xmin < d.center.real() - d.radius - kGeomEps ||
                  bb.xmax > d.center.real() + d.radius + kGeomEps) {
                ConnectedUnion out;
                out.parts.push_back(PlanarSet{d});
                out.parts.push_back(
                    PlanarSet{Segment{cplx(bb.xmin, 0.0), cplx(bb.xmax, 0.0)}});
                return PlanarSet{out};
              }
              return PlanarSet{d};
            }
          }
          // General union: adaptive piecewise-linear profile. Disks are
          // approximated by n_slices-gons first.
          PlanarSet approx = set;
          std::function<void(PlanarSet&)> polygonize = [&](PlanarSet& p) {
            if (const auto* d = std::get_if<Disk>(&p.shape)) {
              std::vector<cplx> v;
              for (int i = 0; i < n_slices; ++i)
                v.push_back(d->center + std::polar(d->radius, 2.0 * kPi * i / n_slices));
              p = PlanarSet{Polygon{v}};
            } else if (auto* un = std::get_if<ConnectedUnion>(&p.shape)) {
              for (PlanarSet& q : un->parts) polygonize(q);
            }
          };
          polygonize(approx);
          std::vector<double> xs;
          collect_breakpoints(approx, xs);
          std::sort(xs.begin(), xs.end());
          xs.erase(std::unique(xs.begin(), xs.end(),
                               [&](double a, double b) { return b - a <= kGeomEps; }),
                   xs.end());
          refine_breakpoints(approx, xs);
          std::vector<double> mu_l, mu_r;
          strip_profile(approx, xs, mu_l, mu_r);
          return polygon_from_profile(xs, mu_l, mu_r);
        }
      },
      set.shape);
}

// ---------------------------------------------------------------------------
// Circle symmetrization
// ---------------------------------------------------------------------------

SampledRadialSet circle_symmetrize(const PlanarSet& set, double v, int n_rays) {
  if (!(v > 0.0)) throw Error(ErrorCode::bad_input, "v must be positive");
  if (n_rays < 8) throw Error(ErrorCode::bad_input, "n_rays must be >= 8");
  const double tol = 1e-9 * (1.0 + set_diameter(set));
  if (contains(set, cplx(0.0, v), tol) || contains(set, cplx(0.0, 0.0), tol))
    throw Error(ErrorCode::origin_in_set, "set meets the symmetrization origin");

  const cplx scale = 1.0 / cplx(v, -1.0);  // L_v(w) = w / (v - i)
  SampledRadialSet out;
  out.v = v;
  for (int j = 0; j < n_rays; ++j) {
    const double theta = 2.0 * kPi * j / n_rays;
    // The ray {rho e^{i theta}} in the L_v plane is the ray from 0 in the
    // direction e^{i theta} (v - i) in the w plane.
    const double phi = std::arg(std::polar(1.0, theta) / scale);
    IntervalSet hits = line_intersect(set, cplx(0.0, 0.0), phi);
    double log_measure = 0.0;
    bool nonempty = false;
    for (const Interval& iv : hits.intervals()) {
      if (iv.hi <= tol) continue;  // opposite ray or the origin itself
      nonempty = true;
      const double lo = std::max(iv.lo, tol);
      if (iv.hi > lo) log_measure += std::log(iv.hi / lo);
    }
    if (nonempty) {
      const double R = std::exp(0.5 * log_measure);
      out.samples.push_back({theta, R});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Largest inscribed radius
// ---------------------------------------------------------------------------

namespace {

// Nearest point of the primitive's own boundary to w.
cplx nearest_boundary_point(const PlanarSet& set, cplx w) {
  return std::visit(
      [&](const auto& s) -> cplx {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          cplx best = s.vertices.front();
          double bd = std::numeric_limits<double>::infinity();
          const size_t n = s.vertices.size();
          for (size_t i = 0; i < n; ++i) {
            const cplx a = s.vertices[i], b = s.vertices[(i + 1) % n];
            const cplx d = b - a;
            double t = ((w - a).real() * d.real() + (w - a).imag() * d.imag()) / std::norm(d);
            t = std::clamp(t, 0.0, 1.0);
            const cplx p = a + t * d;
            if (std::abs(w - p) < bd) {
              bd = std::abs(w - p);
              best = p;
            }
          }
          return best;
        } else if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, Circle>) {
          const cplx d = w - s.center;
          if (std::abs(d) <= kGeomEps) return s.center + cplx(s.radius, 0.0);
          return s.center + s.radius * d / std::abs(d);
        } else if constexpr (std::is_same_v<T, Segment>) {
          const cplx d = s.q - s.p;
          double t = ((w - s.p).real() * d.real() + (w - s.p).imag() * d.imag()) / std::norm(d);
          t = std::clamp(t, 0.0, 1.0);
          return s.p + t * d;
        } else {
          cplx best = w;
          double bd = std::numeric_limits<double>::infinity();
          for (const PlanarSet& part : s.parts) {
            const cplx p = nearest_boundary_point(part, w);
            if (std::abs(w - p) < bd) {
              bd = std::abs(w - p);
              best = p;
            }
          }
          return best;
        }
      },
      set.shape);
}

}  // namespace

double largest_inscribed_radius(const PlanarSet& set, cplx w0) {
  if (!in_interior(set, w0)) return 0.0;
  const auto* un = std::get_if<ConnectedUnion>(&set.shape);
  if (!un) {
    // Single primitive: exact boundary distance.
    if (const auto* p = std::get_if<Polygon>(&set.shape))
      return polygon_boundary_distance(p->vertices, w0);
    if (const auto* d = std::get_if<Disk>(&set.shape)) return d->radius - std::abs(w0 - d->center);
    return 0.0;  // thin sets have no interior; unreachable
  }
  // Union boundary = part boundary points not interior to another part.
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < un->parts.size(); ++i) {
    auto covered = [&](cplx p) {
      for (size_t j = 0; j < un->parts.size(); ++j)
        if (j != i && in_interior(un->parts[j], p)) return true;
      return false;
    };
    // Exact nearest point first, then a dense sweep for clipped boundaries.
    const cplx np = nearest_boundary_point(un->parts[i], w0);
    if (!covered(np)) best = std::min(best, std::abs(w0 - np));
    for (const cplx& p : boundary_sample(un->parts[i], 4096))
      if (!covered(p)) best = std::min(best, std::abs(w0 - p));
  }
  return std::isfinite(best) ? best : 0.0;
}

// ---------------------------------------------------------------------------
// Membership / distance / sampling
// ---------------------------------------------------------------------------

bool contains(const PlanarSet& set, cplx w, double tol) {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          return point_in_polygon(s.vertices, w) || polygon_boundary_distance(s.vertices, w) <= tol;
        } else if constexpr (std::is_same_v<T, Disk>) {
          return std::abs(w - s.center) <= s.radius + tol;
        } else if constexpr (std::is_same_v<T, Circle>) {
          return std::abs(std::abs(w - s.center) - s.radius) <= tol;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return point_segment_distance(w, s.p, s.q) <= tol;
        } else {
          for (const PlanarSet& part : s.parts)
            if (contains(part, w, tol)) return true;
          return false;
        }
      },
      set.shape);
}

bool in_interior(const PlanarSet& set, cplx w) {
  return std::visit(
      [&](const auto& s) -> bool {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          return point_in_polygon(s.vertices, w) &&
                 polygon_boundary_distance(s.vertices, w) > kGeomEps;
        } else if constexpr (std::is_same_v<T, Disk>) {
          return std::abs(w - s.center) < s.radius - kGeomEps;
        } else if constexpr (std::is_same_v<T, Circle> || std::is_same_v<T, Segment>) {
          return false;
        } else {
          for (const PlanarSet& part : s.parts)
            if (in_interior(part, w)) return true;
          return false;
        }
      },
      set.shape);
}

double distance_to_set(const PlanarSet& set, cplx w) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          if (point_in_polygon(s.vertices, w)) return 0.0;
          return polygon_boundary_distance(s.vertices, w);
        } else if constexpr (std::is_same_v<T, Disk>) {
          return std::max(0.0, std::abs(w - s.center) - s.radius);
        } else if constexpr (std::is_same_v<T, Circle>) {
          return std::abs(std::abs(w - s.center) - s.radius);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return point_segment_distance(w, s.p, s.q);
        } else {
          double d = std::numeric_limits<double>::infinity();
          for (const PlanarSet& part : s.parts) d = std::min(d, distance_to_set(part, w));
          return d;
        }
      },
      set.shape);
}

std::vector<cplx> boundary_sample(const PlanarSet& set, int n) {
  std::vector<cplx> out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          double perim = 0.0;
          const size_t m = s.vertices.size();
          for (size_t i = 0; i < m; ++i)
            perim += std::abs(s.vertices[(i + 1) % m] - s.vertices[i]);
          double step = perim / n;
          double carry = 0.0;
          for (size_t i = 0; i < m && (int)out.size() < n; ++i) {
            const cplx a = s.vertices[i], b = s.vertices[(i + 1) % m];
            const double len = std::abs(b - a);
            double t = carry;
            while (t < len && (int)out.size() < n) {
              out.push_back(a + (b - a) * (t / len));
              t += step;
            }
            carry = t - len;
          }
        } else if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, Circle>) {
          for (int i = 0; i < n; ++i)
            out.push_back(s.center + std::polar(s.radius, 2.0 * kPi * i / n));
        } else if constexpr (std::is_same_v<T, Segment>) {
          for (int i = 0; i < n; ++i)
            out.push_back(s.p + (s.q - s.p) * (n == 1 ? 0.5 : double(i) / (n - 1)));
        } else {
          for (const PlanarSet& part : s.parts) {
            auto pts = boundary_sample(part, n);
            out.insert(out.end(), pts.begin(), pts.end());
          }
        }
      },
      set.shape);
  return out;
}

BoundingBox bounding_box(const PlanarSet& set) {
  return std::visit(
      [&](const auto& s) -> BoundingBox {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          BoundingBox bb{1e300, -1e300, 1e300, -1e300};
          for (const cplx& v : s.vertices) {
            bb.xmin = std::min(bb.xmin, v.real());
            bb.xmax = std::max(bb.xmax, v.real());
            bb.ymin = std::min(bb.ymin, v.imag());
            bb.ymax = std::max(bb.ymax, v.imag());
          }
          return bb;
        } else if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, Circle>) {
          return {s.center.real() - s.radius, s.center.real() + s.radius,
                  s.center.imag() - s.radius, s.center.imag() + s.radius};
        } else if constexpr (std::is_same_v<T, Segment>) {
          return {std::min(s.p.real(), s.q.real()), std::max(s.p.real(), s.q.real()),
                  std::min(s.p.imag(), s.q.imag()), std::max(s.p.imag(), s.q.imag())};
        } else {
          BoundingBox bb{1e300, -1e300, 1e300, -1e300};
          for (const PlanarSet& part : s.parts) {
            BoundingBox pb = bounding_box(part);
            bb.xmin = std::min(bb.xmin, pb.xmin);
            bb.xmax = std::max(bb.xmax, pb.xmax);
            bb.ymin = std::min(bb.ymin, pb.ymin);
            bb.ymax = std::max(bb.ymax, pb.ymax);
          }
          return bb;
        }
      },
      set.shape);
}

double set_diameter(const PlanarSet& set) {
  const BoundingBox bb = bounding_box(set);
  return std::hypot(bb.xmax - bb.xmin, bb.ymax - bb.ymin);
}

double area(const PlanarSet& set) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) return polygon_signed_area(s.vertices);
        else if constexpr (std::is_same_v<T, Disk>) return kPi * s.radius * s.radius;
        else if constexpr (std::is_same_v<T, ConnectedUnion>) {
          double a = 0.0;
          for (const PlanarSet& part : s.parts) a += area(part);
          return a;
        } else
          return 0.0;
      },
      set.shape);
}

PlanarSet transformed(const PlanarSet& set, double rot, double scale, cplx shift, cplx pivot) {
  const cplx m = scale * std::polar(1.0, rot);
  auto map = [&](cplx w) { return m * (w - pivot) + pivot + shift; };
  return std::visit(
      [&](const auto& s) -> PlanarSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Polygon>) {
          Polygon out;
          for (const cplx& v : s.vertices) out.vertices.push_back(map(v));
          return PlanarSet{out};
        } else if constexpr (std::is_same_v<T, Disk>) {
          return PlanarSet{Disk{map(s.center), scale * s.radius}};
        } else if constexpr (std::is_same_v<T, Circle>) {
          return PlanarSet{Circle{map(s.center), scale * s.radius}};
        } else if constexpr (std::is_same_v<T, Segment>) {
          return PlanarSet{Segment{map(s.p), map(s.q)}};
        } else {
          ConnectedUnion out;
          for (const PlanarSet& part : s.parts)
            out.parts.push_back(transformed(part, rot, scale, shift, pivot));
          return PlanarSet{out};
        }
      },
      set.shape);
}

bool symmetric_about_real_axis(const PlanarSet& set, double rel_tol) {
  const double tol = rel_tol * (1.0 + set_diameter(set));
  for (const cplx& p : boundary_sample(set, 256)) {
    const cplx q = std::conj(p);
    // The mirror point must lie in the set and at the same boundary distance.
    if (!contains(set, q, tol)) return false;
    if (std::abs(distance_to_set(set, q) - distance_to_set(set, p)) > tol) return false;
  }
  return true;
}

}  // namespace symcap
