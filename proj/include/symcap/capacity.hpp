#ifndef SYMCAP_CAPACITY_HPP
#define SYMCAP_CAPACITY_HPP

#include <cstdint>
#include <string>

#include "symcap/confmap.hpp"
#include "symcap/geometry.hpp"

namespace symcap {

enum class CapacityMethod { coefficients, monte_carlo, fekete };

struct CapacityReport {
  double logcap = 0.0;      // |a1|
  double functional = 0.0;  // |a1|^2 - Re(a1 a_{-1})
  bool hcap_valid = false;  // true iff the set is symmetric about the real axis
  CapacityMethod method = CapacityMethod::coefficients;
  double error_estimate = 0.0;
};

/// Logarithmic capacity |a1| of the exterior map.
double logcap_from_map(const ExteriorMap& map);

/// |a1|^2 - Re(a1 a_{-1}); equals hcap(E cap H) for sets symmetric about R.
double functional_from_map(const ExteriorMap& map);

CapacityReport capacity_report(const ExteriorMap& map, const PlanarSet& set);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

/// Walk-on-spheres estimator of hcap for sets symmetric about the real axis.
/// Brownian motion from i y_start absorbed on (set union R) within eps;
/// estimate = y_start * mean(Im at absorption). Run at y_start and 2 y_start
/// and Richardson-extrapolated in 1/y^2. Deterministic for a fixed seed and
/// independent of any walker partitioning (per-walker seeding).
MonteCarloEstimate hcap_monte_carlo(const PlanarSet& set, double y_start, std::int64_t n_walkers,
                                    double eps, std::uint64_t seed);

/// Convenience wrapper with the default y_start = 25 x diameter and
/// eps = 1e-4 x diameter.
MonteCarloEstimate hcap_monte_carlo_default(const PlanarSet& set, std::int64_t n_walkers,
                                            std::uint64_t seed);

/// Greedy Leja-point estimate of the logarithmic capacity from a boundary
/// discretization; a +-1-2% sanity oracle, not a precision method.
double logcap_fekete(const PlanarSet& set, int n_points);

}  // namespace symcap

#endif
