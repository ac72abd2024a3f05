#ifndef SYMCAP_INEQUALITY_HPP
#define SYMCAP_INEQUALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "symcap/capacity.hpp"
#include "symcap/confmap.hpp"
#include "symcap/geometry.hpp"

namespace symcap {

enum class InequalityName {
  polya_szego,
  theorem1,
  theorem2,
  schiffer,
  corollary1,
  corollary2,
  m_bound
};

const char* inequality_name(InequalityName n);

struct InequalityReport {
  InequalityName name;
  double lhs = 0.0;   // bounded side
  double rhs = 0.0;   // bound side
  double slack = 0.0; // (bound side) - (bounded side); pass iff slack >= -tol
  double tol = 1e-8;
  bool pass = false;
  std::string inputs_digest;
  std::vector<std::pair<std::string, double>> notes;
};

InequalityReport make_report(InequalityName name, double bounded, double bound, double tol,
                             const std::string& digest);

// ---------------------------------------------------------------------------
// Map dispatch
// ---------------------------------------------------------------------------

/// Exterior map of a validated set: closed-form family when the shape matches
/// one (disk, circle, segment, slit disk), exterior SC for polygons.
ExteriorMap exterior_map_of(const PlanarSet& set);

/// True when exterior_map_of picks a closed-form family (no SC solve).
bool has_closed_form_map(const PlanarSet& set);

/// A deterministic point of the set (interior where one exists).
cplx representative_point(const PlanarSet& set);

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

struct Theorem1Check {
  InequalityReport inequality;   // functional(E) >= functional(E*)
  InequalityReport polya_szego;  // |a1| >= |a1*|
  cplx a1, am1, a1_star, am1_star;
};

Theorem1Check check_theorem1_full(const PlanarSet& set, double tol = 1e-8);
InequalityReport check_theorem1(const PlanarSet& set, double tol = 1e-8);

/// functional(steiner(outer)) >= functional(inner), inner within E*.
InequalityReport check_theorem2(const PlanarSet& outer, const PlanarSet& inner,
                                double tol = 1e-8);

/// Green-function comparison for the closed-form pair G_j = {|w| > rho_j},
/// evaluated at (iv, infinity).
InequalityReport check_schiffer_disks(double v, double rho1, double rho2, double tol = 1e-12);

/// Slice/inscribed-radius bound for a class-Sigma set:
/// (m^4 + 16 R^4)/(8 m^2) <= 1 + Re e^{-2i phi} a_{-1}.
InequalityReport check_corollary1(const PlanarSet& set, cplx w0, double phi, cplx a_minus1,
                                  double tol = 1e-8);

/// Strip-thickness bound: Re a_{-1} <= 1 - (c^2/2)(1 - k^2) under the slice
/// hypothesis.
InequalityReport check_corollary2(const PlanarSet& set, double alpha, double beta, double gamma,
                                  cplx a_minus1, double tol = 1e-8);

/// Classical bound m_f(w0, phi) <= 4 over n_phi sampled directions, checked on
/// the Sigma-normalized set (equivalently m <= 4 |a1| on the original set).
InequalityReport check_m_bound(const PlanarSet& set, cplx w0, int n_phi = 64,
                               double tol = 1e-9);

// ---------------------------------------------------------------------------
// Corpus
// ---------------------------------------------------------------------------

struct Scene {
  std::string name;
  PlanarSet set;
  std::optional<PlanarSet> inner;
};

struct CorpusItemResult {
  std::string name;
  bool ok = false;
  std::string error;
  std::vector<InequalityReport> reports;
};

struct CorpusConfig {
  double tol_closed_form = 1e-8;
  double tol_sc = 1e-5;
};

std::vector<CorpusItemResult> run_corpus(const std::vector<Scene>& corpus,
                                         const CorpusConfig& config = {});

/// The versioned 12-scene corpus (segments at six angles, unit circle, square,
/// L-shape, tall and flat rectangles, slit disk).
std::vector<Scene> builtin_corpus();

}  // namespace symcap

#endif
