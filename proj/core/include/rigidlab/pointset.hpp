// Witness point-set generators (grids, lines, circle configurations,
// isometry orbits, seeded random integer sets) and the hypersurface-richness
// audit used to probe the incidence hypothesis behind the counting bounds.
#pragma once

#include <rigidlab/metric.hpp>
#include <rigidlab/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rigidlab {

struct PointSet {
  int d = 2;
  bool exact = true;
  std::vector<VecQ> points;                  // populated in exact mode
  std::vector<std::vector<double>> fpoints;  // always populated (derived when exact)
  std::string provenance;                    // generator id + parameters + seed

  int size() const {
    return static_cast<int>(exact ? points.size() : fpoints.size());
  }
};

// Wraps explicit coordinates (e.g. parsed from a points file) as an exact
// point set, validating dimensions and rejecting duplicates.
PointSet make_pointset(int d, std::vector<VecQ> points, std::string provenance = "custom");

// The m^d integer grid {0, ..., m-1}^d, exact.
PointSet grid(int m, int d);

// {(x/sqrt(n), y/sqrt(n)) : x, y in {0, ..., sqrt(n)}} for perfect-square n;
// exact rationals. Throws UsageError for non-square n.
PointSet scaled_grid(int n);

// n equally spaced integer points on the x-axis of the plane.
PointSet line(int n);

// n-th roots of unity: exact for n in {1, 2, 4}, float otherwise (exact =
// false flags the quantised-census caveat).
PointSet circle(int n);

// n distinct rational points exactly on the unit circle: the orbit of (1, 0)
// under the rational rotation [[3/5, -4/5], [4/5, 3/5]] (an infinite-order
// rotation, so iterates never repeat).
PointSet circle_rat(int n);

// Orbit segment {theta^j(x) : j = 0..n-1}. Requires theta to be a g-isometry
// of m and the iterates to stay distinct; a collision raises UsageError
// naming the period.
PointSet orbit_tight_set(const Metric& m, const AffineMap& theta, const VecQ& x, int n);

// n distinct integer points uniform in [-bound, bound]^d, seeded and
// reproducible. Throws UsageError when bound < n or when collision retries
// are exhausted.
PointSet random_generic(int d, int n, long bound, std::uint64_t seed);

// Scans (basis-1)-subsets of P, fits the pencil of degree-<= D curves through
// each subset, and reports the maximum number of points of P on any fitted
// curve. Sound but incomplete: it finds every curve containing at least
// basis-1 points of P whose defining subset pins the pencil down to one
// curve; it does not certify the hypothesis over all hypersurfaces.
struct CurveAuditReport {
  int basis_size = 0;           // number of degree-<= D monomials
  long long subsets_scanned = 0;
  bool subsampled = false;      // budget forced random subset sampling
  int max_incidence = 0;
  double threshold = 0.01;
  bool hypothesis_holds = false;  // max_incidence <= threshold * |P|
};

CurveAuditReport curve_richness_audit(const PointSet& pts, int degree, double threshold = 0.01,
                                      long long max_subsets = 200000, std::uint64_t seed = 7);

}  // namespace rigidlab
