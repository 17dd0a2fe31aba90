// Brute-force enumeration engines: the measurement image f_{g,G}(P^V) with
// fibre statistics, the isometry energy of a point set, t-rich transformation
// classes, and the Gram/tensor corollary censuses.
#pragma once

#include <rigidlab/groups.hpp>
#include <rigidlab/hypergraph.hpp>
#include <rigidlab/metric.hpp>
#include <rigidlab/pointset.hpp>
#include <rigidlab/rigidity.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace rigidlab {

// Measurement vector f_{g,G}(p): one metric value per hyperedge, in the
// hypergraph's stored (canonical) edge order. Antisymmetric metrics read the
// vertices of each edge in ascending order.
VecQ measure(const Metric& m, const Hypergraph& g, const Realisation& p);
std::vector<double> measure_approx(const Metric& m, const Hypergraph& g,
                                   const std::vector<std::vector<double>>& points);

enum class CensusFilter { all, injective, spanning, regular };
CensusFilter parse_filter(std::string_view name);
std::string filter_name(CensusFilter f);

struct CensusOptions {
  CensusFilter filter = CensusFilter::all;
  long long budget = 100000000;  // cap on |P|^|V| assignments scanned
  int threads = 0;               // 0 = honour RIGIDLAB_THREADS, else 1
  double quantum = 1e-9;         // float-mode census key grid
};

struct CensusReport {
  long long distinct_count = 0;          // |f_{g,G}(P^V)| under the filter
  std::vector<long long> fibre_sizes;    // multiset of fibre sizes, descending
  long long enumerated = 0;              // realisations passing the filter
  CensusFilter filter = CensusFilter::all;
  // Float-mode keys are quantised to the key grid; equal-after-rounding
  // collisions undercount, so quantised counts are a lower bound.
  bool quantised = false;
};

// Enumerates p in P^V (odometer, last vertex innermost; parallel split on the
// first vertex with a deterministic merge) and keys fibres by measurement
// vector. Throws BudgetError naming the required budget when |P|^|V| exceeds
// the cap.
CensusReport census(const Metric& m, const Hypergraph& g, const PointSet& P,
                    const CensusOptions& opts = {});

struct EnergyReport {
  long long energy = 0;
  std::string method;        // "finite-group" or "affine-solve"
  bool fallback_used = false;
};

// Counts ordered pairs (p, q) in P^V x P^V admitting theta in Gamma with
// theta p = q. Congruence under a group is an equivalence relation, so the
// energy is the sum of squared congruence-class sizes; classes are grouped by
// exact invariant keys where the group admits a complete one and by pairwise
// congruence tests within invariant buckets otherwise.
EnergyReport energy(const TransformGroup& G, int v_size, const PointSet& P,
                    long long budget = 100000000);
EnergyReport energy(const Metric& m, int v_size, const PointSet& P,
                    long long budget = 100000000);

// Reference implementation deciding every ordered pair independently via
// exists_transform; the keyed fast paths above must agree with it.
EnergyReport energy_pairwise(const TransformGroup& G, int v_size, const PointSet& P,
                             long long budget = 100000000);

struct RichReport {
  long long class_count = 0;  // |R_>=t(P)| up to the ~_P equivalence
  int t = 2;
  // Set for the pseudo-Euclidean group when P touches the diagonal lines
  // x = +-y: counts are still reported but the tightness theory does not
  // cover such sets.
  bool diagonal_warning = false;
};

// Enumerates candidate transforms mapping ordered point pairs of P to ordered
// point pairs of P, keeps those with |P intersect theta P| >= t, and counts
// classes under ~_P (equal restriction graphs of theta on P intersect
// theta^{-1} P). Supported groups: SE(2), E(2), pseudo-Euclidean; t >= 2.
RichReport rich_transformations(const TransformGroup& G, const PointSet& P, int t);

// |M_n(P)|: distinct n x n Gram matrices with columns drawn from P (dims
// 1..3), computed as the census of the complete graph with loops on n
// vertices under the dot metric.
long long gram_census(const PointSet& P, int n, long long budget = 100000000);

// |T_n(P)|: distinct order-k symmetric tensors (k >= 3), computed as the
// census of the complete k-uniform hypergraph with repeats on n vertices
// under the sym_tensor metric.
long long tensor_census(const PointSet& P, int n, int k, long long budget = 100000000);

struct ConsistencyReport {
  bool pairs_preserve_measurement = true;  // every energy pair has f(p) = f(q)
  bool energy_dominated = true;            // sum of squared fibre sizes >= energy
  long long energy = 0;                    // per-pair route (cross-validates)
  long long keyed_energy = 0;              // keyed fast path
  long long sum_fibre_sq = 0;
  long long distinct_count = 0;
  Q ratio;                                 // |P|^{2|V|} / (distinct * energy)
};

// Cross-checks the census fibres against the energy on the same point set,
// deciding pairs one at a time so the keyed energy paths are validated too.
ConsistencyReport fibre_energy_consistency(const Metric& m, const Hypergraph& g,
                                           const PointSet& P, long long budget = 100000000);

}  // namespace rigidlab
