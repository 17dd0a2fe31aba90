// Infinitesimal rigidity engine: assembles the Jacobian of the measurement
// map p |-> (g(p(v_1), ..., p(v_k)))_e, computes the space of trivial motions
// induced by the metric's isometry Lie algebra, and decides rigidity
// predicates exactly over Q (with an SVD-based approximate mode mirroring the
// exact API).
#pragma once

#include <rigidlab/hypergraph.hpp>
#include <rigidlab/metric.hpp>
#include <rigidlab/rational.hpp>

#include <cstdint>
#include <vector>

namespace rigidlab {

struct Realisation {
  int d = 2;
  std::vector<VecQ> points;  // indexed by vertex

  int vertex_count() const { return static_cast<int>(points.size()); }
};

struct RigidityVerdict {
  int rank = 0;
  int kernel_dim = 0;       // d |V| - rank
  int trivial_dim = 0;      // dim of the trivial-motion space at p
  bool trivial_contained = false;  // trivial motions lie in the kernel
  bool infinitesimally_rigid = false;
  bool affinely_spanning = false;
  bool approximate = false;  // verdict computed with float tolerances
};

// |E| x d|V| matrix; the row of hyperedge e carries, in the block of vertex
// v, the sum of the g-gradients over the slots of e occupied by v.
// Throws UsageError when metric arity/dimension mismatch the graph or p.
MatQ jacobian(const Metric& m, const Hypergraph& g, const Realisation& p);

// Basis (as rows of length d|V|) of {v |-> A p(v) + b : (A, b) generator},
// reduced by exact elimination.
MatQ trivial_motions(const Metric& m, const Hypergraph& g, const Realisation& p);

// True when {p(v)} affinely spans R^d, i.e. the homogeneous (d+1) x |V|
// matrix [p(v); 1] has rank d + 1.
bool affinely_spanning(const Realisation& p);

RigidityVerdict is_infinitesimally_rigid(const Metric& m, const Hypergraph& g,
                                         const Realisation& p);

// Approximate-mode verdict on float coordinates; rank decisions use a
// singular-value threshold of tol_scale * sigma_max per matrix.
RigidityVerdict is_infinitesimally_rigid_approx(const Metric& m, const Hypergraph& g,
                                                const std::vector<std::vector<double>>& points,
                                                double tol_scale = 1e-9);

// Samples `trials` integer realisations with coordinates uniform in
// [-10^6, 10^6] and returns rigid as soon as one is infinitesimally rigid
// (infinitesimal rigidity at any point certifies generic rigidity; sampling
// makes a false negative vanishingly unlikely).
struct GenericVerdict {
  bool rigid = false;
  int trials_used = 0;
  std::uint64_t seed = 0;
  RigidityVerdict witness_verdict;
  Realisation witness;
};

GenericVerdict is_g_rigid(const Metric& m, const Hypergraph& g, int trials, std::uint64_t seed);

// Maximal Jacobian rank over sampled realisations; cached per (metric, graph)
// under a lock so concurrent censuses share the value.
int generic_rank(const Metric& m, const Hypergraph& g, std::uint64_t seed = 7);

// True when rank J f(p) equals the sampled generic rank.
bool is_g_regular(const Metric& m, const Hypergraph& g, const Realisation& p);

// Uniform integer realisation in [-bound, bound]^d, the generic-sampling
// primitive shared by is_g_rigid and the regularity cache.
Realisation sample_realisation(int d, int n, long bound, std::uint64_t seed);

}  // namespace rigidlab
