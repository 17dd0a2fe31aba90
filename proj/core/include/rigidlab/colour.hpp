// Distance colourings of complete graphs under arbitrary norms, pinned
// distance counts, the abstract colouring lemma with its catalogued bound
// functions, the rich-pin greedy, and the tree lower-bound certificate.
#pragma once

#include <rigidlab/hypergraph.hpp>
#include <rigidlab/pointset.hpp>
#include <rigidlab/rational.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rigidlab {

// A d-norm from the catalogue. Distance keys are exact rationals whenever the
// norm allows it (squared length for Euclidean, p-th power for integer p,
// max-coordinate for l_infinity, the polygon gauge for polygonal norms) and
// quantised floats otherwise (real non-integer p, or float point sets).
struct Norm {
  enum class Kind { euclid, lp, linf, polygonal };
  Kind kind = Kind::euclid;
  double p = 2.0;             // exponent for Kind::lp (real p >= 1)
  std::vector<VecQ> polygon;  // CCW vertices of the unit ball (centrally
                              // symmetric convex polygon, origin inside)
  MatQ facets;                // one row a per polygon edge: the edge lies on
                              // a . x = 1, so gauge(v) = max_a |a . v|
  std::string id;
};

// Parses "euclid", "l2", "linf", or "lp:<p>" with real p >= 1.
Norm parse_norm(std::string_view spec);

// Builds the gauge norm of a centrally symmetric convex polygon given by its
// vertices in counterclockwise order; validates symmetry, convexity, and that
// the origin is interior.
Norm make_polygonal_norm(std::vector<VecQ> vertices);

// The norm value as a double (for reports and thresholds).
double norm_value(const Norm& n, const std::vector<double>& v);
// True when this norm yields exact rational distance keys on exact points.
bool norm_exact(const Norm& n);
// The exact distance key (squared/p-th-power/max/gauge); requires norm_exact.
Q distance_key(const Norm& n, const VecQ& x, const VecQ& y);

// |Delta_x(P)|: the number of distinct distances from x to all of P. The 0
// distance is included (y ranges over all of P, including x itself). Throws
// UsageError when x is not a member of P.
long long pinned_distances(const Norm& n, const PointSet& P, const VecQ& x);
// Same, identifying the pin by its index into P (works for float point sets,
// where exact coordinates are unavailable).
long long pinned_distances(const Norm& n, const PointSet& P, int x_index);

struct DistanceColouring {
  Hypergraph graph;        // K_|P| with lexicographic edges
  EdgeColouring colouring; // colour_of[i] = index of the distance class
  long long colour_count = 0;
  bool quantised = false;
};

// Colours each edge of K_|P| by the distance between its endpoints.
DistanceColouring distance_colouring(const Norm& n, const PointSet& P);

// Census of the measurement map p -> (per-edge distance keys) over P^V for a
// k=2 graph under a norm; the cross-module oracle for tree certificates.
long long norm_census(const Norm& n, const Hypergraph& g, const PointSet& P,
                      long long budget = 100000000);

// Catalogued (f, g) pairs for the colouring lemma: f strictly increasing and
// invertible on (alpha, infinity), g subadditive with f^{-1}(t) >= g(t).
struct ColourBoundFunctions {
  std::string id;
  double alpha = 1.0;                   // left end of f's domain
  std::function<double(double)> f;
  std::function<double(double)> f_inv;
  std::function<double(double)> g;
};

// f(t) = (d/2) t log t, g(t) = 2t / (d log(dt + 1)), natural logs; d >= 2.
ColourBoundFunctions prop_log_bounds(int d);
// f(m) = C m^{1+delta}, g = f^{-1} = C^{-1/(1+delta)} m^{1/(1+delta)}.
ColourBoundFunctions prop_power_bounds(double C, double delta);

struct ClaimsReport {
  bool inverse_dominates = true;   // f^{-1}(m) >= g(m) on all samples
  bool strictly = true;            // ... with strict inequality
  bool subadditive = true;         // g(a) + g(b) >= g(a+b) on all samples
  long long inverse_samples = 0;
  long long pair_samples = 0;
};

// Numerically verifies the bound-function laws: f^{-1} >= g on integers
// sampled from {2, ..., 10^6} and subadditivity of g on random real pairs.
ClaimsReport verify_bound_claims(const ColourBoundFunctions& b, std::uint64_t seed,
                                 int inverse_samples = 2000, int pair_samples = 10000);

struct ColourLemmaReport {
  bool hypothesis_ok = true;     // every monochromatic subgraph obeys f
  int violating_colour = -1;     // a colour class breaking the hypothesis
  double bound = 0.0;            // (1/n) g(C(n, 2))
  int max_colour_degree = 0;     // most colour classes touching one vertex
  int argmax_vertex = -1;
  bool conclusion_holds = false; // max_colour_degree >= bound
};

// Verifies the hypothesis exhaustively (every vertex subset of every colour
// class) and evaluates the lemma's conclusion. The graph must be a complete
// graph with positional edge colours.
ColourLemmaReport check_colour_lemma(const Hypergraph& g, const EdgeColouring& colouring,
                                     const ColourBoundFunctions& bounds);

// Rejection-samples an edge colouring of K_n meeting the monochromatic bound:
// the number of colours is drawn uniformly from [n, C(n,2)], edges get
// uniform colours, and failures retry; falls back to the rainbow colouring.
EdgeColouring random_hypothesis_colouring(int n, const ColourBoundFunctions& bounds,
                                          std::uint64_t seed);

struct PinReport {
  std::vector<int> order;         // extraction order, indices into P
  std::vector<long long> counts;  // |Delta_x(P)| per pin, non-increasing
  double threshold = 0.0;         // H(|P|/2)
  bool hypothesis_ok = true;      // every kept pin meets the threshold
};

// Greedy rich-pin extraction: sorts pins by |Delta_x(P)| descending and keeps
// the top half (at least ceil(|P|/2)); reports a hypothesis failure when some
// kept pin falls below H(|P|/2).
PinReport rich_pin_set(const Norm& n, const PointSet& P,
                       const std::function<double(double)>& H);

struct TreeCertificate {
  long long certificate = 1;          // product of per-level pin counts
  std::vector<long long> level_counts; // |Delta_{x_i}(P_{i+1})| for i = 0..t-1
  std::vector<int> level_sizes;        // |V_{i+1}| exponents
  std::vector<int> pins;               // chosen x_i as indices into P
};

// Certified census lower bound for a tree under a norm: builds the halving
// chain P = P_t >= ... >= P_0 with the rich-pin greedy, picks x_i in P_i
// minimising |Delta_{x_i}(P_{i+1})|, and returns
// prod_{i=0}^{t-1} |Delta_{x_i}(P_{i+1})|^{|V_{i+1}|}.
TreeCertificate tree_certificate(const Norm& n, const Hypergraph& tree, int root,
                                 const PointSet& P);

}  // namespace rigidlab
