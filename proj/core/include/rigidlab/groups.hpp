// Transformation groups acting on R^d: the isometry groups of the catalogued
// metrics plus the explicitly selectable groups used by the rich-transform
// search (SE(2), E(2), and the pseudo-Euclidean plane group R^2 x| O(1,1)).
//
// The central decision procedure is exists_transform: given ordered tuples
// p, q in (Q^d)^n, decide exactly whether some group element maps p onto q
// slot by slot. Each group kind has a complete closed-form decision, valid
// for degenerate (collinear, coincident, rank-deficient) tuples as well.
#pragma once

#include <rigidlab/metric.hpp>
#include <rigidlab/rational.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace rigidlab {

enum class GroupKind {
  euclid,         // E(d): A^T A = I, translation free
  se2,            // SE(2): A^T A = I, det A = 1, translation free (d = 2)
  pseudo,         // R^2 x| O(1,1): A^T diag(1,-1) A = diag(1,-1), translation free
  transl_finite,  // translations x| finite linear group (lp metrics)
  linear_orth,    // O(d) linear: A^T A = I, no translation (dot)
  linear_o11,     // O(1,1) linear: no translation (skew)
  finite,         // explicit finite element list (sym_tensor)
};

struct TransformGroup {
  GroupKind kind = GroupKind::euclid;
  int d = 2;
  std::string id;
  std::vector<MatQ> linear_parts;    // transl_finite only
  std::vector<AffineMap> elements;   // finite only
};

// The isometry group of a catalogued metric.
TransformGroup group_of(const Metric& m);

// Parses explicit group ids for the CLI: "e2"/"euclid", "se2", "pseudo",
// or any metric id (resolved through group_of). Throws UsageError.
TransformGroup parse_group(std::string_view id, int d);

// Exact membership test.
bool group_member(const TransformGroup& G, const AffineMap& theta);

// Decides whether some theta in G maps p(i) to q(i) for every slot i.
// Tuples must have equal length and dimension G.d. Complete for all inputs,
// including degenerate configurations.
bool exists_transform(const TransformGroup& G, const std::vector<VecQ>& p,
                      const std::vector<VecQ>& q);

// All group elements mapping the ordered pair (p1, p2) to (q1, q2), for
// p1 != p2. Supported kinds: se2 (<= 1 element), euclid with d = 2
// (<= 2 elements), pseudo (<= 4 elements). Throws UsageError otherwise.
std::vector<AffineMap> pair_induced_transforms(const TransformGroup& G, const VecQ& p1,
                                               const VecQ& p2, const VecQ& q1, const VecQ& q2);

}  // namespace rigidlab
