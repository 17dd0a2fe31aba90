// Polynomial metric catalogue: the measurement polynomials g, their gradients,
// and descriptors of the associated isometry groups (Lie-algebra generators,
// exact membership predicates, finite enumerations where applicable).
//
// Catalogued metrics (CLI ids):
//   euclid_sq        squared Euclidean distance, any d
//   pseudo11         (x1-y1)^2 - (x2-y2)^2, d = 2
//   lp:<p>           sum_j (x_j-y_j)^p for even integer p >= 4 (lp:2 aliases euclid_sq)
//   dot              standard inner product, any d
//   skew             x1*y2 - x2*y1, d = 2 (antisymmetric)
//   sym_tensor:<k>   sum_j x_j(1)...x_j(k), arity k >= 3, any d
#pragma once

#include <rigidlab/errors.hpp>
#include <rigidlab/rational.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rigidlab {

enum class Symmetry { symmetric, antisymmetric };

enum class MetricFamily { euclid_sq, pseudo11, lp, dot, skew, sym_tensor };

struct Metric {
  MetricFamily family = MetricFamily::euclid_sq;
  std::string id;  // canonical identifier, e.g. "lp:4"
  int d = 2;       // ambient dimension
  int k = 2;       // arity of g
  Symmetry symmetry = Symmetry::symmetric;
  int degree = 2;  // total degree of g
  int lp = 0;      // exponent for the lp family, 0 otherwise
};

// Parses a metric id string and binds it to dimension d.
// Throws UsageError for unknown ids or invalid parameters (odd p, k < 3,
// pseudo11/skew outside d = 2, d < 1).
Metric parse_metric(std::string_view id, int d);

// --- evaluation ------------------------------------------------------------

// Exact evaluation of g at k points of dimension d. For antisymmetric metrics
// the arguments are taken in the given order.
Q eval_g(const Metric& m, const std::vector<VecQ>& args);

// Exact gradient of g with respect to argument `slot` (0-based).
VecQ grad_g(const Metric& m, const std::vector<VecQ>& args, int slot);

// Floating-point counterparts (approximate mode).
double eval_g(const Metric& m, const std::vector<std::vector<double>>& args);
std::vector<double> grad_g(const Metric& m, const std::vector<std::vector<double>>& args,
                           int slot);

// --- affine maps -----------------------------------------------------------

// x |-> A x + b with rational entries. Also used to carry Lie-algebra
// elements (infinitesimal generators), which are formal (A, b) pairs.
struct AffineMap {
  MatQ A;
  VecQ b;

  int dim() const { return static_cast<int>(b.size()); }
};

AffineMap affine_identity(int d);
VecQ affine_apply(const AffineMap& f, const VecQ& x);
// affine_compose(f, g)(x) = f(g(x)).
AffineMap affine_compose(const AffineMap& f, const AffineMap& g);
// Inverse map; nullopt when A is singular.
std::optional<AffineMap> affine_inverse(const AffineMap& f);
bool affine_equal(const AffineMap& f, const AffineMap& g);

// --- isometry groups -------------------------------------------------------

// Spanning set of the Lie algebra of the g-isometry group, as (A, b) pairs.
// euclid_sq: d translations + d(d-1)/2 rotations; pseudo11: 2 translations +
// hyperbolic generator [[0,1],[1,0]]; lp: d translations; dot: d(d-1)/2
// rotations; skew: [[0,1],[1,0]]; sym_tensor: empty.
std::vector<AffineMap> lie_generators(const Metric& m);

// Exact membership test for the g-isometry group, via closed-form matrix
// identities: euclid_sq -> A^T A = I; pseudo11/skew -> A^T diag(1,-1) A =
// diag(1,-1) (b = 0 for skew); lp -> A signed permutation; dot -> A^T A = I
// and b = 0; sym_tensor -> A (signed iff k even) permutation and b = 0.
// Throws UsageError on dimension mismatch.
bool is_isometry(const Metric& m, const AffineMap& theta);

// The admissible linear parts A when they range over a finite set
// (lp: signed permutations; sym_tensor: (signed) permutations);
// nullopt when the linear-part group is infinite.
std::optional<std::vector<MatQ>> finite_linear_parts(const Metric& m);

// Full enumeration of the isometry group when it is finite (sym_tensor only).
std::optional<std::vector<AffineMap>> finite_elements(const Metric& m);

// Residual of the linearized invariance identity
//   sum_i grad_g(args, i) . (A x_i + b)
// for a Lie-algebra element (A, b); identically zero iff (A, b) is an
// infinitesimal g-isometry at args.
Q linearized_invariance_residual(const Metric& m, const AffineMap& gen,
                                 const std::vector<VecQ>& args);

// --- matrix shape predicates ------------------------------------------------

// Exactly one nonzero entry per row and column, each +1 or -1 (resp. +1).
bool is_signed_permutation(const MatQ& A);
bool is_permutation(const MatQ& A);

// All permutation matrices of size d, optionally with all +-1 sign choices.
std::vector<MatQ> permutation_matrices(int d, bool signed_entries);

}  // namespace rigidlab
