#pragma once

#include <vector>

#include "rigidlab/rational.hpp"

namespace rigidlab {

// Exact dense linear algebra over Q, sized for desk-scale matrices (tens of
// rows and columns). Plain Gaussian elimination; exactness matters more than
// asymptotics here because every rank/kernel decision feeds a combinatorial
// verdict.

// Rank of m (consumed by value).
int rank_exact(MatQ m);

// Basis of the right kernel {x : M x = 0} returned as rows; `cols` is the
// width of m (needed when m has no rows).
MatQ nullspace_exact(const MatQ& m, int cols);

// Solves M x = rhs. Returns false when inconsistent. When the system is
// underdetermined the free variables are set to zero and unique = false.
bool solve_exact(MatQ m, VecQ rhs, VecQ& x, bool& unique);

// In-place row reduction keeping only a basis of the row span; returns rank.
int row_basis_exact(MatQ& rows);

// True when M x = 0 for the row-vector convention x * M^T == 0, i.e. checks
// that `vec` lies in the right kernel of m.
bool in_kernel_exact(const MatQ& m, const VecQ& vec);

// Matrix-vector and small matrix helpers used across modules.
VecQ mat_vec(const MatQ& a, const VecQ& x);
MatQ mat_mul(const MatQ& a, const MatQ& b);
MatQ mat_transpose(const MatQ& a);
MatQ mat_identity(int n);
bool mat_equal(const MatQ& a, const MatQ& b);
Q det2(const MatQ& a);

// Inverse of a square exact matrix; returns false when singular.
bool mat_inverse(const MatQ& a, MatQ& inv);

// Rank of a double matrix via SVD, threshold = tol_scale * sigma_max.
// Mirrors the exact API for the approximate pipeline.
int rank_approx(const std::vector<std::vector<double>>& m, double tol_scale);

}  // namespace rigidlab
