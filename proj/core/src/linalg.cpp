#include "rigidlab/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cassert>

namespace rigidlab {

namespace {

// Forward elimination with partial (first nonzero) pivoting. Returns the
// pivot column for each pivot row; m is left in echelon form.
std::vector<int> echelonize(MatQ& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Q inv = Q(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Q factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return pivot_cols;
}

}  // namespace

int rank_exact(MatQ m) {
    return static_cast<int>(echelonize(m).size());
}

MatQ nullspace_exact(const MatQ& m, int cols) {
    MatQ red = m;
    const std::vector<int> pivots = echelonize(red);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    MatQ basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        VecQ v(cols, Q(0));
        v[free] = 1;
        // Back-substitute: row i has pivot at pivots[i] with coefficient 1.
        for (size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -red[i][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_exact(MatQ m, VecQ rhs, VecQ& x, bool& unique) {
    assert(m.size() == rhs.size());
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    for (size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
    if (rows == 0) {
        x.assign(cols, Q(0));
        unique = (cols == 0);
        return true;
    }
    MatQ& aug = m;
    std::vector<int> pivots = echelonize(aug);
    // A pivot in the RHS column means inconsistency.
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return false;
    x.assign(cols, Q(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = aug[i][cols];
    }
    unique = (pivots.size() == cols);
    return true;
}

int row_basis_exact(MatQ& rows) {
    const std::vector<int> pivots = echelonize(rows);
    rows.resize(pivots.size());
    return static_cast<int>(pivots.size());
}

bool in_kernel_exact(const MatQ& m, const VecQ& vec) {
    for (const auto& row : m) {
        Q acc(0);
        assert(row.size() == vec.size());
        for (size_t j = 0; j < row.size(); ++j) acc += row[j] * vec[j];
        if (acc != 0) return false;
    }
    return true;
}

VecQ mat_vec(const MatQ& a, const VecQ& x) {
    VecQ y(a.size(), Q(0));
    for (size_t i = 0; i < a.size(); ++i) {
        assert(a[i].size() == x.size());
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

MatQ mat_mul(const MatQ& a, const MatQ& b) {
    const size_t n = a.size();
    const size_t k = b.size();
    const size_t m = k == 0 ? 0 : b[0].size();
    MatQ c(n, VecQ(m, Q(0)));
    for (size_t i = 0; i < n; ++i) {
        assert(a[i].size() == k);
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    }
    return c;
}

MatQ mat_transpose(const MatQ& a) {
    if (a.empty()) return {};
    MatQ t(a[0].size(), VecQ(a.size(), Q(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

MatQ mat_identity(int n) {
    MatQ id(n, VecQ(n, Q(0)));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

bool mat_equal(const MatQ& a, const MatQ& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

Q det2(const MatQ& a) {
    assert(a.size() == 2 && a[0].size() == 2);
    return a[0][0] * a[1][1] - a[0][1] * a[1][0];
}

bool mat_inverse(const MatQ& a, MatQ& inv) {
    const int n = static_cast<int>(a.size());
    MatQ aug = a;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? Q(1) : Q(0));
    }
    const std::vector<int> pivots = echelonize(aug);
    if (static_cast<int>(pivots.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        if (pivots[i] != i) return false;
    }
    inv.assign(n, VecQ(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return true;
}

int rank_approx(const std::vector<std::vector<double>>& m, double tol_scale) {
    if (m.empty() || m[0].empty()) return 0;
    Eigen::MatrixXd e(m.size(), m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) e(static_cast<int>(i), static_cast<int>(j)) = m[i][j];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double tol = tol_scale * sv(0);
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++r;
    return r;
}

}  // namespace rigidlab
