#include <rigidlab/pointset.hpp>

#include <rigidlab/errors.hpp>
#include <rigidlab/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rigidlab {

namespace {

void derive_fpoints(PointSet& ps) {
  ps.fpoints.clear();
  ps.fpoints.reserve(ps.points.size());
  for (const VecQ& p : ps.points) {
    std::vector<double> fp(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) fp[i] = q_to_double(p[i]);
    ps.fpoints.push_back(std::move(fp));
  }
}

}  // namespace

PointSet make_pointset(int d, std::vector<VecQ> points, std::string provenance) {
  if (d < 1) throw UsageError("make_pointset: dimension must be at least 1");
  if (points.empty()) throw UsageError("make_pointset: point set must be nonempty");
  std::map<VecQ, bool, VecQLess> seen;
  for (const VecQ& p : points) {
    if (static_cast<int>(p.size()) != d)
      throw UsageError("make_pointset: point dimension does not match d");
    if (!seen.emplace(p, true).second) {
      std::string coords;
      for (const Q& c : p) coords += (coords.empty() ? "(" : ", ") + q_to_string(c);
      throw UsageError("make_pointset: duplicate point " + coords + ")");
    }
  }
  PointSet ps;
  ps.d = d;
  ps.points = std::move(points);
  ps.provenance = std::move(provenance);
  derive_fpoints(ps);
  return ps;
}

PointSet grid(int m, int d) {
  if (m < 1) throw UsageError("grid: side length must be at least 1");
  if (d < 1) throw UsageError("grid: dimension must be at least 1");
  PointSet ps;
  ps.d = d;
  std::vector<int> idx(d, 0);
  while (true) {
    VecQ p(d);
    for (int i = 0; i < d; ++i) p[i] = Q(idx[i]);
    ps.points.push_back(std::move(p));
    int pos = d - 1;
    while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
    if (pos < 0) break;
  }
  std::ostringstream prov;
  prov << "grid(" << m << "," << d << ")";
  ps.provenance = prov.str();
  derive_fpoints(ps);
  return ps;
}

PointSet scaled_grid(int n) {
  if (n < 1) throw UsageError("scaled_grid: n must be a positive perfect square");
  bool square = false;
  const long root = perfect_sqrt(n, square);
  if (!square) throw UsageError("scaled_grid: n must be a perfect square");
  PointSet ps;
  ps.d = 2;
  for (long x = 0; x <= root; ++x) {
    for (long y = 0; y <= root; ++y) {
      Q px(x, root);
      Q py(y, root);
      px.canonicalize();
      py.canonicalize();
      ps.points.push_back({px, py});
    }
  }
  ps.provenance = "scaled_grid(" + std::to_string(n) + ")";
  derive_fpoints(ps);
  return ps;
}

PointSet line(int n) {
  if (n < 1) throw UsageError("line: n must be at least 1");
  PointSet ps;
  ps.d = 2;
  for (int i = 0; i < n; ++i) ps.points.push_back({Q(i), Q(0)});
  ps.provenance = "line(" + std::to_string(n) + ")";
  derive_fpoints(ps);
  return ps;
}

PointSet circle(int n) {
  if (n < 1) throw UsageError("circle: n must be at least 1");
  PointSet ps;
  ps.d = 2;
  ps.provenance = "circle(" + std::to_string(n) + ")";
  if (n == 1 || n == 2 || n == 4) {
    const int step = 4 / n;
    const VecQ roots[4] = {{Q(1), Q(0)}, {Q(0), Q(1)}, {Q(-1), Q(0)}, {Q(0), Q(-1)}};
    for (int k = 0; k < n; ++k) ps.points.push_back(roots[k * step]);
    derive_fpoints(ps);
    return ps;
  }
  ps.exact = false;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    ps.fpoints.push_back({std::cos(angle), std::sin(angle)});
  }
  return ps;
}

PointSet circle_rat(int n) {
  if (n < 1) throw UsageError("circle_rat: n must be at least 1");
  PointSet ps;
  ps.d = 2;
  const MatQ rot = {{Q(3, 5), Q(-4, 5)}, {Q(4, 5), Q(3, 5)}};
  VecQ p = {Q(1), Q(0)};
  for (int k = 0; k < n; ++k) {
    ps.points.push_back(p);
    p = mat_vec(rot, p);
  }
  ps.provenance = "circle_rat(" + std::to_string(n) + ")";
  derive_fpoints(ps);
  return ps;
}

PointSet orbit_tight_set(const Metric& m, const AffineMap& theta, const VecQ& x, int n) {
  if (n < 1) throw UsageError("orbit_tight_set: n must be at least 1");
  if (static_cast<int>(x.size()) != m.d || theta.dim() != m.d)
    throw UsageError("orbit_tight_set: dimension mismatch between metric, transform, and base point");
  if (!is_isometry(m, theta))
    throw UsageError("orbit_tight_set: transform is not an isometry of the metric");
  PointSet ps;
  ps.d = m.d;
  std::map<VecQ, int, VecQLess> seen;
  VecQ p = x;
  for (int j = 0; j < n; ++j) {
    const auto [it, inserted] = seen.emplace(p, j);
    if (!inserted) {
      std::ostringstream msg;
      msg << "orbit_tight_set: orbit of " << n << " points collides after " << j
          << " steps (transform has period " << (j - it->second) << " on this point)";
      throw UsageError(msg.str());
    }
    ps.points.push_back(p);
    p = affine_apply(theta, p);
  }
  std::ostringstream prov;
  prov << "orbit(" << m.id << ",n=" << n << ")";
  ps.provenance = prov.str();
  derive_fpoints(ps);
  return ps;
}

PointSet random_generic(int d, int n, long bound, std::uint64_t seed) {
  if (d < 1) throw UsageError("random_generic: dimension must be at least 1");
  if (n < 1) throw UsageError("random_generic: n must be at least 1");
  if (bound < n) throw UsageError("random_generic: bound must be at least n");
  PointSet ps;
  ps.d = d;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::map<VecQ, bool, VecQLess> seen;
  const long long max_draws = 1000LL * n + 10000;
  long long draws = 0;
  while (static_cast<int>(ps.points.size()) < n) {
    if (++draws > max_draws)
      throw UsageError("random_generic: exhausted retries without n distinct points");
    VecQ p(d);
    for (int i = 0; i < d; ++i) p[i] = Q(dist(rng));
    if (!seen.emplace(p, true).second) continue;
    ps.points.push_back(std::move(p));
  }
  std::ostringstream prov;
  prov << "random_generic(" << d << "," << n << ",b=" << bound << ",s=" << seed << ")";
  ps.provenance = prov.str();
  derive_fpoints(ps);
  return ps;
}

namespace {

// Exponent pairs (i, j) with i + j <= degree, for bivariate monomials x^i y^j.
std::vector<std::pair<int, int>> monomial_exponents(int degree) {
  std::vector<std::pair<int, int>> exps;
  for (int total = 0; total <= degree; ++total)
    for (int i = total; i >= 0; --i) exps.emplace_back(i, total - i);
  return exps;
}

// C(n, r) saturating at cap + 1 so callers can test "fits in budget".
long long comb_capped(int n, int r, long long cap) {
  if (r < 0 || r > n) return 0;
  long long result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

// Kernel basis of a double matrix via row reduction with a relative pivot
// tolerance; mirrors the exact nullspace routine.
std::vector<std::vector<double>> nullspace_double(std::vector<std::vector<double>> m, int cols) {
  const int rows = static_cast<int>(m.size());
  double max_abs = 0.0;
  for (const auto& row : m)
    for (double v : row) max_abs = std::max(max_abs, std::abs(v));
  const double tol = (max_abs == 0.0 ? 1.0 : max_abs) * 1e-9;

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int best = -1;
    double best_abs = tol;
    for (int r = row; r < rows; ++r) {
      if (std::abs(m[r][col]) > best_abs) {
        best_abs = std::abs(m[r][col]);
        best = r;
      }
    }
    if (best < 0) continue;
    std::swap(m[row], m[best]);
    const double inv = 1.0 / m[row][col];
    for (int c = col; c < cols; ++c) m[row][c] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0.0) continue;
      const double factor = m[r][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<double>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<double> v(cols, 0.0);
    v[free] = 1.0;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int count_zeros_exact(const std::vector<VecQ>& points,
                      const std::vector<std::pair<int, int>>& exps, const VecQ& coeffs) {
  int count = 0;
  for (const VecQ& p : points) {
    Q value = 0;
    for (std::size_t m = 0; m < exps.size(); ++m) {
      if (coeffs[m] == 0) continue;
      value += coeffs[m] * q_pow(p[0], exps[m].first) * q_pow(p[1], exps[m].second);
    }
    if (value == 0) ++count;
  }
  return count;
}

int count_zeros_float(const std::vector<std::vector<double>>& points,
                      const std::vector<std::pair<int, int>>& exps,
                      std::vector<double> coeffs) {
  double max_coeff = 0.0;
  for (double c : coeffs) max_coeff = std::max(max_coeff, std::abs(c));
  if (max_coeff == 0.0) return 0;
  for (double& c : coeffs) c /= max_coeff;
  int count = 0;
  for (const auto& p : points) {
    double value = 0.0;
    double scale = 1.0;
    for (std::size_t m = 0; m < exps.size(); ++m) {
      const double mono = std::pow(p[0], exps[m].first) * std::pow(p[1], exps[m].second);
      scale = std::max(scale, std::abs(mono));
      value += coeffs[m] * mono;
    }
    if (std::abs(value) <= 1e-7 * scale) ++count;
  }
  return count;
}

}  // namespace

CurveAuditReport curve_richness_audit(const PointSet& pts, int degree, double threshold,
                                      long long max_subsets, std::uint64_t seed) {
  if (pts.d != 2) throw UsageError("curve_richness_audit: only planar point sets are supported");
  if (degree < 1) throw UsageError("curve_richness_audit: degree must be at least 1");
  if (max_subsets < 1) throw UsageError("curve_richness_audit: subset budget must be positive");
  const auto exps = monomial_exponents(degree);
  const int basis = static_cast<int>(exps.size());
  const int r = basis - 1;
  const int n = pts.size();
  if (n < r)
    throw UsageError("curve_richness_audit: need at least basis-1 points to pin a pencil");

  CurveAuditReport report;
  report.basis_size = basis;
  report.threshold = threshold;

  const long long total = comb_capped(n, r, max_subsets);
  report.subsampled = total > max_subsets;

  // Evaluation rows for every point, computed once.
  std::vector<VecQ> exact_rows;
  std::vector<std::vector<double>> float_rows;
  if (pts.exact) {
    for (const VecQ& p : pts.points) {
      VecQ row(basis);
      for (int m = 0; m < basis; ++m)
        row[m] = q_pow(p[0], exps[m].first) * q_pow(p[1], exps[m].second);
      exact_rows.push_back(std::move(row));
    }
  } else {
    for (const auto& p : pts.fpoints) {
      std::vector<double> row(basis);
      for (int m = 0; m < basis; ++m)
        row[m] = std::pow(p[0], exps[m].first) * std::pow(p[1], exps[m].second);
      float_rows.push_back(std::move(row));
    }
  }

  const auto audit_subset = [&](const std::vector<int>& subset) {
    if (pts.exact) {
      MatQ m;
      for (int idx : subset) m.push_back(exact_rows[idx]);
      for (const VecQ& curve : nullspace_exact(m, basis)) {
        report.max_incidence =
            std::max(report.max_incidence, count_zeros_exact(pts.points, exps, curve));
      }
    } else {
      std::vector<std::vector<double>> m;
      for (int idx : subset) m.push_back(float_rows[idx]);
      for (const auto& curve : nullspace_double(std::move(m), basis)) {
        report.max_incidence =
            std::max(report.max_incidence, count_zeros_float(pts.fpoints, exps, curve));
      }
    }
    ++report.subsets_scanned;
  };

  if (!report.subsampled) {
    std::vector<int> subset(r);
    for (int i = 0; i < r; ++i) subset[i] = i;
    while (true) {
      audit_subset(subset);
      int pos = r - 1;
      while (pos >= 0 && subset[pos] == n - r + pos) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int i = pos + 1; i < r; ++i) subset[i] = subset[i - 1] + 1;
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<int> indices(n);
    for (int i = 0; i < n; ++i) indices[i] = i;
    for (long long s = 0; s < max_subsets; ++s) {
      std::vector<int> subset;
      std::sample(indices.begin(), indices.end(), std::back_inserter(subset), r, rng);
      audit_subset(subset);
    }
  }

  report.hypothesis_holds = report.max_incidence <= threshold * n;
  return report;
}

}  // namespace rigidlab
