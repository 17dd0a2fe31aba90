#include "rigidlab/rigidity.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <string>

#include "rigidlab/errors.hpp"
#include "rigidlab/linalg.hpp"

namespace rigidlab {

namespace {

void check_compatible(const Metric& m, const Hypergraph& g, int point_count, int point_dim) {
    if (m.k != g.k)
        throw UsageError("metric arity " + std::to_string(m.k) + " does not match graph arity " +
                         std::to_string(g.k));
    if (point_count != g.vertex_count)
        throw UsageError("realisation has " + std::to_string(point_count) + " points, graph has " +
                         std::to_string(g.vertex_count) + " vertices");
    if (point_dim != m.d)
        throw UsageError("realisation dimension " + std::to_string(point_dim) +
                         " does not match metric dimension " + std::to_string(m.d));
}

template <typename Scalar, typename PointList>
std::vector<std::vector<Scalar>> jacobian_impl(const Metric& m, const Hypergraph& g,
                                               const PointList& points) {
    const int n = g.vertex_count;
    std::vector<std::vector<Scalar>> jac(g.edges.size(),
                                         std::vector<Scalar>(static_cast<size_t>(m.d) * n,
                                                             Scalar(0)));
    std::vector<std::vector<Scalar>> args(m.k);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        for (int s = 0; s < m.k; ++s) args[s] = points[g.edges[e][s]];
        for (int s = 0; s < m.k; ++s) {
            const std::vector<Scalar> grad = grad_g(m, args, s);
            const size_t base = static_cast<size_t>(g.edges[e][s]) * m.d;
            for (int j = 0; j < m.d; ++j) jac[e][base + j] += grad[j];
        }
    }
    return jac;
}

template <typename Scalar, typename PointList>
std::vector<std::vector<Scalar>> trivial_motion_rows(const Metric& m, const PointList& points,
                                                     int n) {
    std::vector<std::vector<Scalar>> rows;
    for (const AffineMap& gen : lie_generators(m)) {
        std::vector<Scalar> row(static_cast<size_t>(m.d) * n, Scalar(0));
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < m.d; ++i) {
                Scalar c = Scalar(q_to_double(gen.b[i]));
                if constexpr (std::is_same_v<Scalar, Q>) c = gen.b[i];
                for (int j = 0; j < m.d; ++j) {
                    if constexpr (std::is_same_v<Scalar, Q>)
                        c += gen.A[i][j] * points[v][j];
                    else
                        c += q_to_double(gen.A[i][j]) * points[v][j];
                }
                row[static_cast<size_t>(v) * m.d + i] = c;
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string graph_signature(const Metric& m, const Hypergraph& g) {
    std::string sig = m.id + "/d" + std::to_string(m.d) + "/n" + std::to_string(g.vertex_count) +
                      "/k" + std::to_string(g.k) + "/";
    for (const auto& e : g.edges) {
        for (int v : e) sig += std::to_string(v) + ",";
        sig += ";";
    }
    return sig;
}

std::mutex generic_rank_mutex;
std::map<std::string, int>& generic_rank_cache() {
    static std::map<std::string, int> cache;
    return cache;
}

}  // namespace

MatQ jacobian(const Metric& m, const Hypergraph& g, const Realisation& p) {
    check_compatible(m, g, p.vertex_count(), p.d);
    return jacobian_impl<Q>(m, g, p.points);
}

MatQ trivial_motions(const Metric& m, const Hypergraph& g, const Realisation& p) {
    check_compatible(m, g, p.vertex_count(), p.d);
    MatQ rows = trivial_motion_rows<Q>(m, p.points, g.vertex_count);
    row_basis_exact(rows);
    return rows;
}

bool affinely_spanning(const Realisation& p) {
    const int n = p.vertex_count();
    if (n == 0) return false;
    MatQ homogeneous(static_cast<size_t>(p.d) + 1, VecQ(static_cast<size_t>(n)));
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < p.d; ++i) homogeneous[i][v] = p.points[v][i];
        homogeneous[p.d][v] = 1;
    }
    return rank_exact(std::move(homogeneous)) == p.d + 1;
}

RigidityVerdict is_infinitesimally_rigid(const Metric& m, const Hypergraph& g,
                                         const Realisation& p) {
    RigidityVerdict verdict;
    const MatQ jac = jacobian(m, g, p);
    verdict.rank = rank_exact(jac);
    verdict.kernel_dim = m.d * g.vertex_count - verdict.rank;
    const MatQ triv = trivial_motions(m, g, p);
    verdict.trivial_dim = static_cast<int>(triv.size());
    verdict.trivial_contained = true;
    for (const VecQ& motion : triv)
        verdict.trivial_contained = verdict.trivial_contained && in_kernel_exact(jac, motion);
    verdict.infinitesimally_rigid =
        verdict.trivial_contained && verdict.kernel_dim == verdict.trivial_dim;
    verdict.affinely_spanning = affinely_spanning(p);
    return verdict;
}

RigidityVerdict is_infinitesimally_rigid_approx(const Metric& m, const Hypergraph& g,
                                                const std::vector<std::vector<double>>& points,
                                                double tol_scale) {
    check_compatible(m, g, static_cast<int>(points.size()),
                     points.empty() ? m.d : static_cast<int>(points[0].size()));
    RigidityVerdict verdict;
    verdict.approximate = true;
    const auto jac = jacobian_impl<double>(m, g, points);
    verdict.rank = rank_approx(jac, tol_scale);
    verdict.kernel_dim = m.d * g.vertex_count - verdict.rank;
    const auto triv = trivial_motion_rows<double>(m, points, g.vertex_count);
    verdict.trivial_dim = rank_approx(triv, tol_scale);

    double jac_scale = 1.0;
    for (const auto& row : jac)
        for (double v : row) jac_scale = std::max(jac_scale, std::abs(v));
    verdict.trivial_contained = true;
    for (const auto& motion : triv) {
        double motion_scale = 1.0;
        for (double v : motion) motion_scale = std::max(motion_scale, std::abs(v));
        for (const auto& row : jac) {
            double residual = 0.0;
            for (size_t i = 0; i < row.size(); ++i) residual += row[i] * motion[i];
            if (std::abs(residual) > 1e-8 * jac_scale * motion_scale)
                verdict.trivial_contained = false;
        }
    }
    verdict.infinitesimally_rigid =
        verdict.trivial_contained && verdict.kernel_dim == verdict.trivial_dim;

    // Homogeneous rank for the affine-span flag, with the same tolerance.
    std::vector<std::vector<double>> homogeneous(static_cast<size_t>(m.d) + 1,
                                                 std::vector<double>(points.size()));
    for (size_t v = 0; v < points.size(); ++v) {
        for (int i = 0; i < m.d; ++i) homogeneous[i][v] = points[v][i];
        homogeneous[m.d][v] = 1.0;
    }
    verdict.affinely_spanning = rank_approx(homogeneous, tol_scale) == m.d + 1;
    return verdict;
}

Realisation sample_realisation(int d, int n, long bound, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-bound, bound);
    Realisation p;
    p.d = d;
    p.points.resize(static_cast<size_t>(n));
    for (auto& pt : p.points) {
        pt.resize(static_cast<size_t>(d));
        for (auto& c : pt) c = coord(rng);
    }
    return p;
}

GenericVerdict is_g_rigid(const Metric& m, const Hypergraph& g, int trials, std::uint64_t seed) {
    if (trials < 1) throw UsageError("is_g_rigid requires trials >= 1");
    GenericVerdict out;
    out.seed = seed;
    for (int t = 0; t < trials; ++t) {
        out.witness = sample_realisation(m.d, g.vertex_count, 1000000, seed + static_cast<std::uint64_t>(t));
        out.witness_verdict = is_infinitesimally_rigid(m, g, out.witness);
        out.trials_used = t + 1;
        if (out.witness_verdict.infinitesimally_rigid) {
            out.rigid = true;
            return out;
        }
    }
    out.rigid = false;
    return out;
}

int generic_rank(const Metric& m, const Hypergraph& g, std::uint64_t seed) {
    const std::string key = graph_signature(m, g) + "#" + std::to_string(seed);
    {
        std::lock_guard<std::mutex> lock(generic_rank_mutex);
        const auto it = generic_rank_cache().find(key);
        if (it != generic_rank_cache().end()) return it->second;
    }
    int best = 0;
    for (int t = 0; t < 5; ++t) {
        const Realisation p =
            sample_realisation(m.d, g.vertex_count, 1000000, seed + static_cast<std::uint64_t>(t));
        best = std::max(best, rank_exact(jacobian(m, g, p)));
    }
    std::lock_guard<std::mutex> lock(generic_rank_mutex);
    generic_rank_cache().emplace(key, best);
    return best;
}

bool is_g_regular(const Metric& m, const Hypergraph& g, const Realisation& p) {
    return rank_exact(jacobian(m, g, p)) == generic_rank(m, g);
}

}  // namespace rigidlab
