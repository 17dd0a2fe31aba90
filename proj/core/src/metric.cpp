#include "rigidlab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rigidlab/linalg.hpp"

namespace rigidlab {

namespace {

Q pow_scalar(const Q& v, int e) { return q_pow(v, static_cast<unsigned long>(e)); }
double pow_scalar(double v, int e) { return std::pow(v, e); }

template <typename T>
void check_args(const Metric& m, const std::vector<std::vector<T>>& args) {
    if (static_cast<int>(args.size()) != m.k)
        throw UsageError("metric " + m.id + " expects " + std::to_string(m.k) + " arguments, got " +
                         std::to_string(args.size()));
    for (const auto& a : args)
        if (static_cast<int>(a.size()) != m.d)
            throw UsageError("metric " + m.id + " expects points of dimension " +
                             std::to_string(m.d));
}

template <typename T>
T eval_core(const Metric& m, const std::vector<std::vector<T>>& x) {
    switch (m.family) {
        case MetricFamily::euclid_sq: {
            T acc(0);
            for (int j = 0; j < m.d; ++j) {
                const T dj = x[0][j] - x[1][j];
                acc += dj * dj;
            }
            return acc;
        }
        case MetricFamily::pseudo11: {
            const T d0 = x[0][0] - x[1][0];
            const T d1 = x[0][1] - x[1][1];
            return d0 * d0 - d1 * d1;
        }
        case MetricFamily::lp: {
            T acc(0);
            for (int j = 0; j < m.d; ++j) acc += pow_scalar(x[0][j] - x[1][j], m.lp);
            return acc;
        }
        case MetricFamily::dot: {
            T acc(0);
            for (int j = 0; j < m.d; ++j) acc += x[0][j] * x[1][j];
            return acc;
        }
        case MetricFamily::skew:
            return x[0][0] * x[1][1] - x[0][1] * x[1][0];
        case MetricFamily::sym_tensor: {
            T acc(0);
            for (int j = 0; j < m.d; ++j) {
                T prod(1);
                for (int i = 0; i < m.k; ++i) prod *= x[i][j];
                acc += prod;
            }
            return acc;
        }
    }
    throw UsageError("unknown metric family");
}

template <typename T>
std::vector<T> grad_core(const Metric& m, const std::vector<std::vector<T>>& x, int slot) {
    const int sign = slot == 0 ? 1 : -1;  // orientation of the difference for k = 2 metrics
    std::vector<T> g(m.d, T(0));
    switch (m.family) {
        case MetricFamily::euclid_sq:
            for (int j = 0; j < m.d; ++j) g[j] = T(2 * sign) * (x[0][j] - x[1][j]);
            return g;
        case MetricFamily::pseudo11:
            g[0] = T(2 * sign) * (x[0][0] - x[1][0]);
            g[1] = T(-2 * sign) * (x[0][1] - x[1][1]);
            return g;
        case MetricFamily::lp:
            for (int j = 0; j < m.d; ++j)
                g[j] = T(m.lp * sign) * pow_scalar(x[0][j] - x[1][j], m.lp - 1);
            return g;
        case MetricFamily::dot:
            return x[1 - slot];
        case MetricFamily::skew:
            if (slot == 0) {
                g[0] = x[1][1];
                g[1] = T(-1) * x[1][0];
            } else {
                g[0] = T(-1) * x[0][1];
                g[1] = x[0][0];
            }
            return g;
        case MetricFamily::sym_tensor:
            for (int j = 0; j < m.d; ++j) {
                T prod(1);
                for (int i = 0; i < m.k; ++i)
                    if (i != slot) prod *= x[i][j];
                g[j] = prod;
            }
            return g;
    }
    throw UsageError("unknown metric family");
}

int parse_int_param(std::string_view id, std::string_view text) {
    int value = 0;
    if (text.empty()) throw UsageError("metric id '" + std::string(id) + "': missing parameter");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw UsageError("metric id '" + std::string(id) + "': parameter must be an integer");
        value = value * 10 + (c - '0');
        if (value > 1000) throw UsageError("metric id '" + std::string(id) + "': parameter too large");
    }
    return value;
}

MatQ diag_1m1() { return MatQ{{Q(1), Q(0)}, {Q(0), Q(-1)}}; }

bool preserves_quadratic_form(const MatQ& a, const MatQ& form) {
    return mat_equal(mat_mul(mat_transpose(a), mat_mul(form, a)), form);
}

bool is_zero_vec(const VecQ& b) {
    return std::all_of(b.begin(), b.end(), [](const Q& v) { return v == 0; });
}

MatQ zero_matrix(int d) { return MatQ(static_cast<size_t>(d), VecQ(static_cast<size_t>(d), Q(0))); }

std::vector<AffineMap> translation_generators(int d) {
    std::vector<AffineMap> gens;
    for (int j = 0; j < d; ++j) {
        AffineMap gen{zero_matrix(d), VecQ(static_cast<size_t>(d), Q(0))};
        gen.b[j] = 1;
        gens.push_back(std::move(gen));
    }
    return gens;
}

std::vector<AffineMap> rotation_generators(int d) {
    std::vector<AffineMap> gens;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            AffineMap gen{zero_matrix(d), VecQ(static_cast<size_t>(d), Q(0))};
            gen.A[i][j] = -1;
            gen.A[j][i] = 1;
            gens.push_back(std::move(gen));
        }
    return gens;
}

MatQ hyperbolic_generator() { return MatQ{{Q(0), Q(1)}, {Q(1), Q(0)}}; }

void check_map_dim(const Metric& m, const AffineMap& theta) {
    if (theta.dim() != m.d || static_cast<int>(theta.A.size()) != m.d)
        throw UsageError("affine map dimension does not match metric dimension " +
                         std::to_string(m.d));
    for (const auto& row : theta.A)
        if (static_cast<int>(row.size()) != m.d)
            throw UsageError("affine map matrix is not square of dimension " +
                             std::to_string(m.d));
}

}  // namespace

Metric parse_metric(std::string_view id, int d) {
    if (d < 1) throw UsageError("dimension must be >= 1");
    Metric m;
    m.d = d;
    const size_t colon = id.find(':');
    const std::string_view base = id.substr(0, colon);
    const std::string_view param =
        colon == std::string_view::npos ? std::string_view{} : id.substr(colon + 1);

    if (base == "euclid_sq" || base == "lp") {
        if (base == "lp") {
            const int p = parse_int_param(id, param);
            if (p == 2) {
                // lp:2 is exactly euclid_sq; canonicalise so downstream group
                // logic sees the full Euclidean isometry group.
                m.family = MetricFamily::euclid_sq;
                m.id = "euclid_sq";
                m.degree = 2;
                return m;
            }
            if (p < 4 || p % 2 != 0)
                throw UsageError("lp metric requires an even integer exponent >= 4 (or 2)");
            m.family = MetricFamily::lp;
            m.id = "lp:" + std::to_string(p);
            m.lp = p;
            m.degree = p;
            return m;
        }
        if (colon != std::string_view::npos) throw UsageError("euclid_sq takes no parameter");
        m.family = MetricFamily::euclid_sq;
        m.id = "euclid_sq";
        m.degree = 2;
        return m;
    }
    if (base == "pseudo11") {
        if (d != 2) throw UsageError("pseudo11 is defined for dimension 2 only");
        m.family = MetricFamily::pseudo11;
        m.id = "pseudo11";
        m.degree = 2;
        return m;
    }
    if (base == "dot") {
        m.family = MetricFamily::dot;
        m.id = "dot";
        m.degree = 2;
        return m;
    }
    if (base == "skew") {
        if (d != 2) throw UsageError("skew is defined for dimension 2 only");
        m.family = MetricFamily::skew;
        m.id = "skew";
        m.degree = 2;
        m.symmetry = Symmetry::antisymmetric;
        return m;
    }
    if (base == "sym_tensor") {
        const int k = parse_int_param(id, param);
        if (k < 3) throw UsageError("sym_tensor requires arity k >= 3");
        m.family = MetricFamily::sym_tensor;
        m.id = "sym_tensor:" + std::to_string(k);
        m.k = k;
        m.degree = k;
        return m;
    }
    throw UsageError("unknown metric id '" + std::string(id) + "'");
}

Q eval_g(const Metric& m, const std::vector<VecQ>& args) {
    check_args(m, args);
    return eval_core(m, args);
}

VecQ grad_g(const Metric& m, const std::vector<VecQ>& args, int slot) {
    check_args(m, args);
    if (slot < 0 || slot >= m.k) throw UsageError("gradient slot out of range");
    return grad_core(m, args, slot);
}

double eval_g(const Metric& m, const std::vector<std::vector<double>>& args) {
    check_args(m, args);
    return eval_core(m, args);
}

std::vector<double> grad_g(const Metric& m, const std::vector<std::vector<double>>& args,
                           int slot) {
    check_args(m, args);
    if (slot < 0 || slot >= m.k) throw UsageError("gradient slot out of range");
    return grad_core(m, args, slot);
}

AffineMap affine_identity(int d) { return {mat_identity(d), VecQ(static_cast<size_t>(d), Q(0))}; }

VecQ affine_apply(const AffineMap& f, const VecQ& x) {
    VecQ y = mat_vec(f.A, x);
    for (size_t i = 0; i < y.size(); ++i) y[i] += f.b[i];
    return y;
}

AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
    AffineMap h;
    h.A = mat_mul(f.A, g.A);
    h.b = mat_vec(f.A, g.b);
    for (size_t i = 0; i < h.b.size(); ++i) h.b[i] += f.b[i];
    return h;
}

std::optional<AffineMap> affine_inverse(const AffineMap& f) {
    MatQ ainv;
    if (!mat_inverse(f.A, ainv)) return std::nullopt;
    AffineMap g;
    g.b = mat_vec(ainv, f.b);
    for (auto& c : g.b) c = -c;
    g.A = std::move(ainv);
    return g;
}

bool affine_equal(const AffineMap& f, const AffineMap& g) {
    return mat_equal(f.A, g.A) && f.b == g.b;
}

std::vector<AffineMap> lie_generators(const Metric& m) {
    switch (m.family) {
        case MetricFamily::euclid_sq: {
            std::vector<AffineMap> gens = translation_generators(m.d);
            for (auto& r : rotation_generators(m.d)) gens.push_back(std::move(r));
            return gens;
        }
        case MetricFamily::pseudo11: {
            std::vector<AffineMap> gens = translation_generators(2);
            gens.push_back({hyperbolic_generator(), VecQ(2, Q(0))});
            return gens;
        }
        case MetricFamily::lp:
            return translation_generators(m.d);
        case MetricFamily::dot:
            return rotation_generators(m.d);
        case MetricFamily::skew:
            return {{hyperbolic_generator(), VecQ(2, Q(0))}};
        case MetricFamily::sym_tensor:
            return {};
    }
    throw UsageError("unknown metric family");
}

bool is_isometry(const Metric& m, const AffineMap& theta) {
    check_map_dim(m, theta);
    switch (m.family) {
        case MetricFamily::euclid_sq:
            return preserves_quadratic_form(theta.A, mat_identity(m.d));
        case MetricFamily::pseudo11:
            return preserves_quadratic_form(theta.A, diag_1m1());
        case MetricFamily::lp:
            return is_signed_permutation(theta.A);
        case MetricFamily::dot:
            return preserves_quadratic_form(theta.A, mat_identity(m.d)) && is_zero_vec(theta.b);
        case MetricFamily::skew:
            return preserves_quadratic_form(theta.A, diag_1m1()) && is_zero_vec(theta.b);
        case MetricFamily::sym_tensor:
            return (m.k % 2 == 0 ? is_signed_permutation(theta.A) : is_permutation(theta.A)) &&
                   is_zero_vec(theta.b);
    }
    throw UsageError("unknown metric family");
}

std::optional<std::vector<MatQ>> finite_linear_parts(const Metric& m) {
    switch (m.family) {
        case MetricFamily::lp:
            return permutation_matrices(m.d, /*signed_entries=*/true);
        case MetricFamily::sym_tensor:
            return permutation_matrices(m.d, /*signed_entries=*/m.k % 2 == 0);
        default:
            return std::nullopt;
    }
}

std::optional<std::vector<AffineMap>> finite_elements(const Metric& m) {
    if (m.family != MetricFamily::sym_tensor) return std::nullopt;
    auto parts = finite_linear_parts(m);
    std::vector<AffineMap> elems;
    for (auto& a : *parts) elems.push_back({std::move(a), VecQ(static_cast<size_t>(m.d), Q(0))});
    return elems;
}

Q linearized_invariance_residual(const Metric& m, const AffineMap& gen,
                                 const std::vector<VecQ>& args) {
    check_map_dim(m, gen);
    Q residual(0);
    for (int slot = 0; slot < m.k; ++slot) {
        const VecQ grad = grad_g(m, args, slot);
        const VecQ velocity = affine_apply(gen, args[slot]);
        for (int j = 0; j < m.d; ++j) residual += grad[j] * velocity[j];
    }
    return residual;
}

bool is_signed_permutation(const MatQ& A) {
    const size_t d = A.size();
    std::vector<bool> col_used(d, false);
    for (const auto& row : A) {
        if (row.size() != d) return false;
        int nonzero = -1;
        for (size_t j = 0; j < d; ++j) {
            if (row[j] == 0) continue;
            if (nonzero != -1 || (row[j] != 1 && row[j] != -1)) return false;
            nonzero = static_cast<int>(j);
        }
        if (nonzero == -1 || col_used[static_cast<size_t>(nonzero)]) return false;
        col_used[static_cast<size_t>(nonzero)] = true;
    }
    return true;
}

bool is_permutation(const MatQ& A) {
    if (!is_signed_permutation(A)) return false;
    for (const auto& row : A)
        for (const auto& v : row)
            if (v == -1) return false;
    return true;
}

std::vector<MatQ> permutation_matrices(int d, bool signed_entries) {
    std::vector<MatQ> result;
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    const unsigned mask_end = signed_entries ? 1u << d : 1u;
    do {
        for (unsigned mask = 0; mask < mask_end; ++mask) {
            MatQ a = zero_matrix(d);
            for (int i = 0; i < d; ++i) a[i][perm[static_cast<size_t>(i)]] = (mask >> i) & 1u ? -1 : 1;
            result.push_back(std::move(a));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

}  // namespace rigidlab
