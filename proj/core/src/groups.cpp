#include "rigidlab/groups.hpp"

#include <map>

#include "rigidlab/errors.hpp"
#include "rigidlab/linalg.hpp"

namespace rigidlab {

namespace {

VecQ sub(const VecQ& a, const VecQ& b) {
    VecQ r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool vec_zero(const VecQ& a) {
    for (const Q& v : a)
        if (v != 0) return false;
    return true;
}

Q dot_q(const VecQ& a, const VecQ& b) {
    Q r(0);
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Q dist_sq(const VecQ& a, const VecQ& b) {
    Q r(0);
    for (size_t i = 0; i < a.size(); ++i) {
        const Q d = a[i] - b[i];
        r += d * d;
    }
    return r;
}

// The O(1,1)-invariant quadratic form x1^2 - x2^2.
Q q_form(const VecQ& x) { return x[0] * x[0] - x[1] * x[1]; }

Q cross2(const VecQ& u, const VecQ& w) { return u[0] * w[1] - u[1] * w[0]; }

// Collapses (p, q) to tuples of distinct p-points with their required images.
// Returns false when no function (or no injective map) can send p to q
// slotwise: a repeated p-point demanding two images, or two distinct p-points
// demanding the same image.
bool dedup_consistent(const std::vector<VecQ>& p, const std::vector<VecQ>& q,
                      std::vector<VecQ>& dp, std::vector<VecQ>& dq) {
    std::map<VecQ, size_t, VecQLess> seen_p, seen_q;
    for (size_t i = 0; i < p.size(); ++i) {
        const auto it = seen_p.find(p[i]);
        if (it != seen_p.end()) {
            if (compare(dq[it->second], q[i]) != 0) return false;
            continue;
        }
        const auto qi = seen_q.find(q[i]);
        if (qi != seen_q.end()) return false;  // two distinct preimages, one image
        seen_p.emplace(p[i], dp.size());
        seen_q.emplace(q[i], dp.size());
        dp.push_back(p[i]);
        dq.push_back(q[i]);
    }
    return true;
}

bool pairwise_distances_match(const std::vector<VecQ>& p, const std::vector<VecQ>& q) {
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (dist_sq(p[i], p[j]) != dist_sq(q[i], q[j])) return false;
    return true;
}

bool grams_match(const std::vector<VecQ>& p, const std::vector<VecQ>& q) {
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i; j < p.size(); ++j)
            if (dot_q(p[i], p[j]) != dot_q(q[i], q[j])) return false;
    return true;
}

bool points_collinear(const std::vector<VecQ>& pts) {
    if (pts.size() <= 2) return true;
    const VecQ& base = pts[0];
    size_t first = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
        if (!vec_zero(sub(pts[i], base))) {
            first = i;
            break;
        }
    }
    if (first == 0) return true;  // all coincident
    const VecQ u = sub(pts[first], base);
    for (size_t i = first + 1; i < pts.size(); ++i)
        if (cross2(u, sub(pts[i], base)) != 0) return false;
    return true;
}

bool maps_all(const AffineMap& theta, const std::vector<VecQ>& p, const std::vector<VecQ>& q) {
    for (size_t i = 0; i < p.size(); ++i)
        if (compare(affine_apply(theta, p[i]), q[i]) != 0) return false;
    return true;
}

// Decides whether some A in O(1,1) satisfies A ps[i] = qs[i] for all i.
// Case split on the rank of ps: rank 2 pins A uniquely; rank 1 reduces to the
// orbit criterion for a single direction vector (O(1,1) orbits are the
// nonempty level sets of x1^2 - x2^2, with the nonzero null cone a single
// orbit); rank 0 forces q = 0.
bool o11_solve(const std::vector<VecQ>& ps, const std::vector<VecQ>& qs) {
    size_t anchor = ps.size();
    for (size_t i = 0; i < ps.size(); ++i) {
        if (!vec_zero(ps[i])) {
            anchor = i;
            break;
        }
    }
    if (anchor == ps.size()) {  // every p is the origin
        for (const VecQ& w : qs)
            if (!vec_zero(w)) return false;
        return true;
    }
    const VecQ& u = ps[anchor];
    size_t partner = ps.size();
    for (size_t j = 0; j < ps.size(); ++j) {
        if (cross2(u, ps[j]) != 0) {
            partner = j;
            break;
        }
    }
    if (partner != ps.size()) {  // rank 2: A is the unique linear extension
        const MatQ basis{{u[0], ps[partner][0]}, {u[1], ps[partner][1]}};
        MatQ basis_inv;
        if (!mat_inverse(basis, basis_inv)) return false;
        const MatQ images{{qs[anchor][0], qs[partner][0]}, {qs[anchor][1], qs[partner][1]}};
        const MatQ a = mat_mul(images, basis_inv);
        const MatQ form{{Q(1), Q(0)}, {Q(0), Q(-1)}};
        if (!mat_equal(mat_mul(mat_transpose(a), mat_mul(form, a)), form)) return false;
        const AffineMap theta{a, VecQ(2, Q(0))};
        return maps_all(theta, ps, qs);
    }
    // rank 1: every p is lambda * u; images must be lambda * w for w = image
    // of u, and u -> w must be realisable, i.e. same value of the form with
    // zero vectors corresponding exactly.
    const VecQ& w = qs[anchor];
    if (vec_zero(w) || q_form(u) != q_form(w)) return false;
    for (size_t i = 0; i < ps.size(); ++i) {
        const Q lambda = u[0] != 0 ? ps[i][0] / u[0] : ps[i][1] / u[1];
        if (compare(VecQ{lambda * u[0], lambda * u[1]}, ps[i]) != 0) return false;
        if (compare(VecQ{lambda * w[0], lambda * w[1]}, qs[i]) != 0) return false;
    }
    return true;
}

// Solves the unique affine map sending an affinely independent triple of
// distinct points to its images; returns false when verification against the
// remaining slots fails.
bool solve_affine_from_triple(const std::vector<VecQ>& p, const std::vector<VecQ>& q, size_t a,
                              size_t b, size_t c, AffineMap& theta) {
    const MatQ basis{{p[b][0] - p[a][0], p[c][0] - p[a][0]},
                     {p[b][1] - p[a][1], p[c][1] - p[a][1]}};
    MatQ basis_inv;
    if (!mat_inverse(basis, basis_inv)) return false;
    const MatQ images{{q[b][0] - q[a][0], q[c][0] - q[a][0]},
                      {q[b][1] - q[a][1], q[c][1] - q[a][1]}};
    theta.A = mat_mul(images, basis_inv);
    theta.b = sub(q[a], mat_vec(theta.A, p[a]));
    return maps_all(theta, p, q);
}

bool is_orthogonal(const MatQ& a) {
    return mat_equal(mat_mul(mat_transpose(a), a), mat_identity(static_cast<int>(a.size())));
}

bool preserves_o11_form(const MatQ& a) {
    const MatQ form{{Q(1), Q(0)}, {Q(0), Q(-1)}};
    return mat_equal(mat_mul(mat_transpose(a), mat_mul(form, a)), form);
}

void check_tuple(const TransformGroup& g, const std::vector<VecQ>& p, const std::vector<VecQ>& q) {
    if (p.size() != q.size()) throw UsageError("tuples must have equal length");
    for (const auto& t : {&p, &q})
        for (const VecQ& x : *t)
            if (static_cast<int>(x.size()) != g.d)
                throw UsageError("tuple point dimension does not match group dimension " +
                                 std::to_string(g.d));
}

}  // namespace

TransformGroup group_of(const Metric& m) {
    TransformGroup g;
    g.d = m.d;
    switch (m.family) {
        case MetricFamily::euclid_sq:
            g.kind = GroupKind::euclid;
            g.id = "euclid";
            return g;
        case MetricFamily::pseudo11:
            g.kind = GroupKind::pseudo;
            g.id = "pseudo";
            return g;
        case MetricFamily::lp:
            g.kind = GroupKind::transl_finite;
            g.id = "transl_signed_perm";
            g.linear_parts = *finite_linear_parts(m);
            return g;
        case MetricFamily::dot:
            g.kind = GroupKind::linear_orth;
            g.id = "orth";
            return g;
        case MetricFamily::skew:
            g.kind = GroupKind::linear_o11;
            g.id = "o11";
            return g;
        case MetricFamily::sym_tensor:
            g.kind = GroupKind::finite;
            g.id = m.k % 2 == 0 ? "signed_perm" : "perm";
            g.elements = *finite_elements(m);
            return g;
    }
    throw UsageError("unknown metric family");
}

TransformGroup parse_group(std::string_view id, int d) {
    if (id == "se2") {
        if (d != 2) throw UsageError("group se2 requires dimension 2");
        return {GroupKind::se2, 2, "se2", {}, {}};
    }
    if (id == "e2") {
        if (d != 2) throw UsageError("group e2 requires dimension 2");
        return {GroupKind::euclid, 2, "euclid", {}, {}};
    }
    if (id == "euclid") return {GroupKind::euclid, d, "euclid", {}, {}};
    if (id == "pseudo") {
        if (d != 2) throw UsageError("group pseudo requires dimension 2");
        return {GroupKind::pseudo, 2, "pseudo", {}, {}};
    }
    return group_of(parse_metric(id, d));
}

bool group_member(const TransformGroup& G, const AffineMap& theta) {
    if (theta.dim() != G.d || static_cast<int>(theta.A.size()) != G.d)
        throw UsageError("affine map dimension does not match group dimension " +
                         std::to_string(G.d));
    switch (G.kind) {
        case GroupKind::euclid:
            return is_orthogonal(theta.A);
        case GroupKind::se2:
            return is_orthogonal(theta.A) && det2(theta.A) == 1;
        case GroupKind::pseudo:
            return preserves_o11_form(theta.A);
        case GroupKind::transl_finite:
            for (const MatQ& a : G.linear_parts)
                if (mat_equal(a, theta.A)) return true;
            return false;
        case GroupKind::linear_orth:
            return is_orthogonal(theta.A) && vec_zero(theta.b);
        case GroupKind::linear_o11:
            return preserves_o11_form(theta.A) && vec_zero(theta.b);
        case GroupKind::finite:
            for (const AffineMap& e : G.elements)
                if (affine_equal(e, theta)) return true;
            return false;
    }
    throw UsageError("unknown group kind");
}

bool exists_transform(const TransformGroup& G, const std::vector<VecQ>& p,
                      const std::vector<VecQ>& q) {
    check_tuple(G, p, q);
    if (p.empty()) return true;

    switch (G.kind) {
        case GroupKind::euclid:
            // Pairwise squared distances determine congruence completely:
            // any distance-preserving bijection between finite subsets of R^d
            // extends to an isometry of R^d. Coincidence constraints are the
            // zero-distance cases.
            return pairwise_distances_match(p, q);
        case GroupKind::linear_orth:
            // Same classical fact for O(d) with the Gram matrix in place of
            // the distance matrix.
            return grams_match(p, q);
        default:
            break;
    }

    std::vector<VecQ> dp, dq;
    if (!dedup_consistent(p, q, dp, dq)) return false;

    switch (G.kind) {
        case GroupKind::finite:
            for (const AffineMap& e : G.elements)
                if (maps_all(e, dp, dq)) return true;
            return false;
        case GroupKind::transl_finite:
            for (const MatQ& a : G.linear_parts) {
                const VecQ shift = sub(dq[0], mat_vec(a, dp[0]));
                bool ok = true;
                for (size_t i = 1; ok && i < dp.size(); ++i)
                    ok = compare(sub(dq[i], mat_vec(a, dp[i])), shift) == 0;
                if (ok) return true;
            }
            return false;
        case GroupKind::se2: {
            if (!pairwise_distances_match(dp, dq)) return false;
            // A Euclidean congruence exists; it can be chosen orientation-
            // preserving iff the points are collinear (compose with the
            // reflection fixing their line) or the unique affine extension of
            // an independent triple already has determinant +1.
            if (points_collinear(dp)) return true;
            const VecQ u = sub(dp[1], dp[0]);
            size_t c = 2;
            while (cross2(u, sub(dp[c], dp[0])) == 0) ++c;
            AffineMap theta;
            if (!solve_affine_from_triple(dp, dq, 0, 1, c, theta)) return false;
            return det2(theta.A) == 1;
        }
        case GroupKind::pseudo: {
            std::vector<VecQ> ps(dp.size()), qs(dp.size());
            for (size_t i = 0; i < dp.size(); ++i) {
                ps[i] = sub(dp[i], dp[0]);
                qs[i] = sub(dq[i], dq[0]);
            }
            return o11_solve(ps, qs);
        }
        case GroupKind::linear_o11:
            return o11_solve(dp, dq);
        default:
            throw UsageError("unsupported group kind");
    }
}

std::vector<AffineMap> pair_induced_transforms(const TransformGroup& G, const VecQ& p1,
                                               const VecQ& p2, const VecQ& q1, const VecQ& q2) {
    check_tuple(G, {p1, p2}, {q1, q2});
    const VecQ u = sub(p2, p1);
    const VecQ w = sub(q2, q1);
    if (vec_zero(u)) throw UsageError("pair_induced_transforms requires p1 != p2");

    std::vector<AffineMap> out;
    const auto push_if_new = [&out](AffineMap theta) {
        for (const AffineMap& seen : out)
            if (affine_equal(seen, theta)) return;
        out.push_back(std::move(theta));
    };
    const auto with_shift = [&](MatQ a) {
        AffineMap theta{std::move(a), {}};
        theta.b = sub(q1, mat_vec(theta.A, p1));
        return theta;
    };

    switch (G.kind) {
        case GroupKind::se2:
        case GroupKind::euclid: {
            if (G.d != 2) throw UsageError("pair-induced transforms require dimension 2");
            const Q nn = dot_q(u, u);
            // Rotation part: A u = w with A = [[c,-s],[s,c]], c^2 + s^2 = 1.
            const Q c = dot_q(u, w) / nn;
            const Q s = cross2(u, w) / nn;
            if (c * c + s * s == 1) push_if_new(with_shift(MatQ{{c, -s}, {s, c}}));
            if (G.kind == GroupKind::euclid) {
                // Reflection part: A = [[c,s],[s,-c]], c^2 + s^2 = 1.
                const Q rc = (w[0] * u[0] - w[1] * u[1]) / nn;
                const Q rs = (w[0] * u[1] + w[1] * u[0]) / nn;
                if (rc * rc + rs * rs == 1) push_if_new(with_shift(MatQ{{rc, rs}, {rs, -rc}}));
            }
            return out;
        }
        case GroupKind::pseudo: {
            // A = D H with D diagonal signs and H = [[C,S],[S,C]], C^2 - S^2
            // = 1; solve H u = D w per sign choice.
            for (int sx : {1, -1})
                for (int sy : {1, -1}) {
                    const VecQ v{Q(sx) * w[0], Q(sy) * w[1]};
                    const Q det = q_form(u);
                    Q C, S;
                    if (det != 0) {
                        C = (v[0] * u[0] - v[1] * u[1]) / det;
                        S = (v[1] * u[0] - v[0] * u[1]) / det;
                        if (C * C - S * S != 1) continue;
                    } else {
                        // u is null: u2 = eps * u1 with u1 != 0. Solvable iff
                        // v lies on the same null line with nonzero ratio mu.
                        const Q eps = u[1] / u[0];
                        if (v[1] != eps * v[0]) continue;
                        const Q mu = v[0] / u[0];
                        if (mu == 0) continue;
                        C = (mu + 1 / mu) / 2;
                        S = eps * (mu - 1 / mu) / 2;
                    }
                    const MatQ h{{C, S}, {S, C}};
                    const MatQ d{{Q(sx), Q(0)}, {Q(0), Q(sy)}};
                    AffineMap theta = with_shift(mat_mul(d, h));
                    if (compare(affine_apply(theta, p2), q2) == 0) push_if_new(std::move(theta));
                }
            return out;
        }
        default:
            throw UsageError("pair-induced transforms support se2, e2, and pseudo groups");
    }
}

}  // namespace rigidlab
