#include <doctest.h>

#include <rigidlab/errors.hpp>
#include <rigidlab/metric.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace rigidlab;

namespace {

Q qq(long num, long den = 1) {
    Q v(num, den);
    v.canonicalize();
    return v;
}

VecQ vq(std::initializer_list<long> xs) {
    VecQ v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Q random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 8);
    return qq(num(rng), den(rng));
}

VecQ random_point(std::mt19937_64& rng, int d) {
    VecQ p(d);
    for (auto& c : p) c = random_rational(rng);
    return p;
}

std::vector<VecQ> random_args(std::mt19937_64& rng, const Metric& m) {
    std::vector<VecQ> args(m.k);
    for (auto& a : args) a = random_point(rng, m.d);
    return args;
}

// The catalogue instances exercised by the cross-cutting property tests.
std::vector<Metric> catalogue_sample() {
    return {
        parse_metric("euclid_sq", 1), parse_metric("euclid_sq", 2), parse_metric("euclid_sq", 3),
        parse_metric("pseudo11", 2),  parse_metric("lp:4", 2),      parse_metric("lp:6", 2),
        parse_metric("lp:4", 1),      parse_metric("dot", 2),       parse_metric("dot", 3),
        parse_metric("skew", 2),      parse_metric("sym_tensor:3", 1),
        parse_metric("sym_tensor:3", 2), parse_metric("sym_tensor:4", 2),
    };
}

int permutation_parity(const std::vector<int>& perm) {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

MatQ zero_matrix(int d) { return MatQ(d, VecQ(d, Q(0))); }

}  // namespace

TEST_CASE("parse_metric: ids, parameters, aliases, rejects") {
    const Metric e2 = parse_metric("euclid_sq", 2);
    CHECK(e2.family == MetricFamily::euclid_sq);
    CHECK(e2.k == 2);
    CHECK(e2.degree == 2);
    CHECK(e2.symmetry == Symmetry::symmetric);

    const Metric l4 = parse_metric("lp:4", 2);
    CHECK(l4.family == MetricFamily::lp);
    CHECK(l4.lp == 4);
    CHECK(l4.degree == 4);

    // lp:2 is exactly the squared Euclidean metric; the parser canonicalises.
    const Metric l2 = parse_metric("lp:2", 3);
    CHECK(l2.family == MetricFamily::euclid_sq);
    CHECK(l2.id == "euclid_sq");
    CHECK(l2.d == 3);

    const Metric s3 = parse_metric("sym_tensor:3", 2);
    CHECK(s3.k == 3);
    CHECK(s3.degree == 3);

    const Metric sk = parse_metric("skew", 2);
    CHECK(sk.symmetry == Symmetry::antisymmetric);

    CHECK_THROWS_AS(parse_metric("lp:3", 2), UsageError);       // odd exponent
    CHECK_THROWS_AS(parse_metric("lp:0", 2), UsageError);
    CHECK_THROWS_AS(parse_metric("lp:x", 2), UsageError);
    CHECK_THROWS_AS(parse_metric("sym_tensor:2", 2), UsageError);
    CHECK_THROWS_AS(parse_metric("pseudo11", 3), UsageError);   // d = 2 only
    CHECK_THROWS_AS(parse_metric("skew", 1), UsageError);
    CHECK_THROWS_AS(parse_metric("nosuch", 2), UsageError);
    CHECK_THROWS_AS(parse_metric("euclid_sq", 0), UsageError);
}

TEST_CASE("eval_g: pinned values") {
    CHECK(eval_g(parse_metric("euclid_sq", 2), {vq({0, 0}), vq({3, 4})}) == qq(25));
    CHECK(eval_g(parse_metric("pseudo11", 2), {vq({0, 0}), vq({3, 4})}) == qq(-7));
    CHECK(eval_g(parse_metric("skew", 2), {vq({1, 0}), vq({0, 1})}) == qq(1));
    CHECK(eval_g(parse_metric("skew", 2), {vq({0, 1}), vq({1, 0})}) == qq(-1));
    CHECK(eval_g(parse_metric("sym_tensor:3", 1), {vq({2}), vq({3}), vq({5})}) == qq(30));
    CHECK(eval_g(parse_metric("lp:4", 2), {vq({0, 0}), vq({1, 2})}) == qq(17));
    CHECK(eval_g(parse_metric("dot", 2), {vq({1, 2}), vq({3, 4})}) == qq(11));
    // Rational inputs stay exact.
    CHECK(eval_g(parse_metric("euclid_sq", 1), {VecQ{qq(1, 3)}, VecQ{qq(1, 2)}}) == qq(1, 36));

    CHECK_THROWS_AS(eval_g(parse_metric("euclid_sq", 2), {vq({0, 0})}), UsageError);
    CHECK_THROWS_AS(eval_g(parse_metric("euclid_sq", 2), {vq({0}), vq({1})}), UsageError);
}

TEST_CASE("grad_g: pinned values and arity checks") {
    const VecQ g0 = grad_g(parse_metric("euclid_sq", 2), {vq({0, 0}), vq({3, 4})}, 0);
    CHECK(g0 == vq({-6, -8}));
    const VecQ g1 = grad_g(parse_metric("euclid_sq", 2), {vq({0, 0}), vq({3, 4})}, 1);
    CHECK(g1 == vq({6, 8}));

    CHECK(grad_g(parse_metric("dot", 2), {vq({1, 2}), vq({3, 4})}, 0) == vq({3, 4}));
    CHECK(grad_g(parse_metric("dot", 2), {vq({1, 2}), vq({3, 4})}, 1) == vq({1, 2}));

    CHECK(grad_g(parse_metric("skew", 2), {vq({1, 2}), vq({3, 4})}, 0) == vq({4, -3}));
    CHECK(grad_g(parse_metric("skew", 2), {vq({1, 2}), vq({3, 4})}, 1) == vq({-2, 1}));

    // d/dx of (x-y)^4 at x=0, y=2 is 4*(-2)^3 = -32.
    CHECK(grad_g(parse_metric("lp:4", 1), {vq({0}), vq({2})}, 0) == vq({-32}));

    // Product over the other two slots, per coordinate.
    CHECK(grad_g(parse_metric("sym_tensor:3", 2), {vq({2, 1}), vq({3, 5}), vq({5, 7})}, 0) ==
          vq({15, 35}));

    CHECK_THROWS_AS(grad_g(parse_metric("euclid_sq", 2), {vq({0, 0}), vq({3, 4})}, 2), UsageError);
    CHECK_THROWS_AS(grad_g(parse_metric("euclid_sq", 2), {vq({0, 0}), vq({3, 4})}, -1), UsageError);
}

TEST_CASE("grad_g agrees with central finite differences in float mode") {
    // Oracle: (g(x + h e_j) - g(x - h e_j)) / (2h) per slot coordinate.
    std::mt19937_64 rng(20260814);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    const double h = 1e-5;
    for (const Metric& m : catalogue_sample()) {
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::vector<double>> args(m.k, std::vector<double>(m.d));
            for (auto& a : args)
                for (auto& c : a) c = coord(rng);
            for (int slot = 0; slot < m.k; ++slot) {
                const std::vector<double> grad = grad_g(m, args, slot);
                for (int j = 0; j < m.d; ++j) {
                    auto shifted = args;
                    shifted[slot][j] += h;
                    const double up = eval_g(m, shifted);
                    shifted[slot][j] -= 2 * h;
                    const double down = eval_g(m, shifted);
                    const double fd = (up - down) / (2 * h);
                    REQUIRE(std::abs(fd - grad[j]) <= 1e-6 * (1.0 + std::abs(grad[j])));
                }
            }
        }
    }
}

TEST_CASE("float and exact evaluation agree on rational inputs") {
    std::mt19937_64 rng(7);
    for (const Metric& m : catalogue_sample()) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto args = random_args(rng, m);
            std::vector<std::vector<double>> fargs(m.k, std::vector<double>(m.d));
            for (int i = 0; i < m.k; ++i)
                for (int j = 0; j < m.d; ++j) fargs[i][j] = q_to_double(args[i][j]);
            const double exact = q_to_double(eval_g(m, args));
            const double approx = eval_g(m, fargs);
            REQUIRE(std::abs(exact - approx) <= 1e-9 * (1.0 + std::abs(exact)));
        }
    }
}

TEST_CASE("symmetry flag matches behaviour under argument permutation") {
    std::mt19937_64 rng(11);
    for (const Metric& m : catalogue_sample()) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto args = random_args(rng, m);
            const Q base = eval_g(m, args);
            std::vector<int> perm(m.k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<VecQ> permuted(m.k);
                for (int i = 0; i < m.k; ++i) permuted[i] = args[perm[i]];
                const Q value = eval_g(m, permuted);
                if (m.symmetry == Symmetry::symmetric) {
                    REQUIRE(value == base);
                } else {
                    REQUIRE(value == Q(permutation_parity(perm)) * base);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("degree field matches homogeneous scaling") {
    // Every catalogued g is homogeneous: g(t x_1, ..., t x_k) = t^deg g(x).
    std::mt19937_64 rng(13);
    const Q t = qq(3, 2);
    for (const Metric& m : catalogue_sample()) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto args = random_args(rng, m);
            auto scaled = args;
            for (auto& a : scaled)
                for (auto& c : a) c *= t;
            REQUIRE(eval_g(m, scaled) ==
                    q_pow(t, static_cast<unsigned long>(m.degree)) * eval_g(m, args));
        }
    }
}

TEST_CASE("lie_generators: catalogue dimensions") {
    CHECK(lie_generators(parse_metric("euclid_sq", 1)).size() == 1);
    CHECK(lie_generators(parse_metric("euclid_sq", 2)).size() == 3);
    CHECK(lie_generators(parse_metric("euclid_sq", 3)).size() == 6);
    CHECK(lie_generators(parse_metric("pseudo11", 2)).size() == 3);
    CHECK(lie_generators(parse_metric("lp:4", 2)).size() == 2);
    CHECK(lie_generators(parse_metric("lp:4", 1)).size() == 1);
    CHECK(lie_generators(parse_metric("dot", 2)).size() == 1);
    CHECK(lie_generators(parse_metric("dot", 3)).size() == 3);
    CHECK(lie_generators(parse_metric("skew", 2)).size() == 1);
    CHECK(lie_generators(parse_metric("sym_tensor:3", 2)).empty());
    CHECK(lie_generators(parse_metric("sym_tensor:4", 2)).empty());
}

TEST_CASE("lie_generators satisfy the linearized invariance identity exactly") {
    std::mt19937_64 rng(17);
    for (const Metric& m : catalogue_sample()) {
        for (const AffineMap& gen : lie_generators(m)) {
            for (int trial = 0; trial < 20; ++trial) {
                const auto args = random_args(rng, m);
                REQUIRE(linearized_invariance_residual(m, gen, args) == 0);
            }
        }
    }
}

TEST_CASE("linearized residual detects non-generators") {
    // Scaling x |-> x is not an infinitesimal isometry of euclid_sq.
    const Metric m = parse_metric("euclid_sq", 2);
    AffineMap scale{MatQ{{qq(1), qq(0)}, {qq(0), qq(1)}}, vq({0, 0})};
    const std::vector<VecQ> args = {vq({0, 0}), vq({3, 4})};
    CHECK(linearized_invariance_residual(m, scale, args) == qq(50));
}

TEST_CASE("is_isometry: pinned membership examples") {
    const AffineMap rot{MatQ{{qq(0), qq(-1)}, {qq(1), qq(0)}}, vq({1, 2})};
    CHECK(is_isometry(parse_metric("euclid_sq", 2), rot));

    const AffineMap boost{MatQ{{qq(5, 4), qq(3, 4)}, {qq(3, 4), qq(5, 4)}}, vq({0, 0})};
    CHECK(is_isometry(parse_metric("pseudo11", 2), boost));
    CHECK(is_isometry(parse_metric("skew", 2), boost));
    CHECK_FALSE(is_isometry(parse_metric("euclid_sq", 2), boost));

    const AffineMap rot_shift{MatQ{{qq(0), qq(-1)}, {qq(1), qq(0)}}, vq({1, 0})};
    CHECK_FALSE(is_isometry(parse_metric("dot", 2), rot_shift));  // b must vanish
    const AffineMap rot_lin{MatQ{{qq(0), qq(-1)}, {qq(1), qq(0)}}, vq({0, 0})};
    CHECK(is_isometry(parse_metric("dot", 2), rot_lin));

    // Rational rotation by the (3,4,5) angle.
    const AffineMap rot35{MatQ{{qq(3, 5), qq(-4, 5)}, {qq(4, 5), qq(3, 5)}}, vq({7, -2})};
    CHECK(is_isometry(parse_metric("euclid_sq", 2), rot35));
    CHECK_FALSE(is_isometry(parse_metric("lp:4", 2), rot35));  // not a signed permutation

    const AffineMap sgnperm{MatQ{{qq(0), qq(-1)}, {qq(1), qq(0)}}, vq({5, 9})};
    CHECK(is_isometry(parse_metric("lp:4", 2), sgnperm));
    const AffineMap shear{MatQ{{qq(1), qq(1)}, {qq(0), qq(1)}}, vq({0, 0})};
    CHECK_FALSE(is_isometry(parse_metric("lp:4", 2), shear));

    // Negation is a g-isometry for even tensor order only.
    const AffineMap neg{MatQ{{qq(-1), qq(0)}, {qq(0), qq(-1)}}, vq({0, 0})};
    CHECK_FALSE(is_isometry(parse_metric("sym_tensor:3", 2), neg));
    CHECK(is_isometry(parse_metric("sym_tensor:4", 2), neg));
    const AffineMap swap{MatQ{{qq(0), qq(1)}, {qq(1), qq(0)}}, vq({0, 0})};
    CHECK(is_isometry(parse_metric("sym_tensor:3", 2), swap));
    const AffineMap swap_shift{MatQ{{qq(0), qq(1)}, {qq(1), qq(0)}}, vq({1, 0})};
    CHECK_FALSE(is_isometry(parse_metric("sym_tensor:3", 2), swap_shift));

    AffineMap wrong_dim = affine_identity(3);
    CHECK_THROWS_AS(is_isometry(parse_metric("euclid_sq", 2), wrong_dim), UsageError);
}

TEST_CASE("sampled isometries preserve g exactly") {
    // For each metric, a nontrivial exact group element; applying it to every
    // argument must leave g unchanged.
    std::mt19937_64 rng(23);
    std::vector<std::pair<Metric, AffineMap>> cases;
    cases.push_back({parse_metric("euclid_sq", 2),
                     {MatQ{{qq(3, 5), qq(-4, 5)}, {qq(4, 5), qq(3, 5)}}, vq({7, -2})}});
    cases.push_back({parse_metric("pseudo11", 2),
                     {MatQ{{qq(5, 4), qq(3, 4)}, {qq(3, 4), qq(5, 4)}}, vq({1, 3})}});
    cases.push_back({parse_metric("skew", 2),
                     {MatQ{{qq(5, 4), qq(3, 4)}, {qq(3, 4), qq(5, 4)}}, vq({0, 0})}});
    cases.push_back({parse_metric("lp:4", 2),
                     {MatQ{{qq(0), qq(1)}, {qq(-1), qq(0)}}, vq({4, 5})}});
    cases.push_back({parse_metric("dot", 2),
                     {MatQ{{qq(3, 5), qq(-4, 5)}, {qq(4, 5), qq(3, 5)}}, vq({0, 0})}});
    cases.push_back({parse_metric("sym_tensor:3", 2),
                     {MatQ{{qq(0), qq(1)}, {qq(1), qq(0)}}, vq({0, 0})}});
    for (const auto& [m, theta] : cases) {
        REQUIRE(is_isometry(m, theta));
        for (int trial = 0; trial < 25; ++trial) {
            const auto args = random_args(rng, m);
            std::vector<VecQ> moved(m.k);
            for (int i = 0; i < m.k; ++i) moved[i] = affine_apply(theta, args[i]);
            REQUIRE(eval_g(m, moved) == eval_g(m, args));
        }
    }
}

TEST_CASE("membership holds for identity and is closed under composition and inverse") {
    std::vector<std::pair<Metric, std::vector<AffineMap>>> cases;
    cases.push_back({parse_metric("euclid_sq", 2),
                     {{MatQ{{qq(3, 5), qq(-4, 5)}, {qq(4, 5), qq(3, 5)}}, vq({7, -2})},
                      {MatQ{{qq(0), qq(1)}, {qq(1), qq(0)}}, vq({1, 1})}}});
    cases.push_back({parse_metric("pseudo11", 2),
                     {{MatQ{{qq(5, 4), qq(3, 4)}, {qq(3, 4), qq(5, 4)}}, vq({1, 3})},
                      {MatQ{{qq(5, 3), qq(-4, 3)}, {qq(-4, 3), qq(5, 3)}}, vq({0, 2})}}});
    cases.push_back({parse_metric("lp:4", 2),
                     {{MatQ{{qq(0), qq(-1)}, {qq(1), qq(0)}}, vq({4, 5})},
                      {MatQ{{qq(-1), qq(0)}, {qq(0), qq(1)}}, vq({2, -3})}}});
    for (const auto& [m, members] : cases) {
        CHECK(is_isometry(m, affine_identity(m.d)));
        for (const auto& f : members) {
            REQUIRE(is_isometry(m, f));
            const auto inv = affine_inverse(f);
            REQUIRE(inv.has_value());
            REQUIRE(is_isometry(m, *inv));
            REQUIRE(affine_equal(affine_compose(f, *inv), affine_identity(m.d)));
            for (const auto& g : members) REQUIRE(is_isometry(m, affine_compose(f, g)));
        }
    }
}

TEST_CASE("finite_elements and finite_linear_parts") {
    // sym_tensor is the only metric with a finite isometry group.
    CHECK_FALSE(finite_elements(parse_metric("euclid_sq", 2)).has_value());
    CHECK_FALSE(finite_elements(parse_metric("lp:4", 2)).has_value());
    CHECK_FALSE(finite_elements(parse_metric("pseudo11", 2)).has_value());
    CHECK_FALSE(finite_elements(parse_metric("skew", 2)).has_value());
    CHECK_FALSE(finite_elements(parse_metric("dot", 2)).has_value());

    const auto s3d2 = finite_elements(parse_metric("sym_tensor:3", 2));
    REQUIRE(s3d2.has_value());
    CHECK(s3d2->size() == 2);  // permutations of 2 coordinates
    const auto s4d2 = finite_elements(parse_metric("sym_tensor:4", 2));
    REQUIRE(s4d2.has_value());
    CHECK(s4d2->size() == 8);  // signed permutations of 2 coordinates
    const auto s3d1 = finite_elements(parse_metric("sym_tensor:3", 1));
    REQUIRE(s3d1.has_value());
    CHECK(s3d1->size() == 1);
    const auto s4d1 = finite_elements(parse_metric("sym_tensor:4", 1));
    REQUIRE(s4d1.has_value());
    CHECK(s4d1->size() == 2);  // {+1, -1}

    // Every listed element passes membership and preserves g exactly.
    std::mt19937_64 rng(29);
    for (const char* id : {"sym_tensor:3", "sym_tensor:4"}) {
        const Metric m = parse_metric(id, 2);
        const auto elems = finite_elements(m);
        for (const AffineMap& theta : *elems) {
            REQUIRE(is_isometry(m, theta));
            const auto args = random_args(rng, m);
            std::vector<VecQ> moved(m.k);
            for (int i = 0; i < m.k; ++i) moved[i] = affine_apply(theta, args[i]);
            REQUIRE(eval_g(m, moved) == eval_g(m, args));
        }
    }

    // The lp linear parts are the signed permutations even though the full
    // group is infinite (translations).
    const auto lp_parts = finite_linear_parts(parse_metric("lp:4", 2));
    REQUIRE(lp_parts.has_value());
    CHECK(lp_parts->size() == 8);
    CHECK_FALSE(finite_linear_parts(parse_metric("euclid_sq", 2)).has_value());
    const auto dot_parts = finite_linear_parts(parse_metric("dot", 2));
    CHECK_FALSE(dot_parts.has_value());
}

TEST_CASE("affine map algebra") {
    const AffineMap f{MatQ{{qq(1), qq(2)}, {qq(0), qq(1)}}, vq({5, -1})};
    const AffineMap g{MatQ{{qq(2), qq(0)}, {qq(1), qq(1)}}, vq({0, 3})};
    const VecQ x = vq({1, 1});
    // affine_compose(f, g)(x) = f(g(x)).
    CHECK(affine_apply(affine_compose(f, g), x) == affine_apply(f, affine_apply(g, x)));
    const auto finv = affine_inverse(f);
    REQUIRE(finv.has_value());
    CHECK(affine_apply(*finv, affine_apply(f, x)) == x);
    CHECK(affine_equal(affine_compose(*finv, f), affine_identity(2)));

    const AffineMap singular{zero_matrix(2), vq({1, 1})};
    CHECK_FALSE(affine_inverse(singular).has_value());

    CHECK(is_signed_permutation(MatQ{{qq(0), qq(-1)}, {qq(1), qq(0)}}));
    CHECK_FALSE(is_permutation(MatQ{{qq(0), qq(-1)}, {qq(1), qq(0)}}));
    CHECK(is_permutation(MatQ{{qq(0), qq(1)}, {qq(1), qq(0)}}));
    CHECK_FALSE(is_signed_permutation(MatQ{{qq(1), qq(1)}, {qq(0), qq(1)}}));
    CHECK(permutation_matrices(3, false).size() == 6);
    CHECK(permutation_matrices(3, true).size() == 48);
}
