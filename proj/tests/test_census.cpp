// Tests for the enumeration engines: measurement vectors, censuses with
// fibres and filters, isometry energy, rich transformation classes, and the
// Gram/tensor corollary counts.
//
// Oracle discipline:
//   [TRIVIAL]  pinned by definition (single-point sets, diagonal pairs, the
//              definitional gram/census identity).
//   [DERIVED]  enumerated by hand and frozen (the 3-point line census, the
//              4th-roots dot census, fibre sizes of the unit square, the
//              Gram collapse for {1,-1}, the tensor values for {1,2}), or
//              cross-checked against an independently coded oracle in this
//              file (pairwise congruence loop, rich-class dedup).
#include <doctest.h>

#include <rigidlab/census.hpp>
#include <rigidlab/errors.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

using namespace rigidlab;

namespace {

Q qq(long num, long den = 1) {
  Q v(num, den);
  v.canonicalize();
  return v;
}

VecQ vq(std::initializer_list<Q> entries) { return VecQ(entries); }

PointSet pset(int d, std::vector<VecQ> pts) { return make_pointset(d, std::move(pts)); }

Realisation real2(std::initializer_list<std::initializer_list<long>> pts) {
  Realisation r;
  r.d = static_cast<int>(pts.begin()->size());
  for (const auto& p : pts) {
    VecQ v;
    for (long c : p) v.push_back(Q(c));
    r.points.push_back(v);
  }
  return r;
}

// Independent oracle: the energy counted one ordered pair at a time, with its
// own odometer (first vertex innermost, unlike the library's).
long long oracle_energy(const TransformGroup& G, int v_size, const PointSet& P) {
  std::vector<std::vector<VecQ>> tuples;
  std::vector<int> idx(v_size, 0);
  const int n = P.size();
  while (true) {
    std::vector<VecQ> t;
    for (int v = 0; v < v_size; ++v) t.push_back(P.points[idx[v]]);
    tuples.push_back(std::move(t));
    int pos = 0;
    while (pos < v_size && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == v_size) break;
  }
  long long count = 0;
  for (const auto& p : tuples)
    for (const auto& q : tuples)
      if (exists_transform(G, p, q)) ++count;
  return count;
}

// Independent oracle for |R_>=t(P)|: all ordered-pair-to-ordered-pair solves,
// richness filter, dedup by the restriction graph of theta on P.
long long oracle_rich(const TransformGroup& G, const PointSet& P, int t) {
  const auto& pts = P.points;
  const int n = static_cast<int>(pts.size());
  std::set<VecQ, VecQLess> members(pts.begin(), pts.end());
  std::set<std::vector<std::pair<VecQ, VecQ>>> classes;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          if (c == e) continue;
          for (const AffineMap& theta :
               pair_induced_transforms(G, pts[a], pts[b], pts[c], pts[e])) {
            std::vector<std::pair<VecQ, VecQ>> graph;
            for (const VecQ& x : pts) {
              const VecQ y = affine_apply(theta, x);
              if (members.count(y)) graph.emplace_back(x, y);
            }
            if (static_cast<int>(graph.size()) >= t) classes.insert(graph);
          }
        }
    }
  return static_cast<long long>(classes.size());
}

}  // namespace

TEST_CASE("measure evaluates g per edge in stored order") {
  // [TRIVIAL] K_2 Euclidean 3-4-5 triangle leg.
  const Metric euclid = parse_metric("euclid_sq", 2);
  const Hypergraph k2 = complete_graph(2);
  CHECK(measure(euclid, k2, real2({{0, 0}, {3, 4}})) == VecQ{qq(25)});

  // [TRIVIAL] K_3 in lexicographic edge order {0,1},{0,2},{1,2}.
  const Hypergraph k3 = complete_graph(3);
  const VecQ tri = measure(euclid, k3, real2({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(tri == vq({qq(1), qq(1), qq(2)}));

  // [TRIVIAL] the antisymmetric metric reads edge {0,1} in ascending order.
  const Metric skew = parse_metric("skew", 2);
  CHECK(measure(skew, k2, real2({{0, 1}, {1, 0}})) == VecQ{qq(-1)});

  // [TRIVIAL] a dot loop measures the self-product.
  const Metric dot_m = parse_metric("dot", 2);
  const Hypergraph loops = complete_with_loops(1);
  CHECK(measure(dot_m, loops, real2({{2, 3}})) == VecQ{qq(13)});

  // [TRIVIAL] float measurement mirrors the exact one.
  const auto approx = measure_approx(euclid, k3, {{0, 0}, {1, 0}, {0, 1}});
  REQUIRE(approx.size() == 3);
  CHECK(approx[0] == doctest::Approx(1.0));
  CHECK(approx[2] == doctest::Approx(2.0));

  // [TRIVIAL] arity and vertex-count mismatches are rejected.
  CHECK_THROWS_AS(measure(euclid, k3, real2({{0, 0}, {1, 0}})), UsageError);
}

TEST_CASE("census: three collinear points under K_2") {
  // [DERIVED: 9 ordered pairs by hand — value 0 from the 3 diagonal pairs,
  // value 1 from (0,1),(1,0),(1,2),(2,1), value 4 from (0,2),(2,0).]
  const Metric euclid = parse_metric("euclid_sq", 2);
  const CensusReport rep = census(euclid, complete_graph(2), line(3));
  CHECK(rep.distinct_count == 3);
  CHECK(rep.enumerated == 9);
  CHECK(rep.fibre_sizes == std::vector<long long>{4, 3, 2});
  CHECK_FALSE(rep.quantised);
}

TEST_CASE("census: dot products of the 4th roots of unity") {
  // [DERIVED: all 16 dot products — 4 equal pairs give 1, 4 antipodal pairs
  // give -1, 8 orthogonal pairs give 0.]
  const Metric dot_m = parse_metric("dot", 2);
  const CensusReport rep = census(dot_m, complete_graph(2), circle(4));
  CHECK(rep.distinct_count == 3);
  CHECK(rep.enumerated == 16);
  CHECK(rep.fibre_sizes == std::vector<long long>{8, 4, 4});
}

TEST_CASE("census: a single point always has one fibre") {
  // [TRIVIAL]
  const PointSet single = pset(2, {vq({qq(2), qq(3)})});
  for (const char* id : {"euclid_sq", "pseudo11", "dot", "lp:4"}) {
    CAPTURE(id);
    const Metric m = parse_metric(id, 2);
    const CensusReport rep = census(m, complete_graph(2), single);
    CHECK(rep.distinct_count == 1);
    CHECK(rep.fibre_sizes == std::vector<long long>{1});
  }
}

TEST_CASE("census filters restrict the enumeration") {
  const Metric euclid = parse_metric("euclid_sq", 2);
  const Hypergraph k3 = complete_graph(3);
  const PointSet g9 = grid(3, 2);

  const CensusReport all = census(euclid, k3, g9);
  CHECK(all.enumerated == 729);
  long long total = 0;
  for (long long f : all.fibre_sizes) total += f;
  CHECK(total == all.enumerated);
  CHECK(std::is_sorted(all.fibre_sizes.rbegin(), all.fibre_sizes.rend()));

  // [DERIVED: 84 unordered triples in the 3x3 grid, 8 of them collinear
  // (3 rows, 3 columns, 2 diagonals); each non-collinear triple has 6
  // orderings, so 76 * 6 = 456 spanning assignments. For K_3 under the
  // Euclidean metric the Jacobian has generic rank 3 and drops rank exactly
  // on collinear triples, so the regular filter keeps the same 456.]
  CensusOptions opts;
  opts.filter = CensusFilter::injective;
  const CensusReport inj = census(euclid, k3, g9, opts);
  CHECK(inj.enumerated == 9 * 8 * 7);
  CHECK(inj.distinct_count <= all.distinct_count);

  opts.filter = CensusFilter::spanning;
  const CensusReport span = census(euclid, k3, g9, opts);
  CHECK(span.enumerated == 456);

  opts.filter = CensusFilter::regular;
  const CensusReport reg = census(euclid, k3, g9, opts);
  CHECK(reg.enumerated == 456);
  CHECK(reg.distinct_count == span.distinct_count);

  CHECK(parse_filter("spanning") == CensusFilter::spanning);
  CHECK(filter_name(CensusFilter::regular) == "regular");
  CHECK_THROWS_AS(parse_filter("bogus"), UsageError);
}

TEST_CASE("census budget errors name the required budget") {
  const Metric euclid = parse_metric("euclid_sq", 2);
  CensusOptions opts;
  opts.budget = 100;
  CHECK_THROWS_WITH_AS(census(euclid, complete_graph(3), grid(3, 2), opts),
                       doctest::Contains("729"), BudgetError);
}

TEST_CASE("census is deterministic across thread counts") {
  const Metric euclid = parse_metric("euclid_sq", 2);
  const Hypergraph k3 = complete_graph(3);
  const PointSet pts = grid(3, 2);

  CensusOptions serial;
  serial.threads = 1;
  const CensusReport a = census(euclid, k3, pts, serial);

  CensusOptions parallel;
  parallel.threads = 3;
  const CensusReport b = census(euclid, k3, pts, parallel);
  CHECK(a.distinct_count == b.distinct_count);
  CHECK(a.fibre_sizes == b.fibre_sizes);
  CHECK(a.enumerated == b.enumerated);

  // threads = 0 honours RIGIDLAB_THREADS.
  setenv("RIGIDLAB_THREADS", "2", 1);
  CensusOptions env_opts;
  const CensusReport c = census(euclid, k3, pts, env_opts);
  unsetenv("RIGIDLAB_THREADS");
  CHECK(c.distinct_count == a.distinct_count);
  CHECK(c.fibre_sizes == a.fibre_sizes);
}

TEST_CASE("census counts are invariant under catalogued isometries of P") {
  // Exact-arithmetic property: applying one fixed g-isometry to every point
  // permutes each fibre without merging or splitting.
  const PointSet base = pset(2, {vq({qq(0), qq(0)}), vq({qq(1), qq(0)}), vq({qq(1), qq(2)}),
                                 vq({qq(-1), qq(3)}), vq({qq(2), qq(2)})});

  const auto transformed = [&](const AffineMap& theta) {
    std::vector<VecQ> moved;
    for (const VecQ& p : base.points) moved.push_back(affine_apply(theta, p));
    return make_pointset(2, std::move(moved));
  };

  const Metric euclid = parse_metric("euclid_sq", 2);
  AffineMap rot35;
  rot35.A = {{qq(3, 5), qq(-4, 5)}, {qq(4, 5), qq(3, 5)}};
  rot35.b = vq({qq(2), qq(-1)});
  REQUIRE(is_isometry(euclid, rot35));
  const Hypergraph k3 = complete_graph(3);
  CHECK(census(euclid, k3, base).distinct_count ==
        census(euclid, k3, transformed(rot35)).distinct_count);

  const Metric dot_m = parse_metric("dot", 2);
  AffineMap rot_linear = rot35;
  rot_linear.b = vq({qq(0), qq(0)});
  REQUIRE(is_isometry(dot_m, rot_linear));
  CHECK(census(dot_m, k3, base).distinct_count ==
        census(dot_m, k3, transformed(rot_linear)).distinct_count);

  const Metric tensor3 = parse_metric("sym_tensor:3", 2);
  AffineMap swap;
  swap.A = {{qq(0), qq(1)}, {qq(1), qq(0)}};
  swap.b = vq({qq(0), qq(0)});
  REQUIRE(is_isometry(tensor3, swap));
  const Hypergraph h = complete_uniform_with_repeats(3, 3);
  CHECK(census(tensor3, h, base).distinct_count ==
        census(tensor3, h, transformed(swap)).distinct_count);
}

TEST_CASE("census quantises float point sets and flags it") {
  // [DERIVED: dot products on the 8th roots of unity take the five values
  // cos(2 pi j / 8) for j = 0..4; j = 0 and 4 occur 8 times each, the others
  // 16 times.]
  const Metric dot_m = parse_metric("dot", 2);
  const CensusReport rep = census(dot_m, complete_graph(2), circle(8));
  CHECK(rep.quantised);
  CHECK(rep.distinct_count == 5);
  CHECK(rep.enumerated == 64);
  CHECK(rep.fibre_sizes == std::vector<long long>{16, 16, 16, 8, 8});
}

TEST_CASE("energy: pinned small cases") {
  // [DERIVED: Gamma = {+1, -1} in d = 1 (sym_tensor:4 catalogue); all four
  // ordered pairs over P = {1, -1} are related by a sign.]
  const Metric t4 = parse_metric("sym_tensor:4", 1);
  const PointSet pm = pset(1, {VecQ{qq(1)}, VecQ{qq(-1)}});
  const EnergyReport e = energy(t4, 1, pm);
  CHECK(e.energy == 4);
  CHECK(e.method == "finite-group");

  // [DERIVED: the four two-vertex tuples over {(0,0),(1,0)} split into two
  // SE(2) classes of size 2 — the coincident tuples and the two orderings of
  // the segment (a half-turn about the midpoint swaps them) — so the energy
  // is 2^2 + 2^2 = 8.]
  const TransformGroup se2 = parse_group("se2", 2);
  const PointSet two = pset(2, {vq({qq(0), qq(0)}), vq({qq(1), qq(0)})});
  const EnergyReport e2 = energy(se2, 2, two);
  CHECK(e2.energy == 8);
  CHECK(e2.method == "affine-solve");

  // [TRIVIAL] for V of size 1, translations relate every ordered pair.
  const Metric euclid = parse_metric("euclid_sq", 2);
  const PointSet five = pset(2, {vq({qq(0), qq(0)}), vq({qq(1), qq(0)}), vq({qq(1), qq(2)}),
                                 vq({qq(-1), qq(3)}), vq({qq(2), qq(2)})});
  CHECK(energy(euclid, 1, five).energy == 25);

  // [TRIVIAL] O(2) relates unit vectors pairwise.
  const Metric dot_m = parse_metric("dot", 2);
  const PointSet units = pset(2, {vq({qq(1), qq(0)}), vq({qq(0), qq(1)}), vq({qq(-1), qq(0)})});
  CHECK(energy(dot_m, 1, units).energy == 9);
}

TEST_CASE("energy laws: diagonal lower bound, square upper bound, finite-group law") {
  const PointSet p3 = pset(1, {VecQ{qq(1)}, VecQ{qq(2)}, VecQ{qq(-1)}});
  const PointSet p4 = pset(2, {vq({qq(0), qq(0)}), vq({qq(2), qq(1)}), vq({qq(-1), qq(1)}),
                               vq({qq(3), qq(-2)})});

  for (int k : {3, 4}) {
    for (int v_size : {1, 2, 3}) {
      CAPTURE(k);
      CAPTURE(v_size);
      const Metric m = parse_metric(k == 3 ? "sym_tensor:3" : "sym_tensor:4", 2);
      const auto elems = finite_elements(m);
      REQUIRE(elems.has_value());
      const long long gamma = static_cast<long long>(elems->size());
      long long pow_v = 1, pow_2v = 1;
      for (int i = 0; i < v_size; ++i) pow_v *= p4.size();
      for (int i = 0; i < 2 * v_size; ++i) pow_2v *= p4.size();
      const EnergyReport e = energy(m, v_size, p4);
      CHECK(e.energy >= pow_v);              // diagonal pairs  [TRIVIAL]
      CHECK(e.energy <= pow_2v);             // all pairs       [TRIVIAL]
      CHECK(e.energy <= gamma * pow_v);      // finite-group law
    }
  }

  // Monotone under group inclusion: SE(2) is a subgroup of E(2).
  const TransformGroup se2 = parse_group("se2", 2);
  const TransformGroup e2 = parse_group("e2", 2);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    CAPTURE(seed);
    const PointSet p = random_generic(2, 4, 30, seed);
    CHECK(energy(se2, 2, p).energy <= energy(e2, 2, p).energy);
  }

  // The metric overload routes through the metric's own group.
  const Metric euclid = parse_metric("euclid_sq", 2);
  CHECK(energy(euclid, 2, p4).energy == energy(parse_group("euclid", 2), 2, p4).energy);

  // Budget and float-mode misuse.
  CHECK_THROWS_AS(energy(euclid, 2, p4, 10), BudgetError);
  CHECK_THROWS_AS(energy(euclid, 1, circle(8)), UsageError);
  CHECK_THROWS_AS(energy(euclid, 0, p4), UsageError);
}

TEST_CASE("energy keyed fast paths agree with the pairwise oracle") {
  // The decisive cross-check: every catalogued group kind, on integer sets
  // and on degenerate sets (collinear; on the pseudo null cone).
  const PointSet collinear = line(4);
  PointSet nullcone = pset(2, {vq({qq(0), qq(0)}), vq({qq(1), qq(1)}), vq({qq(2), qq(2)}),
                               vq({qq(1), qq(-1)})});

  std::vector<TransformGroup> groups;
  for (const char* id : {"euclid_sq", "pseudo11", "dot", "lp:4", "skew", "sym_tensor:3"})
    groups.push_back(group_of(parse_metric(id, 2)));
  groups.push_back(parse_group("se2", 2));

  for (const auto& G : groups) {
    CAPTURE(G.id);
    for (std::uint64_t seed : {5u, 6u}) {
      const PointSet p = random_generic(2, 4, 20, seed);
      const long long keyed = energy(G, 2, p).energy;
      CHECK(keyed == energy_pairwise(G, 2, p).energy);
      CHECK(keyed == oracle_energy(G, 2, p));
    }
    CHECK(energy(G, 2, collinear).energy == oracle_energy(G, 2, collinear));
    CHECK(energy(G, 2, nullcone).energy == oracle_energy(G, 2, nullcone));
  }

  // d = 1 finite group (signed permutations of one coordinate).
  const TransformGroup pm1 = group_of(parse_metric("sym_tensor:4", 1));
  const PointSet p1 = pset(1, {VecQ{qq(0)}, VecQ{qq(1)}, VecQ{qq(-1)}, VecQ{qq(3)}});
  CHECK(energy(pm1, 2, p1).energy == oracle_energy(pm1, 2, p1));
  CHECK(energy(pm1, 3, p1).energy == oracle_energy(pm1, 3, p1));
}

TEST_CASE("rich transformations: pinned two-point example and oracle equality") {
  const TransformGroup se2 = parse_group("se2", 2);
  const PointSet two = pset(2, {vq({qq(0), qq(0)}), vq({qq(1), qq(0)})});

  // [DERIVED: exhaustive over pair-to-pair solves — only the identity and the
  // half-turn about the midpoint preserve the pair, and their restriction
  // graphs differ.]
  const RichReport rep = rich_transformations(se2, two, 2);
  CHECK(rep.class_count == 2);
  CHECK_FALSE(rep.diagonal_warning);

  // [TRIVIAL] richness can never exceed |P|.
  CHECK(rich_transformations(se2, two, 3).class_count == 0);

  // [DERIVED: oracle above] equality on lines and grid subsets, both groups.
  const TransformGroup e2 = parse_group("e2", 2);
  const std::vector<PointSet> sets = {
      line(3), line(4), grid(2, 2),
      pset(2, {vq({qq(0), qq(0)}), vq({qq(1), qq(0)}), vq({qq(0), qq(1)}), vq({qq(2), qq(2)})})};
  for (const auto& P : sets) {
    CAPTURE(P.provenance);
    for (int t = 2; t <= P.size() + 1; ++t) {
      CHECK(rich_transformations(se2, P, t).class_count == oracle_rich(se2, P, t));
      CHECK(rich_transformations(e2, P, t).class_count == oracle_rich(e2, P, t));
    }
    // Non-increasing in t.
    long long prev = rich_transformations(se2, P, 2).class_count;
    for (int t = 3; t <= P.size(); ++t) {
      const long long cur = rich_transformations(se2, P, t).class_count;
      CHECK(cur <= prev);
      prev = cur;
    }
  }

  // Pseudo-Euclidean group: oracle equality plus the diagonal warning.
  const TransformGroup pseudo = parse_group("pseudo", 2);
  const PointSet off_diag = pset(2, {vq({qq(1), qq(0)}), vq({qq(2), qq(0)}), vq({qq(0), qq(3)})});
  const RichReport off = rich_transformations(pseudo, off_diag, 2);
  CHECK(off.class_count == oracle_rich(pseudo, off_diag, 2));
  CHECK_FALSE(off.diagonal_warning);

  const PointSet on_diag = pset(2, {vq({qq(1), qq(1)}), vq({qq(2), qq(0)}), vq({qq(0), qq(3)})});
  CHECK(rich_transformations(pseudo, on_diag, 2).diagonal_warning);

  // Unsupported group and undersized t.
  CHECK_THROWS_AS(rich_transformations(group_of(parse_metric("dot", 2)), two, 2), UsageError);
  CHECK_THROWS_AS(rich_transformations(se2, two, 1), UsageError);
}

TEST_CASE("gram census counts distinct Gram matrices") {
  // [TRIVIAL] one column choice.
  CHECK(gram_census(pset(1, {VecQ{qq(1)}}), 2) == 1);

  // [DERIVED: the four column assignments over {1,-1} give X^T X =
  // [[1,1],[1,1]] for (1,1) and (-1,-1), and [[1,-1],[-1,1]] for the mixed
  // pairs — two distinct matrices.]
  CHECK(gram_census(pset(1, {VecQ{qq(1)}, VecQ{qq(-1)}}), 2) == 2);

  // [TRIVIAL: definitional identity] gram_census = census under dot on the
  // complete graph with loops.
  const PointSet p = pset(2, {vq({qq(0), qq(1)}), vq({qq(2), qq(1)}), vq({qq(-1), qq(2)})});
  const Metric dot_m = parse_metric("dot", 2);
  for (int n : {1, 2, 3}) {
    CAPTURE(n);
    CHECK(gram_census(p, n) == census(dot_m, complete_with_loops(n), p).distinct_count);
  }

  // n = 1 counts distinct squared norms. [DERIVED: norms 1, 5, 5]
  CHECK(gram_census(p, 1) == 2);

  CHECK_THROWS_AS(gram_census(pset(4, {vq({qq(1), qq(0), qq(0), qq(0)})}), 2), UsageError);
  CHECK_THROWS_AS(gram_census(p, 0), UsageError);
}

TEST_CASE("tensor census counts distinct symmetric tensors") {
  // [TRIVIAL] the zero point gives the zero tensor only.
  CHECK(tensor_census(pset(1, {VecQ{qq(0)}}), 2, 3) == 1);
  CHECK(tensor_census(pset(1, {VecQ{qq(0)}}), 3, 4) == 1);

  // [DERIVED: entries (x^3, x^2 y, x y^2, y^3) for the four assignments over
  // {1,2} are (1,1,1,1), (1,2,4,8), (8,4,2,1), (8,8,8,8) — all distinct.]
  const PointSet p12 = pset(1, {VecQ{qq(1)}, VecQ{qq(2)}});
  CHECK(tensor_census(p12, 2, 3) == 4);

  // [TRIVIAL] permuting P does not change the count.
  const PointSet p21 = pset(1, {VecQ{qq(2)}, VecQ{qq(1)}});
  CHECK(tensor_census(p21, 2, 3) == 4);

  // [TRIVIAL: definitional identity] census form.
  const Metric t3 = parse_metric("sym_tensor:3", 1);
  CHECK(tensor_census(p12, 2, 3) ==
        census(t3, complete_uniform_with_repeats(2, 3), p12).distinct_count);

  CHECK_THROWS_AS(tensor_census(p12, 2, 2), UsageError);
  CHECK_THROWS_AS(tensor_census(p12, 0, 3), UsageError);
}

TEST_CASE("fibre/energy consistency: unit square under K_2") {
  // [DERIVED by hand: the 16 two-vertex tuples over the unit square have
  // squared lengths 0 (4 tuples), 1 (8), 2 (4); two K_2 tuples are congruent
  // exactly when lengths agree, so energy = 4^2 + 8^2 + 4^2 = 96 and the
  // fibre squares sum to the same 96; the ratio is 256 / (3 * 96) = 8/9.]
  const Metric euclid = parse_metric("euclid_sq", 2);
  const ConsistencyReport rep =
      fibre_energy_consistency(euclid, complete_graph(2), grid(2, 2));
  CHECK(rep.pairs_preserve_measurement);
  CHECK(rep.energy_dominated);
  CHECK(rep.energy == 96);
  CHECK(rep.keyed_energy == 96);
  CHECK(rep.sum_fibre_sq == 96);
  CHECK(rep.distinct_count == 3);
  CHECK(rep.ratio == qq(8, 9));
}

TEST_CASE("fibre/energy consistency: finite group and single point") {
  // Finite-group instance on a 3-uniform hypergraph.
  const Metric t3 = parse_metric("sym_tensor:3", 1);
  const PointSet p = pset(1, {VecQ{qq(1)}, VecQ{qq(2)}, VecQ{qq(3)}});
  const ConsistencyReport rep =
      fibre_energy_consistency(t3, complete_uniform_with_repeats(2, 3), p);
  CHECK(rep.pairs_preserve_measurement);
  CHECK(rep.energy_dominated);
  CHECK(rep.energy == rep.keyed_energy);
  CHECK(rep.sum_fibre_sq >= rep.energy);

  // [TRIVIAL] |P| = 1 forces everything to 1.
  const ConsistencyReport one =
      fibre_energy_consistency(parse_metric("euclid_sq", 2), complete_graph(2),
                               pset(2, {vq({qq(1), qq(2)})}));
  CHECK(one.energy == 1);
  CHECK(one.sum_fibre_sq == 1);
  CHECK(one.distinct_count == 1);
  CHECK(one.ratio == qq(1));
}
