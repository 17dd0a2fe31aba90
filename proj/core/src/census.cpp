#include <rigidlab/census.hpp>

#include <rigidlab/errors.hpp>
#include <rigidlab/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace rigidlab {

namespace {

mpz_class pow_mpz(int base, int exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

void check_budget(const char* what, int base, int exp, long long budget) {
  if (budget < 1) throw UsageError(std::string(what) + ": budget must be positive");
  const mpz_class required = pow_mpz(base, exp);
  if (required > static_cast<long>(budget)) {
    std::ostringstream msg;
    msg << what << ": enumeration requires budget " << required.get_str() << ", budget is "
        << budget;
    throw BudgetError(msg.str());
  }
}

int resolve_threads(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("RIGIDLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return std::min(n, 64);
  }
  return 1;
}

// Odometer over [0, n)^v with the last position innermost.
template <typename Fn>
void for_each_tuple(int n, int v, Fn&& fn) {
  std::vector<int> idx(v, 0);
  while (true) {
    fn(idx);
    int pos = v - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }
}

bool indices_distinct(const std::vector<int>& idx) {
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] == idx[j]) return false;
  return true;
}

void check_census_compatible(const Metric& m, const Hypergraph& g, const PointSet& P) {
  if (g.k != m.k) throw UsageError("census: hypergraph arity does not match the metric");
  if (P.d != m.d) throw UsageError("census: point dimension does not match the metric");
  if (g.vertex_count < 1) throw UsageError("census: hypergraph has no vertices");
  if (P.size() < 1) throw UsageError("census: point set is empty");
}

}  // namespace

VecQ measure(const Metric& m, const Hypergraph& g, const Realisation& p) {
  if (g.k != m.k) throw UsageError("measure: hypergraph arity does not match the metric");
  if (p.d != m.d) throw UsageError("measure: realisation dimension does not match the metric");
  if (p.vertex_count() != g.vertex_count)
    throw UsageError("measure: realisation does not cover the vertex set");
  VecQ values;
  values.reserve(g.edges.size());
  std::vector<VecQ> args(g.k);
  for (const auto& edge : g.edges) {
    for (int s = 0; s < g.k; ++s) args[s] = p.points[edge[s]];
    values.push_back(eval_g(m, args));
  }
  return values;
}

std::vector<double> measure_approx(const Metric& m, const Hypergraph& g,
                                   const std::vector<std::vector<double>>& points) {
  if (g.k != m.k) throw UsageError("measure: hypergraph arity does not match the metric");
  if (static_cast<int>(points.size()) != g.vertex_count)
    throw UsageError("measure: realisation does not cover the vertex set");
  std::vector<double> values;
  values.reserve(g.edges.size());
  std::vector<std::vector<double>> args(g.k);
  for (const auto& edge : g.edges) {
    for (int s = 0; s < g.k; ++s) args[s] = points[edge[s]];
    values.push_back(eval_g(m, args));
  }
  return values;
}

CensusFilter parse_filter(std::string_view name) {
  if (name == "all") return CensusFilter::all;
  if (name == "injective") return CensusFilter::injective;
  if (name == "spanning") return CensusFilter::spanning;
  if (name == "regular") return CensusFilter::regular;
  throw UsageError("unknown filter '" + std::string(name) +
                   "' (expected all|injective|spanning|regular)");
}

std::string filter_name(CensusFilter f) {
  switch (f) {
    case CensusFilter::all: return "all";
    case CensusFilter::injective: return "injective";
    case CensusFilter::spanning: return "spanning";
    case CensusFilter::regular: return "regular";
  }
  return "all";
}

CensusReport census(const Metric& m, const Hypergraph& g, const PointSet& P,
                    const CensusOptions& opts) {
  check_census_compatible(m, g, P);
  const int n = P.size();
  const int v = g.vertex_count;
  check_budget("census", n, v, opts.budget);
  if (!P.exact &&
      (opts.filter == CensusFilter::spanning || opts.filter == CensusFilter::regular))
    throw UsageError("census: spanning/regular filters need exact points");

  // The regular filter compares per-realisation rank against the generic
  // rank; resolve it before any worker threads start.
  int target_rank = -1;
  if (opts.filter == CensusFilter::regular) target_rank = generic_rank(m, g);

  const int threads = std::min(resolve_threads(opts.threads), n);

  CensusReport report;
  report.filter = opts.filter;
  report.quantised = !P.exact;

  const auto passes = [&](const std::vector<int>& idx) {
    switch (opts.filter) {
      case CensusFilter::all:
        return true;
      case CensusFilter::injective:
        return indices_distinct(idx);
      case CensusFilter::spanning:
      case CensusFilter::regular: {
        Realisation r;
        r.d = P.d;
        r.points.reserve(idx.size());
        for (int i : idx) r.points.push_back(P.points[i]);
        if (opts.filter == CensusFilter::spanning) return affinely_spanning(r);
        return rank_exact(jacobian(m, g, r)) == target_rank;
      }
    }
    return true;
  };

  if (P.exact) {
    using Fibres = std::map<VecQ, long long, VecQLess>;
    std::vector<Fibres> partial(threads);
    std::vector<long long> counted(threads, 0);

    const auto worker = [&](int w, int lo, int hi) {
      Realisation r;
      r.d = P.d;
      r.points.assign(v, VecQ{});
      for (int first = lo; first < hi; ++first) {
        for_each_tuple(n, v - 1, [&](const std::vector<int>& rest) {
          std::vector<int> idx(v);
          idx[0] = first;
          for (int i = 1; i < v; ++i) idx[i] = rest[i - 1];
          if (!passes(idx)) return;
          for (int i = 0; i < v; ++i) r.points[i] = P.points[idx[i]];
          ++partial[w][measure(m, g, r)];
          ++counted[w];
        });
      }
    };

    if (threads == 1) {
      worker(0, 0, n);
    } else {
      std::vector<std::thread> pool;
      const int chunk = (n + threads - 1) / threads;
      for (int w = 0; w < threads; ++w)
        pool.emplace_back(worker, w, std::min(w * chunk, n), std::min((w + 1) * chunk, n));
      for (auto& t : pool) t.join();
    }

    Fibres merged;
    for (int w = 0; w < threads; ++w) {
      for (const auto& [key, count] : partial[w]) merged[key] += count;
      report.enumerated += counted[w];
    }
    report.distinct_count = static_cast<long long>(merged.size());
    for (const auto& [key, count] : merged) report.fibre_sizes.push_back(count);
  } else {
    // Float mode: keys quantised to the key grid (undercount caveat in the
    // report type). Enumeration is cheap enough serially here.
    std::map<std::vector<long long>, long long> fibres;
    std::vector<std::vector<double>> pts(v);
    for_each_tuple(n, v, [&](const std::vector<int>& idx) {
      if (!passes(idx)) return;
      for (int i = 0; i < v; ++i) pts[i] = P.fpoints[idx[i]];
      const std::vector<double> values = measure_approx(m, g, pts);
      std::vector<long long> key(values.size());
      for (std::size_t i = 0; i < values.size(); ++i)
        key[i] = static_cast<long long>(std::llround(values[i] / opts.quantum));
      ++fibres[key];
      ++report.enumerated;
    });
    report.distinct_count = static_cast<long long>(fibres.size());
    for (const auto& [key, count] : fibres) report.fibre_sizes.push_back(count);
  }

  std::sort(report.fibre_sizes.rbegin(), report.fibre_sizes.rend());
  return report;
}

namespace {

Q bilinear_o11(const VecQ& x, const VecQ& y) { return x[0] * y[0] - x[1] * y[1]; }

Q cross2_of(const VecQ& a, const VecQ& b, const VecQ& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Complete congruence invariant for groups that admit one; tuples are
// congruent iff the keys are equal.
//   euclid:        ordered pairwise squared distances.
//   se2:           the Euclidean key plus the orientation sign of the first
//                  non-collinear index triple (0 when none exists; collinear
//                  congruent tuples are always related by a direct isometry).
//   linear_orth:   the Gram matrix of the raw points.
//   finite:        lexicographic minimum of the transformed tuple.
//   transl_finite: lexicographic minimum over linear parts of the
//                  first-point-anchored difference tuple.
VecQ congruence_key(const TransformGroup& G, const std::vector<VecQ>& tuple) {
  VecQ key;
  const int v = static_cast<int>(tuple.size());
  switch (G.kind) {
    case GroupKind::euclid:
    case GroupKind::se2: {
      for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
          Q d = 0;
          for (std::size_t c = 0; c < tuple[i].size(); ++c) {
            const Q diff = tuple[i][c] - tuple[j][c];
            d += diff * diff;
          }
          key.push_back(d);
        }
      if (G.kind == GroupKind::se2) {
        Q orient = 0;
        for (int i = 0; i < v && orient == 0; ++i)
          for (int j = i + 1; j < v && orient == 0; ++j)
            for (int k = j + 1; k < v && orient == 0; ++k) {
              const Q cr = cross2_of(tuple[i], tuple[j], tuple[k]);
              if (cr != 0) orient = q_sign(cr);
            }
        key.push_back(orient);
      }
      return key;
    }
    case GroupKind::linear_orth: {
      for (int i = 0; i < v; ++i)
        for (int j = i; j < v; ++j) {
          Q dot = 0;
          for (std::size_t c = 0; c < tuple[i].size(); ++c) dot += tuple[i][c] * tuple[j][c];
          key.push_back(dot);
        }
      return key;
    }
    case GroupKind::finite: {
      bool first = true;
      for (const AffineMap& theta : G.elements) {
        VecQ cand;
        for (const VecQ& p : tuple) {
          const VecQ moved = affine_apply(theta, p);
          cand.insert(cand.end(), moved.begin(), moved.end());
        }
        if (first || compare(cand, key) < 0) key = std::move(cand);
        first = false;
      }
      return key;
    }
    case GroupKind::transl_finite: {
      bool first = true;
      for (const MatQ& A : G.linear_parts) {
        VecQ cand;
        VecQ anchor = mat_vec(A, tuple[0]);
        for (const VecQ& p : tuple) {
          const VecQ moved = mat_vec(A, p);
          for (std::size_t c = 0; c < moved.size(); ++c) cand.push_back(moved[c] - anchor[c]);
        }
        if (first || compare(cand, key) < 0) key = std::move(cand);
        first = false;
      }
      return key;
    }
    default:
      break;
  }
  throw UsageError("energy: no complete invariant key for this group");
}

// Necessary (not sufficient) invariant used to bucket tuples before pairwise
// congruence tests for the O(1,1)-type groups, whose null configurations are
// not separated by their form Grams.
VecQ o11_bucket_key(const TransformGroup& G, const std::vector<VecQ>& tuple) {
  VecQ key;
  const int v = static_cast<int>(tuple.size());
  std::vector<VecQ> base;
  if (G.kind == GroupKind::pseudo) {
    for (const VecQ& p : tuple) base.push_back({p[0] - tuple[0][0], p[1] - tuple[0][1]});
  } else {
    base = tuple;
  }
  for (int i = 0; i < v; ++i)
    for (int j = i; j < v; ++j) key.push_back(bilinear_o11(base[i], base[j]));
  return key;
}

std::vector<std::vector<VecQ>> all_tuples(const PointSet& P, int v_size) {
  std::vector<std::vector<VecQ>> tuples;
  for_each_tuple(P.size(), v_size, [&](const std::vector<int>& idx) {
    std::vector<VecQ> t;
    t.reserve(idx.size());
    for (int i : idx) t.push_back(P.points[i]);
    tuples.push_back(std::move(t));
  });
  return tuples;
}

void check_energy_args(const TransformGroup& G, int v_size, const PointSet& P) {
  if (v_size < 1) throw UsageError("energy: vertex count must be at least 1");
  if (!P.exact) throw UsageError("energy: exact rational points are required");
  if (G.d != P.d) throw UsageError("energy: group and point dimensions differ");
  if (P.size() < 1) throw UsageError("energy: point set is empty");
}

const char* energy_method(GroupKind kind) {
  return (kind == GroupKind::finite || kind == GroupKind::transl_finite) ? "finite-group"
                                                                         : "affine-solve";
}

}  // namespace

EnergyReport energy(const TransformGroup& G, int v_size, const PointSet& P, long long budget) {
  check_energy_args(G, v_size, P);
  EnergyReport report;
  report.method = energy_method(G.kind);

  if (G.kind == GroupKind::pseudo || G.kind == GroupKind::linear_o11) {
    // Bucket by the form Gram, then split buckets into congruence classes by
    // pairwise tests (the bucket key alone conflates null configurations).
    check_budget("energy", P.size(), 2 * v_size, budget);
    std::map<VecQ, std::vector<std::pair<std::vector<VecQ>, long long>>, VecQLess> buckets;
    for_each_tuple(P.size(), v_size, [&](const std::vector<int>& idx) {
      std::vector<VecQ> t;
      t.reserve(idx.size());
      for (int i : idx) t.push_back(P.points[i]);
      auto& classes = buckets[o11_bucket_key(G, t)];
      for (auto& [rep, count] : classes) {
        if (exists_transform(G, rep, t)) {
          ++count;
          return;
        }
      }
      classes.emplace_back(std::move(t), 1);
    });
    for (const auto& [key, classes] : buckets)
      for (const auto& [rep, count] : classes) report.energy += count * count;
    return report;
  }

  check_budget("energy", P.size(), v_size, budget);
  std::map<VecQ, long long, VecQLess> classes;
  std::vector<VecQ> tuple(v_size);
  for_each_tuple(P.size(), v_size, [&](const std::vector<int>& idx) {
    for (int i = 0; i < v_size; ++i) tuple[i] = P.points[idx[i]];
    ++classes[congruence_key(G, tuple)];
  });
  for (const auto& [key, count] : classes) report.energy += count * count;
  return report;
}

EnergyReport energy(const Metric& m, int v_size, const PointSet& P, long long budget) {
  return energy(group_of(m), v_size, P, budget);
}

EnergyReport energy_pairwise(const TransformGroup& G, int v_size, const PointSet& P,
                             long long budget) {
  check_energy_args(G, v_size, P);
  check_budget("energy", P.size(), 2 * v_size, budget);
  const auto tuples = all_tuples(P, v_size);
  EnergyReport report;
  report.method = energy_method(G.kind);
  for (const auto& p : tuples)
    for (const auto& q : tuples)
      if (exists_transform(G, p, q)) ++report.energy;
  return report;
}

RichReport rich_transformations(const TransformGroup& G, const PointSet& P, int t) {
  if (t < 2) throw UsageError("rich_transformations: t must be at least 2");
  if (!P.exact) throw UsageError("rich_transformations: exact rational points are required");
  const bool supported = (G.kind == GroupKind::se2) || (G.kind == GroupKind::pseudo) ||
                         (G.kind == GroupKind::euclid && G.d == 2);
  if (!supported)
    throw UsageError("rich_transformations: group must be SE(2), E(2), or pseudo-Euclidean");
  if (P.d != 2) throw UsageError("rich_transformations: points must be planar");

  RichReport report;
  report.t = t;
  if (G.kind == GroupKind::pseudo) {
    for (const VecQ& p : P.points)
      if (p[0] * p[0] == p[1] * p[1]) report.diagonal_warning = true;
  }

  const auto& pts = P.points;
  const int n = static_cast<int>(pts.size());
  std::set<VecQ, VecQLess> members(pts.begin(), pts.end());

  // A transform with |P intersect theta P| >= t >= 2 maps some ordered pair
  // of distinct points of P to another, so scanning all pair solves is
  // exhaustive. Classes are keyed by the restriction graph of theta on
  // P intersect theta^{-1} P (which also determines the inverse graph).
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
            if (static_cast<int>(graph.size()) >= t) classes.insert(std::move(graph));
          }
        }
    }
  report.class_count = static_cast<long long>(classes.size());
  return report;
}

long long gram_census(const PointSet& P, int n, long long budget) {
  if (P.d < 1 || P.d > 3) throw UsageError("gram_census: points must live in dimension 1..3");
  if (n < 1) throw UsageError("gram_census: n must be at least 1");
  const Metric dot_m = parse_metric("dot", P.d);
  CensusOptions opts;
  opts.budget = budget;
  return census(dot_m, complete_with_loops(n), P, opts).distinct_count;
}

long long tensor_census(const PointSet& P, int n, int k, long long budget) {
  if (n < 1) throw UsageError("tensor_census: n must be at least 1");
  if (k < 3) throw UsageError("tensor_census: tensor order must be at least 3");
  const Metric m = parse_metric("sym_tensor:" + std::to_string(k), P.d);
  CensusOptions opts;
  opts.budget = budget;
  return census(m, complete_uniform_with_repeats(n, k), P, opts).distinct_count;
}

ConsistencyReport fibre_energy_consistency(const Metric& m, const Hypergraph& g,
                                           const PointSet& P, long long budget) {
  check_census_compatible(m, g, P);
  if (!P.exact)
    throw UsageError("fibre_energy_consistency: exact rational points are required");
  const int v = g.vertex_count;
  check_budget("fibre_energy_consistency", P.size(), 2 * v, budget);

  CensusOptions opts;
  opts.budget = budget;
  const CensusReport fibres = census(m, g, P, opts);

  const TransformGroup G = group_of(m);
  const auto tuples = all_tuples(P, v);

  ConsistencyReport report;
  report.distinct_count = fibres.distinct_count;
  for (long long f : fibres.fibre_sizes) report.sum_fibre_sq += f * f;

  std::vector<VecQ> measures;
  measures.reserve(tuples.size());
  {
    Realisation r;
    r.d = P.d;
    for (const auto& t : tuples) {
      r.points = t;
      measures.push_back(measure(m, g, r));
    }
  }

  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t j = 0; j < tuples.size(); ++j)
      if (exists_transform(G, tuples[i], tuples[j])) {
        ++report.energy;
        if (compare(measures[i], measures[j]) != 0) report.pairs_preserve_measurement = false;
      }

  report.keyed_energy = energy(G, v, P, budget).energy;
  report.energy_dominated = report.sum_fibre_sq >= report.energy;

  const mpz_class p2v = pow_mpz(P.size(), 2 * v);
  Q ratio(p2v);
  ratio /= Q(static_cast<long>(report.distinct_count * report.energy));
  ratio.canonicalize();
  report.ratio = ratio;
  return report;
}

}  // namespace rigidlab
