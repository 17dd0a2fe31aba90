#include <rigidlab/colour.hpp>

#include <rigidlab/errors.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace rigidlab {

namespace {

constexpr double kQuantum = 1e-9;

long long quantise(double value) { return std::llround(value / kQuantum); }

Q cross2(const VecQ& a, const VecQ& b) { return a[0] * b[1] - a[1] * b[0]; }

void check_dim(const Norm& n, std::size_t dim) {
  if (n.kind == Norm::Kind::polygonal && dim != 2)
    throw UsageError("polygonal norms are planar; got a vector of dimension " +
                     std::to_string(dim));
  if (dim == 0) throw UsageError("norms need at least one coordinate");
}

std::vector<double> fdiff(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return d;
}

// Distinct distances from P[x] into the sub-multiset of P given by indices,
// as exact rational keys when possible and quantised floats otherwise.
long long count_pinned(const Norm& n, const PointSet& P, const std::vector<int>& subset,
                       int x) {
  if (P.exact && norm_exact(n)) {
    std::set<Q> keys;
    for (int j : subset) keys.insert(distance_key(n, P.points[x], P.points[j]));
    return static_cast<long long>(keys.size());
  }
  std::set<long long> keys;
  for (int j : subset)
    keys.insert(quantise(norm_value(n, fdiff(P.fpoints[x], P.fpoints[j]))));
  return static_cast<long long>(keys.size());
}

std::vector<int> all_indices(int n) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

void check_complete_positional(const Hypergraph& g, const EdgeColouring& colouring) {
  if (g.k != 2) throw UsageError("colour lemma expects a 2-uniform graph");
  const Hypergraph complete = complete_graph(g.vertex_count);
  if (g.edges != complete.edges)
    throw UsageError("colour lemma expects the complete graph on " +
                     std::to_string(g.vertex_count) +
                     " vertices with lexicographic edges");
  if (static_cast<int>(colouring.colour_of.size()) != g.edge_count())
    throw UsageError("colouring has " + std::to_string(colouring.colour_of.size()) +
                     " entries for " + std::to_string(g.edge_count()) + " edges");
}

// The lemma hypothesis, verified exhaustively: every vertex subset of every
// colour class spans at most f(m) edges of that class, m the subset size.
bool hypothesis_holds(const Hypergraph& g, const EdgeColouring& colouring,
                      const ColourBoundFunctions& bounds, int* violating_colour) {
  std::map<int, std::vector<int>> classes;  // colour -> edge indices
  for (int e = 0; e < g.edge_count(); ++e) classes[colouring.colour_of[e]].push_back(e);
  for (const auto& [colour, edges] : classes) {
    std::vector<int> touched;
    for (int e : edges) {
      touched.push_back(g.edges[e][0]);
      touched.push_back(g.edges[e][1]);
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    const int nc = static_cast<int>(touched.size());
    if (nc > 20)
      throw BudgetError("exhaustive hypothesis check needs 2^" + std::to_string(nc) +
                        " subsets for one colour class; limit is 2^20");
    std::vector<int> position(g.vertex_count, -1);
    for (int i = 0; i < nc; ++i) position[touched[i]] = i;
    for (std::uint32_t mask = 1; mask < (1u << nc); ++mask) {
      const int m = std::popcount(mask);
      if (m < 2) continue;
      int inside = 0;
      for (int e : edges) {
        const int a = position[g.edges[e][0]];
        const int b = position[g.edges[e][1]];
        if ((mask >> a & 1u) && (mask >> b & 1u)) ++inside;
      }
      if (static_cast<double>(inside) > bounds.f(static_cast<double>(m)) + 1e-9) {
        if (violating_colour) *violating_colour = colour;
        return false;
      }
    }
  }
  return true;
}

}  // namespace

Norm parse_norm(std::string_view spec) {
  Norm n;
  if (spec == "euclid" || spec == "l2") {
    n.kind = Norm::Kind::euclid;
    n.id = "euclid";
    return n;
  }
  if (spec == "linf") {
    n.kind = Norm::Kind::linf;
    n.id = "linf";
    return n;
  }
  if (spec.rfind("lp:", 0) == 0) {
    const std::string body(spec.substr(3));
    double p = 0.0;
    std::size_t used = 0;
    try {
      p = std::stod(body, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse l_p exponent in '" + std::string(spec) + "'");
    }
    if (used != body.size())
      throw UsageError("cannot parse l_p exponent in '" + std::string(spec) + "'");
    if (!(p >= 1.0))
      throw UsageError("l_p norms need p >= 1; got " + body);
    if (p == 2.0) return parse_norm("euclid");
    n.kind = Norm::Kind::lp;
    n.p = p;
    n.id = "lp:" + body;
    return n;
  }
  throw UsageError("unknown norm '" + std::string(spec) +
                   "' (expected euclid, l2, linf, or lp:<p>)");
}

Norm make_polygonal_norm(std::vector<VecQ> vertices) {
  const int m = static_cast<int>(vertices.size());
  if (m < 4 || m % 2 != 0)
    throw UsageError("polygonal unit balls need an even number (>= 4) of vertices; got " +
                     std::to_string(m));
  std::set<VecQ, VecQLess> seen;
  for (const VecQ& v : vertices) {
    if (v.size() != 2) throw UsageError("polygon vertices must be planar");
    if (!seen.insert(v).second) throw UsageError("polygon has a repeated vertex");
  }
  for (const VecQ& v : vertices) {
    const VecQ neg = {-v[0], -v[1]};
    if (seen.find(neg) == seen.end())
      throw UsageError("polygon is not centrally symmetric: missing the antipode of (" +
                       q_to_string(v[0]) + ", " + q_to_string(v[1]) + ")");
  }
  for (int i = 0; i < m; ++i) {
    // Positive cross products with the origin make the polygon star-shaped
    // about the origin and counterclockwise; positive turn cross products
    // make it strictly convex.
    const VecQ& a = vertices[i];
    const VecQ& b = vertices[(i + 1) % m];
    const VecQ& c = vertices[(i + 2) % m];
    if (q_sign(cross2(a, b)) <= 0)
      throw UsageError("polygon vertices must wind counterclockwise around an interior origin");
    const VecQ ab = {b[0] - a[0], b[1] - a[1]};
    const VecQ bc = {c[0] - b[0], c[1] - b[1]};
    if (q_sign(cross2(ab, bc)) <= 0)
      throw UsageError("polygon must be strictly convex");
  }
  Norm n;
  n.kind = Norm::Kind::polygonal;
  n.id = "polygonal:" + std::to_string(m);
  n.facets.reserve(m);
  for (int i = 0; i < m; ++i) {
    // The edge (u, w) lies on the line a . x = 1; solve the 2x2 system.
    const VecQ& u = vertices[i];
    const VecQ& w = vertices[(i + 1) % m];
    const Q det = cross2(u, w);
    VecQ a(2);
    a[0] = (w[1] - u[1]) / det;
    a[1] = (u[0] - w[0]) / det;
    n.facets.push_back(std::move(a));
  }
  n.polygon = std::move(vertices);
  return n;
}

double norm_value(const Norm& n, const std::vector<double>& v) {
  check_dim(n, v.size());
  switch (n.kind) {
    case Norm::Kind::euclid: {
      double s = 0.0;
      for (double x : v) s += x * x;
      return std::sqrt(s);
    }
    case Norm::Kind::lp: {
      double s = 0.0;
      for (double x : v) s += std::pow(std::abs(x), n.p);
      return std::pow(s, 1.0 / n.p);
    }
    case Norm::Kind::linf: {
      double s = 0.0;
      for (double x : v) s = std::max(s, std::abs(x));
      return s;
    }
    case Norm::Kind::polygonal: {
      double s = 0.0;
      for (const VecQ& a : n.facets)
        s = std::max(s, std::abs(q_to_double(a[0]) * v[0] + q_to_double(a[1]) * v[1]));
      return s;
    }
  }
  throw UsageError("unhandled norm kind");
}

bool norm_exact(const Norm& n) {
  if (n.kind == Norm::Kind::lp) return n.p == std::floor(n.p);
  return true;
}

Q distance_key(const Norm& n, const VecQ& x, const VecQ& y) {
  if (x.size() != y.size())
    throw UsageError("distance between vectors of different dimensions");
  check_dim(n, x.size());
  VecQ d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  switch (n.kind) {
    case Norm::Kind::euclid: {
      Q s = 0;
      for (const Q& c : d) s += c * c;
      return s;
    }
    case Norm::Kind::lp: {
      if (!norm_exact(n))
        throw UsageError("l_p with non-integer p has no exact distance key");
      Q s = 0;
      for (const Q& c : d) s += q_pow(q_abs(c), static_cast<unsigned long>(n.p));
      return s;
    }
    case Norm::Kind::linf: {
      Q s = 0;
      for (const Q& c : d) s = std::max(s, q_abs(c));
      return s;
    }
    case Norm::Kind::polygonal: {
      Q s = 0;
      for (const VecQ& a : n.facets) s = std::max(s, q_abs(a[0] * d[0] + a[1] * d[1]));
      return s;
    }
  }
  throw UsageError("unhandled norm kind");
}

long long pinned_distances(const Norm& n, const PointSet& P, int x_index) {
  if (x_index < 0 || x_index >= P.size())
    throw UsageError("pin index " + std::to_string(x_index) + " out of range for " +
                     std::to_string(P.size()) + " points");
  return count_pinned(n, P, all_indices(P.size()), x_index);
}

long long pinned_distances(const Norm& n, const PointSet& P, const VecQ& x) {
  if (!P.exact)
    throw UsageError("float point sets identify pins by index, not by coordinates");
  for (int i = 0; i < P.size(); ++i)
    if (compare(P.points[i], x) == 0) return pinned_distances(n, P, i);
  std::ostringstream msg;
  msg << "pin (";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) msg << ", ";
    msg << q_to_string(x[i]);
  }
  msg << ") is not a member of the point set";
  throw UsageError(msg.str());
}

DistanceColouring distance_colouring(const Norm& n, const PointSet& P) {
  DistanceColouring out;
  out.graph = complete_graph(P.size());
  out.quantised = !(P.exact && norm_exact(n));
  std::map<Q, int> exact_class;
  std::map<long long, int> float_class;
  out.colouring.colour_of.reserve(out.graph.edge_count());
  for (const auto& edge : out.graph.edges) {
    int colour = 0;
    if (!out.quantised) {
      const Q key = distance_key(n, P.points[edge[0]], P.points[edge[1]]);
      auto [it, fresh] = exact_class.emplace(key, static_cast<int>(exact_class.size()));
      colour = it->second;
      (void)fresh;
    } else {
      const long long key =
          quantise(norm_value(n, fdiff(P.fpoints[edge[0]], P.fpoints[edge[1]])));
      auto [it, fresh] = float_class.emplace(key, static_cast<int>(float_class.size()));
      colour = it->second;
      (void)fresh;
    }
    out.colouring.colour_of.push_back(colour);
  }
  out.colour_count =
      out.quantised ? static_cast<long long>(float_class.size())
                    : static_cast<long long>(exact_class.size());
  return out;
}

long long norm_census(const Norm& n, const Hypergraph& g, const PointSet& P,
                      long long budget) {
  if (g.k != 2) throw UsageError("norm census expects a 2-uniform graph");
  if (g.vertex_count < 1) throw UsageError("norm census needs at least one vertex");
  check_dim(n, static_cast<std::size_t>(P.d));
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(P.size()),
                static_cast<unsigned long>(g.vertex_count));
  if (total > static_cast<long>(budget))
    throw BudgetError("norm census enumerates " + total.get_str() +
                      " tuples and requires budget " + total.get_str() + ", budget is " +
                      std::to_string(budget));
  const int v = g.vertex_count;
  const int npts = P.size();
  const bool exact = P.exact && norm_exact(n);
  std::set<VecQ, VecQLess> exact_images;
  std::set<std::vector<long long>> float_images;
  std::vector<int> tuple(v, 0);
  while (true) {
    if (exact) {
      VecQ image;
      image.reserve(g.edges.size());
      for (const auto& edge : g.edges)
        image.push_back(distance_key(n, P.points[tuple[edge[0]]], P.points[tuple[edge[1]]]));
      exact_images.insert(std::move(image));
    } else {
      std::vector<long long> image;
      image.reserve(g.edges.size());
      for (const auto& edge : g.edges)
        image.push_back(
            quantise(norm_value(n, fdiff(P.fpoints[tuple[edge[0]]], P.fpoints[tuple[edge[1]]]))));
      float_images.insert(std::move(image));
    }
    int pos = v - 1;
    while (pos >= 0 && tuple[pos] == npts - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return exact ? static_cast<long long>(exact_images.size())
               : static_cast<long long>(float_images.size());
}

ColourBoundFunctions prop_log_bounds(int d) {
  if (d < 2) throw UsageError("log bounds need dimension d >= 2");
  ColourBoundFunctions b;
  b.id = "log(d=" + std::to_string(d) + ")";
  b.alpha = 1.0;
  const double dd = static_cast<double>(d);
  b.f = [dd](double t) { return 0.5 * dd * t * std::log(t); };
  b.f_inv = [dd](double m) {
    // Solve (d/2) t log t = m on (1, infinity) by bisection.
    if (m <= 0.0) return 1.0;
    const double target = 2.0 * m / dd;
    double lo = 1.0;
    double hi = 2.0;
    while (hi * std::log(hi) < target) hi *= 2.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (mid * std::log(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  b.g = [dd](double t) { return 2.0 * t / (dd * std::log(dd * t + 1.0)); };
  return b;
}

ColourBoundFunctions prop_power_bounds(double C, double delta) {
  if (!(C > 0.0)) throw UsageError("power bounds need C > 0");
  if (!(delta > 0.0)) throw UsageError("power bounds need delta > 0");
  ColourBoundFunctions b;
  std::ostringstream id;
  id << "power(C=" << C << ",delta=" << delta << ")";
  b.id = id.str();
  b.alpha = 0.0;
  const double e = 1.0 + delta;
  b.f = [C, e](double m) { return C * std::pow(m, e); };
  b.f_inv = [C, e](double m) { return std::pow(m / C, 1.0 / e); };
  b.g = [C, e](double m) { return std::pow(C, -1.0 / e) * std::pow(m, 1.0 / e); };
  return b;
}

ClaimsReport verify_bound_claims(const ColourBoundFunctions& b, std::uint64_t seed,
                                 int inverse_samples, int pair_samples) {
  ClaimsReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> draw_m(2, 1000000);
  for (int i = 0; i < inverse_samples; ++i) {
    // The first draws sweep the small integers where the margin is tightest.
    const double m = (i < 50) ? static_cast<double>(i + 2) : static_cast<double>(draw_m(rng));
    const double fi = b.f_inv(m);
    const double gm = b.g(m);
    const double tol = 1e-9 * std::max(1.0, std::abs(gm));
    if (fi < gm - tol) rep.inverse_dominates = false;
    if (fi <= gm + tol) rep.strictly = false;
    ++rep.inverse_samples;
  }
  std::uniform_real_distribution<double> draw_pair(1.0, 1000000.0);
  for (int i = 0; i < pair_samples; ++i) {
    const double a = draw_pair(rng);
    const double c = draw_pair(rng);
    const double lhs = b.g(a) + b.g(c);
    const double rhs = b.g(a + c);
    if (lhs < rhs - 1e-9 * std::max(1.0, std::abs(rhs))) rep.subadditive = false;
    ++rep.pair_samples;
  }
  return rep;
}

ColourLemmaReport check_colour_lemma(const Hypergraph& g, const EdgeColouring& colouring,
                                     const ColourBoundFunctions& bounds) {
  check_complete_positional(g, colouring);
  ColourLemmaReport rep;
  int violating = -1;
  rep.hypothesis_ok = hypothesis_holds(g, colouring, bounds, &violating);
  rep.violating_colour = violating;
  const double n = static_cast<double>(g.vertex_count);
  rep.bound = bounds.g(n * (n - 1.0) / 2.0) / n;
  std::vector<std::set<int>> touched(g.vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    touched[g.edges[e][0]].insert(colouring.colour_of[e]);
    touched[g.edges[e][1]].insert(colouring.colour_of[e]);
  }
  for (int v = 0; v < g.vertex_count; ++v) {
    const int degree = static_cast<int>(touched[v].size());
    if (degree > rep.max_colour_degree) {
      rep.max_colour_degree = degree;
      rep.argmax_vertex = v;
    }
  }
  rep.conclusion_holds = static_cast<double>(rep.max_colour_degree) >= rep.bound - 1e-12;
  return rep;
}

EdgeColouring random_hypothesis_colouring(int n, const ColourBoundFunctions& bounds,
                                          std::uint64_t seed) {
  if (n < 2) throw UsageError("random colourings need at least two vertices");
  const Hypergraph g = complete_graph(n);
  const int edges = g.edge_count();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw_colours(std::min(n, edges), edges);
  EdgeColouring colouring;
  for (int attempt = 0; attempt < 50; ++attempt) {
    const int colours = draw_colours(rng);
    std::uniform_int_distribution<int> draw(0, colours - 1);
    colouring.colour_of.resize(edges);
    for (int e = 0; e < edges; ++e) colouring.colour_of[e] = draw(rng);
    if (hypothesis_holds(g, colouring, bounds, nullptr)) return colouring;
  }
  // The rainbow colouring always meets the catalogued bounds: each class is a
  // single edge.
  for (int e = 0; e < edges; ++e) colouring.colour_of[e] = e;
  return colouring;
}

PinReport rich_pin_set(const Norm& n, const PointSet& P,
                       const std::function<double(double)>& H) {
  const int size = P.size();
  const std::vector<int> everyone = all_indices(size);
  std::vector<long long> count(size);
  for (int i = 0; i < size; ++i) count[i] = count_pinned(n, P, everyone, i);
  std::vector<int> order = everyone;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (count[a] != count[b]) return count[a] > count[b];
    return a < b;
  });
  PinReport rep;
  const int kept = (size + 1) / 2;
  rep.order.assign(order.begin(), order.begin() + kept);
  rep.counts.reserve(kept);
  for (int i : rep.order) rep.counts.push_back(count[i]);
  rep.threshold = H(static_cast<double>(size) / 2.0);
  rep.hypothesis_ok =
      static_cast<double>(rep.counts.back()) >= rep.threshold - 1e-12;
  return rep;
}

TreeCertificate tree_certificate(const Norm& n, const Hypergraph& tree, int root,
                                 const PointSet& P) {
  if (root < 0 || root >= tree.vertex_count)
    throw UsageError("root " + std::to_string(root) + " out of range for " +
                     std::to_string(tree.vertex_count) + " vertices");
  const std::vector<std::vector<int>> levels = depth_partition(tree, root);
  const int t = static_cast<int>(levels.size()) - 1;
  TreeCertificate cert;
  if (t == 0) return cert;
  if (t >= 62 || P.size() < (1LL << t))
    throw UsageError("a depth-" + std::to_string(t) + " tree needs at least " +
                     std::to_string(1LL << t) + " points for the halving chain; got " +
                     std::to_string(P.size()));
  cert.level_counts.assign(t, 0);
  cert.level_sizes.assign(t, 0);
  cert.pins.assign(t, -1);
  // Halve P_t = P down to P_0, recording at step i the minimal pin count of
  // the kept half against the previous set.
  std::vector<int> current = all_indices(P.size());
  for (int i = t - 1; i >= 0; --i) {
    std::vector<long long> count(current.size());
    for (std::size_t j = 0; j < current.size(); ++j)
      count[j] = count_pinned(n, P, current, current[j]);
    std::vector<std::size_t> order(current.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (count[a] != count[b]) return count[a] > count[b];
      return current[a] < current[b];
    });
    const std::size_t kept = (current.size() + 1) / 2;
    long long minimum = count[order[0]];
    int pin = current[order[0]];
    std::vector<int> next;
    next.reserve(kept);
    for (std::size_t j = 0; j < kept; ++j) {
      next.push_back(current[order[j]]);
      if (count[order[j]] < minimum) {
        minimum = count[order[j]];
        pin = current[order[j]];
      }
    }
    cert.level_counts[i] = minimum;
    cert.pins[i] = pin;
    cert.level_sizes[i] = static_cast<int>(levels[i + 1].size());
    current = std::move(next);
  }
  for (int i = 0; i < t; ++i)
    for (int rep = 0; rep < cert.level_sizes[i]; ++rep)
      cert.certificate *= cert.level_counts[i];
  return cert;
}

}  // namespace rigidlab
