#include "cli_lib.hpp"

#include <rigidlab/census.hpp>
#include <rigidlab/colour.hpp>
#include <rigidlab/errors.hpp>
#include <rigidlab/experiment.hpp>
#include <rigidlab/hypergraph.hpp>
#include <rigidlab/io.hpp>
#include <rigidlab/metric.hpp>
#include <rigidlab/pointset.hpp>
#include <rigidlab/rigidity.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <ctime>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rigidlab::cli {

namespace {

using nlohmann::json;

std::string iso_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join_command(const std::vector<std::string>& args) {
  std::string cmd = "rigidlab";
  for (const std::string& a : args) {
    cmd += ' ';
    if (a.find_first_of(" \t\"") != std::string::npos) {
      cmd += '"';
      for (char c : a) {
        if (c == '"') cmd += '\\';
        cmd += c;
      }
      cmd += '"';
    } else {
      cmd += a;
    }
  }
  return cmd;
}

std::vector<long long> parse_ll_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": cannot parse integer '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

// name(arg, ...) with integer arguments.
std::pair<std::string, std::vector<long long>> parse_call(const std::string& spec,
                                                          const std::string& what) {
  const std::size_t open = spec.find('(');
  if (open == std::string::npos || spec.back() != ')')
    throw UsageError(what + ": expected name(args); got '" + spec + "'");
  const std::string name = spec.substr(0, open);
  const std::string inside = spec.substr(open + 1, spec.size() - open - 2);
  std::vector<long long> args;
  if (!inside.empty()) args = parse_ll_list(inside, what + " '" + spec + "'");
  return {name, args};
}

void expect_arity(const std::vector<long long>& args, std::size_t arity,
                  const std::string& spec) {
  if (args.size() != arity)
    throw UsageError("generator '" + spec + "' takes " + std::to_string(arity) +
                     " argument(s), got " + std::to_string(args.size()));
}

PointSet points_from_spec(const std::string& spec) {
  const auto [name, args] = parse_call(spec, "point generator");
  if (name == "grid") {
    expect_arity(args, 2, spec);
    return grid(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  if (name == "scaled_grid") {
    expect_arity(args, 1, spec);
    return scaled_grid(static_cast<int>(args[0]));
  }
  if (name == "line") {
    expect_arity(args, 1, spec);
    return line(static_cast<int>(args[0]));
  }
  if (name == "circle") {
    expect_arity(args, 1, spec);
    return circle(static_cast<int>(args[0]));
  }
  if (name == "circle_rat") {
    expect_arity(args, 1, spec);
    return circle_rat(static_cast<int>(args[0]));
  }
  if (name == "random") {
    expect_arity(args, 4, spec);
    return random_generic(static_cast<int>(args[0]), static_cast<int>(args[1]),
                          static_cast<long>(args[2]), static_cast<std::uint64_t>(args[3]));
  }
  throw UsageError("unknown point generator '" + name +
                   "' (expected grid, scaled_grid, line, circle, circle_rat, random)");
}

Hypergraph graph_from_spec(const std::string& spec) {
  const auto [name, args] = parse_call(spec, "graph generator");
  if (name == "complete") {
    expect_arity(args, 1, spec);
    return complete_graph(static_cast<int>(args[0]));
  }
  if (name == "path") {
    expect_arity(args, 1, spec);
    return path_graph(static_cast<int>(args[0]));
  }
  if (name == "cycle") {
    expect_arity(args, 1, spec);
    return cycle_graph(static_cast<int>(args[0]));
  }
  if (name == "star") {
    expect_arity(args, 1, spec);
    return star_graph(static_cast<int>(args[0]));
  }
  if (name == "complete_loops") {
    expect_arity(args, 1, spec);
    return complete_with_loops(static_cast<int>(args[0]));
  }
  if (name == "complete_uniform") {
    expect_arity(args, 2, spec);
    return complete_uniform_with_repeats(static_cast<int>(args[0]), static_cast<int>(args[1]));
  }
  throw UsageError("unknown graph generator '" + name +
                   "' (expected complete, path, cycle, star, complete_loops, "
                   "complete_uniform)");
}

ColourBoundFunctions bounds_from_spec(const std::string& spec) {
  if (spec.rfind("log:", 0) == 0) {
    try {
      return prop_log_bounds(std::stoi(spec.substr(4)));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("cannot parse bounds spec '" + spec + "'");
    }
  }
  if (spec.rfind("power:", 0) == 0) {
    const std::string body = spec.substr(6);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos)
      throw UsageError("power bounds need 'power:C,delta'; got '" + spec + "'");
    try {
      return prop_power_bounds(std::stod(body.substr(0, comma)),
                               std::stod(body.substr(comma + 1)));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("cannot parse bounds spec '" + spec + "'");
    }
  }
  throw UsageError("unknown bounds spec '" + spec + "' (expected log:<d> or power:<C>,<delta>)");
}

Norm norm_from_spec(const std::string& spec) {
  if (spec.rfind("poly:", 0) == 0) {
    const PointSet ball = load_pointset(spec.substr(5));
    if (!ball.exact) throw UsageError("polygonal norm files must hold exact vertices");
    return make_polygonal_norm(ball.points);
  }
  return parse_norm(spec);
}

json fit_to_json(const ExponentFit& fit) {
  json j;
  j["sizes"] = fit.sizes;
  j["counts"] = fit.counts;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["residual"] = fit.residual;
  return j;
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const json& value : j) flatten(value, prefix + "[" + std::to_string(i++) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

// Shared state for the single subcommand that runs.
struct Session {
  // Inputs.
  std::string metric_id = "euclid_sq";
  std::string group_id;
  std::string points_file;
  std::string points_spec;
  std::string graph_file;
  std::string graph_spec;
  std::string norm_spec = "euclid";
  std::string bounds_spec = "log:2";
  std::string filter = "all";
  std::string format = "json";
  std::string out_path;
  std::string spec;        // gen
  std::string sizes_list;  // fit
  std::string counts_list;
  int d = 2;
  int n = 2;
  int k = 3;
  int t = 2;
  int root = 0;
  int v_size = 1;
  int degree = 1;
  int trials = 5;
  int threads = 0;
  int random_n = 0;
  long long budget = 100000000;
  long long max_subsets = 200000;
  double quantum = 1e-9;
  double threshold = 0.01;
  double h_linear = 0.0;
  std::uint64_t seed = 7;
  bool generic = false;
  bool approx = false;

  // Outputs.
  std::string command;
  std::ostream* out = nullptr;
  int exit_code = 0;

  PointSet points() const {
    if (!points_file.empty() && !points_spec.empty())
      throw UsageError("give either --points or --gen, not both");
    if (!points_file.empty()) return load_pointset(points_file);
    if (!points_spec.empty()) return points_from_spec(points_spec);
    throw UsageError("this command needs a point set: --points <file> or --gen <spec>");
  }

  Hypergraph graph() const {
    if (!graph_file.empty() && !graph_spec.empty())
      throw UsageError("give either --graph or --gen-graph, not both");
    if (!graph_file.empty()) return load_hypergraph(graph_file);
    if (!graph_spec.empty()) return graph_from_spec(graph_spec);
    throw UsageError("this command needs a graph: --graph <file> or --gen-graph <spec>");
  }

  void emit_raw(const std::string& text) const {
    if (!out_path.empty())
      write_text_file(out_path, text);
    else
      *out << text;
  }

  void emit(const json& report) const {
    json envelope;
    envelope["command"] = command;
    envelope["timestamp"] = iso_now();
    envelope["report"] = report;
    if (format == "json") {
      emit_raw(envelope.dump(2) + "\n");
      return;
    }
    if (format == "csv") {
      std::vector<std::pair<std::string, std::string>> rows;
      flatten(envelope, "", rows);
      std::string text = csv_line({"key", "value"});
      for (const auto& [key, value] : rows) text += csv_line({key, value});
      emit_raw(text);
      return;
    }
    throw UsageError("unknown format '" + format + "' (expected json or csv)");
  }
};

void add_output_options(CLI::App* sub, Session& s) {
  sub->add_option("--format", s.format, "Report format: json or csv");
  sub->add_option("--out", s.out_path, "Write the report to this file instead of stdout");
}

void add_points_options(CLI::App* sub, Session& s) {
  sub->add_option("--points", s.points_file, "Point-set JSON file");
  sub->add_option("--gen", s.points_spec,
                  "Point generator: grid(m,d), scaled_grid(n), line(n), circle(n), "
                  "circle_rat(n), random(d,n,bound,seed)");
}

void add_graph_options(CLI::App* sub, Session& s) {
  sub->add_option("--graph", s.graph_file, "Graph JSON file");
  sub->add_option("--gen-graph", s.graph_spec,
                  "Graph generator: complete(n), path(n), cycle(n), star(leaves), "
                  "complete_loops(n), complete_uniform(n,k)");
}

void build_app(CLI::App& app, Session& s) {
  app.require_subcommand(1);

  CLI::App* rigid = app.add_subcommand(
      "rigid", "Decide infinitesimal/generic rigidity of a graph under a metric");
  rigid->add_option("--metric", s.metric_id, "Metric id (e.g. euclid_sq, lp:4, dot)");
  rigid->add_option("--d", s.d, "Ambient dimension");
  add_graph_options(rigid, s);
  add_points_options(rigid, s);
  rigid->add_flag("--generic", s.generic, "Sample generic realisations instead of --points");
  rigid->add_option("--trials", s.trials, "Generic sampling trials");
  rigid->add_option("--seed", s.seed, "Random seed");
  rigid->add_flag("--approx", s.approx, "Float SVD mode for the realisation verdict");
  add_output_options(rigid, s);
  rigid->callback([&s] {
    const Metric m = parse_metric(s.metric_id, s.d);
    const Hypergraph g = s.graph();
    json rep;
    rep["metric"] = m.id;
    rep["d"] = s.d;
    if (s.generic || (s.points_file.empty() && s.points_spec.empty())) {
      const GenericVerdict v = is_g_rigid(m, g, s.trials, s.seed);
      rep["mode"] = "generic";
      rep["rigid"] = v.rigid;
      rep["trials_used"] = v.trials_used;
      rep["seed"] = v.seed;
      rep["generic_rank"] = generic_rank(m, g, s.seed);
    } else {
      const PointSet P = s.points();
      if (P.size() != g.vertex_count)
        throw UsageError("realisation has " + std::to_string(P.size()) + " points for " +
                         std::to_string(g.vertex_count) + " vertices");
      RigidityVerdict v;
      if (s.approx) {
        v = is_infinitesimally_rigid_approx(m, g, P.fpoints);
      } else {
        if (!P.exact) throw UsageError("exact mode needs exact points (try --approx)");
        v = is_infinitesimally_rigid(m, g, Realisation{P.d, P.points});
      }
      rep["mode"] = "realisation";
      rep["rank"] = v.rank;
      rep["kernel_dim"] = v.kernel_dim;
      rep["trivial_dim"] = v.trivial_dim;
      rep["trivial_contained"] = v.trivial_contained;
      rep["infinitesimally_rigid"] = v.infinitesimally_rigid;
      rep["affinely_spanning"] = v.affinely_spanning;
      rep["approximate"] = v.approximate;
      if (P.exact) {
        rep["regular"] = is_g_regular(m, g, Realisation{P.d, P.points});
        rep["generic_rank"] = generic_rank(m, g, s.seed);
      }
    }
    s.emit(rep);
  });

  CLI::App* census_cmd =
      app.add_subcommand("census", "Enumerate the measurement image f_{g,G}(P^V)");
  census_cmd->add_option("--metric", s.metric_id, "Metric id");
  census_cmd->add_option("--d", s.d, "Ambient dimension");
  add_graph_options(census_cmd, s);
  add_points_options(census_cmd, s);
  census_cmd->add_option("--filter", s.filter, "all, injective, spanning, or regular");
  census_cmd->add_option("--budget", s.budget, "Cap on |P|^|V| assignments");
  census_cmd->add_option("--threads", s.threads,
                         "Worker threads (0 honours RIGIDLAB_THREADS)");
  census_cmd->add_option("--quantum", s.quantum, "Float-mode key grid");
  add_output_options(census_cmd, s);
  census_cmd->callback([&s] {
    const Metric m = parse_metric(s.metric_id, s.d);
    const Hypergraph g = s.graph();
    const PointSet P = s.points();
    CensusOptions opts;
    opts.filter = parse_filter(s.filter);
    opts.budget = s.budget;
    opts.threads = s.threads;
    opts.quantum = s.quantum;
    const CensusReport r = census(m, g, P, opts);
    json rep;
    rep["metric"] = m.id;
    rep["distinct_count"] = r.distinct_count;
    rep["fibre_sizes"] = r.fibre_sizes;
    rep["enumerated"] = r.enumerated;
    rep["filter"] = filter_name(r.filter);
    rep["quantised"] = r.quantised;
    rep["points"] = P.provenance;
    s.emit(rep);
  });

  CLI::App* energy_cmd =
      app.add_subcommand("energy", "Isometry energy of a point set: congruent ordered pairs");
  energy_cmd->add_option("--group", s.group_id,
                         "Transform group: se2, e2, euclid, pseudo, or a metric id");
  energy_cmd->add_option("--metric", s.metric_id, "Metric whose isometry group to use");
  energy_cmd->add_option("--d", s.d, "Ambient dimension");
  energy_cmd->add_option("--v-size", s.v_size, "Tuple length |V|");
  add_points_options(energy_cmd, s);
  energy_cmd->add_option("--budget", s.budget, "Enumeration cap");
  add_output_options(energy_cmd, s);
  energy_cmd->callback([&s] {
    const PointSet P = s.points();
    EnergyReport r;
    json rep;
    if (!s.group_id.empty()) {
      const TransformGroup G = parse_group(s.group_id, P.d);
      r = energy(G, s.v_size, P, s.budget);
      rep["group"] = G.id;
    } else {
      const Metric m = parse_metric(s.metric_id, P.d);
      r = energy(m, s.v_size, P, s.budget);
      rep["group"] = m.id;
    }
    rep["v_size"] = s.v_size;
    rep["energy"] = r.energy;
    rep["method"] = r.method;
    rep["fallback_used"] = r.fallback_used;
    s.emit(rep);
  });

  CLI::App* rich = app.add_subcommand(
      "rich", "Count t-rich transformation classes of a planar point set");
  rich->add_option("--group", s.group_id, "se2, e2, or pseudo")->required();
  rich->add_option("--t", s.t, "Richness threshold (>= 2)");
  add_points_options(rich, s);
  add_output_options(rich, s);
  rich->callback([&s] {
    const PointSet P = s.points();
    const TransformGroup G = parse_group(s.group_id, P.d);
    const RichReport r = rich_transformations(G, P, s.t);
    json rep;
    rep["group"] = G.id;
    rep["t"] = r.t;
    rep["class_count"] = r.class_count;
    rep["diagonal_warning"] = r.diagonal_warning;
    s.emit(rep);
  });

  CLI::App* gram = app.add_subcommand("gram", "Count distinct n x n Gram matrices over P");
  gram->add_option("--n", s.n, "Matrix size");
  add_points_options(gram, s);
  gram->add_option("--budget", s.budget, "Enumeration cap");
  add_output_options(gram, s);
  gram->callback([&s] {
    const PointSet P = s.points();
    json rep;
    rep["n"] = s.n;
    rep["count"] = gram_census(P, s.n, s.budget);
    s.emit(rep);
  });

  CLI::App* tensor =
      app.add_subcommand("tensor", "Count distinct order-k symmetric tensors over P");
  tensor->add_option("--n", s.n, "Tensor side length");
  tensor->add_option("--k", s.k, "Tensor order (>= 3)");
  add_points_options(tensor, s);
  tensor->add_option("--budget", s.budget, "Enumeration cap");
  add_output_options(tensor, s);
  tensor->callback([&s] {
    const PointSet P = s.points();
    json rep;
    rep["n"] = s.n;
    rep["k"] = s.k;
    rep["count"] = tensor_census(P, s.n, s.k, s.budget);
    s.emit(rep);
  });

  CLI::App* gen = app.add_subcommand("gen", "Generate a point set and write its JSON");
  gen->add_option("--spec", s.spec, "Generator spec (see --gen elsewhere)")->required();
  gen->add_option("--out", s.out_path, "Output file (default stdout)");
  gen->callback([&s] { s.emit_raw(pointset_to_json(points_from_spec(s.spec))); });

  CLI::App* audit = app.add_subcommand(
      "audit", "Audit a planar point set for algebraic-curve richness");
  add_points_options(audit, s);
  audit->add_option("--degree", s.degree, "Maximum curve degree");
  audit->add_option("--threshold", s.threshold, "Allowed incidence fraction");
  audit->add_option("--max-subsets", s.max_subsets, "Subset scan cap before sampling");
  audit->add_option("--seed", s.seed, "Sampling seed");
  add_output_options(audit, s);
  audit->callback([&s] {
    const PointSet P = s.points();
    const CurveAuditReport r =
        curve_richness_audit(P, s.degree, s.threshold, s.max_subsets, s.seed);
    json rep;
    rep["degree"] = s.degree;
    rep["basis_size"] = r.basis_size;
    rep["subsets_scanned"] = r.subsets_scanned;
    rep["subsampled"] = r.subsampled;
    rep["max_incidence"] = r.max_incidence;
    rep["threshold"] = r.threshold;
    rep["hypothesis_holds"] = r.hypothesis_holds;
    s.emit(rep);
    if (!r.hypothesis_holds) s.exit_code = 4;
  });

  CLI::App* pin = app.add_subcommand(
      "pin", "Extract the rich half of a point set by pinned-distance counts");
  pin->add_option("--norm", s.norm_spec, "euclid, l2, linf, lp:<p>, or poly:<file.json>");
  add_points_options(pin, s);
  pin->add_option("--h-linear", s.h_linear,
                  "Require every kept pin to see at least c * (|P|/2) distances");
  add_output_options(pin, s);
  pin->callback([&s] {
    const PointSet P = s.points();
    const Norm n = norm_from_spec(s.norm_spec);
    const double c = s.h_linear;
    const PinReport r = rich_pin_set(n, P, [c](double m) { return c * m; });
    json rep;
    rep["norm"] = n.id;
    rep["order"] = r.order;
    rep["counts"] = r.counts;
    rep["threshold"] = r.threshold;
    rep["hypothesis_ok"] = r.hypothesis_ok;
    s.emit(rep);
    if (!r.hypothesis_ok) s.exit_code = 4;
  });

  CLI::App* lemma = app.add_subcommand(
      "colour-lemma", "Check the colouring-lemma hypothesis and conclusion");
  lemma->add_option("--norm", s.norm_spec, "Norm for distance colourings");
  add_points_options(lemma, s);
  lemma->add_option("--random-n", s.random_n,
                    "Instead of points: a hypothesis-sampled colouring of K_n");
  lemma->add_option("--seed", s.seed, "Sampling seed");
  lemma->add_option("--bounds", s.bounds_spec, "log:<d> or power:<C>,<delta>");
  add_output_options(lemma, s);
  lemma->callback([&s] {
    const ColourBoundFunctions bounds = bounds_from_spec(s.bounds_spec);
    Hypergraph g;
    EdgeColouring colouring;
    json rep;
    if (s.random_n > 0) {
      g = complete_graph(s.random_n);
      colouring = random_hypothesis_colouring(s.random_n, bounds, s.seed);
      rep["source"] = "random";
      rep["seed"] = s.seed;
    } else {
      const PointSet P = s.points();
      const DistanceColouring dc = distance_colouring(norm_from_spec(s.norm_spec), P);
      g = dc.graph;
      colouring = dc.colouring;
      rep["source"] = "distance";
      rep["norm"] = norm_from_spec(s.norm_spec).id;
      rep["colour_count"] = dc.colour_count;
      rep["quantised"] = dc.quantised;
    }
    const ColourLemmaReport r = check_colour_lemma(g, colouring, bounds);
    rep["bounds"] = bounds.id;
    rep["n"] = g.vertex_count;
    rep["hypothesis_ok"] = r.hypothesis_ok;
    rep["violating_colour"] = r.violating_colour;
    rep["bound"] = r.bound;
    rep["max_colour_degree"] = r.max_colour_degree;
    rep["argmax_vertex"] = r.argmax_vertex;
    rep["conclusion_holds"] = r.conclusion_holds;
    s.emit(rep);
    if (!r.hypothesis_ok) s.exit_code = 4;
  });

  CLI::App* cert = app.add_subcommand(
      "tree-cert", "Certified lower bound for a tree census under a norm");
  cert->add_option("--norm", s.norm_spec, "euclid, l2, linf, lp:<p>, or poly:<file.json>");
  add_graph_options(cert, s);
  cert->add_option("--root", s.root, "Root vertex of the tree");
  add_points_options(cert, s);
  add_output_options(cert, s);
  cert->callback([&s] {
    const PointSet P = s.points();
    const Norm n = norm_from_spec(s.norm_spec);
    const TreeCertificate r = tree_certificate(n, s.graph(), s.root, P);
    json rep;
    rep["norm"] = n.id;
    rep["root"] = s.root;
    rep["certificate"] = r.certificate;
    rep["level_counts"] = r.level_counts;
    rep["level_sizes"] = r.level_sizes;
    rep["pins"] = r.pins;
    s.emit(rep);
  });

  CLI::App* fit = app.add_subcommand("fit", "Least-squares exponent of count vs size");
  fit->add_option("--sizes", s.sizes_list, "Comma-separated sizes")->required();
  fit->add_option("--counts", s.counts_list, "Comma-separated counts")->required();
  add_output_options(fit, s);
  fit->callback([&s] {
    const ExponentFit f = fit_exponent(parse_ll_list(s.sizes_list, "--sizes"),
                                       parse_ll_list(s.counts_list, "--counts"));
    s.emit(fit_to_json(f));
  });

  CLI::App* nac = app.add_subcommand("nac", "Search for a NAC-colouring of a graph");
  add_graph_options(nac, s);
  add_output_options(nac, s);
  nac->callback([&s] {
    const Hypergraph g = s.graph();
    const std::optional<EdgeColouring> colouring = find_nac_colouring(g);
    json rep;
    rep["exists"] = colouring.has_value();
    if (colouring) {
      rep["colour_of"] = colouring->colour_of;
      rep["verified"] = is_nac_colouring(g, colouring->colour_of);
    }
    s.emit(rep);
  });

  CLI::App* zext = app.add_subcommand(
      "zero-ext", "Attach a new vertex to u and w (0-extension) and write the graph");
  add_graph_options(zext, s);
  zext->add_option("--u", s.n, "First neighbour of the new vertex")->required();
  zext->add_option("--w", s.k, "Second neighbour of the new vertex")->required();
  zext->add_option("--out", s.out_path, "Output file (default stdout)");
  zext->callback(
      [&s] { s.emit_raw(hypergraph_to_json(zero_extension(s.graph(), s.n, s.k))); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  s.command = join_command(args);
  s.out = &out;
  CLI::App app{"rigidlab: exact censuses, rigidity verdicts, and bound certificates"};
  app.name("rigidlab");
  build_app(app, s);
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("rigidlab");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    const int code = app.exit(e, out, sink);
    if (code == 0) return 0;
    err << sink.str();
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisError& e) {
    err << "hypothesis failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return s.exit_code;
}

}  // namespace rigidlab::cli
