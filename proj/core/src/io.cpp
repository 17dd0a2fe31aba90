#include <rigidlab/io.hpp>

#include <rigidlab/errors.hpp>
#include <rigidlab/rational.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rigidlab {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(what + ": invalid JSON: " + e.what());
  }
}

const json& require_key(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw UsageError(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw UsageError(what + ": missing key '" + key + "'");
  return *it;
}

int require_int(const json& j, const char* key, const std::string& what) {
  const json& v = require_key(j, key, what);
  if (!v.is_number_integer())
    throw UsageError(what + ": key '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Hypergraph hypergraph_from_json(const std::string& text) {
  const std::string what = "graph JSON";
  const json j = parse_json(text, what);
  const int k = require_int(j, "k", what);
  const int vertices = require_int(j, "vertices", what);
  const json& edges = require_key(j, "edges", what);
  if (!edges.is_array()) throw UsageError(what + ": key 'edges' must be an array");
  std::vector<std::vector<int>> parsed;
  parsed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& edge = edges[i];
    if (!edge.is_array())
      throw UsageError(what + ": key 'edges' entry " + std::to_string(i) +
                       " must be an array");
    std::vector<int> e;
    for (const json& v : edge) {
      if (!v.is_number_integer())
        throw UsageError(what + ": key 'edges' entry " + std::to_string(i) +
                         " must contain integers");
      e.push_back(v.get<int>());
    }
    parsed.push_back(std::move(e));
  }
  return make_hypergraph(k, vertices, std::move(parsed));
}

std::string hypergraph_to_json(const Hypergraph& g) {
  json j;
  j["k"] = g.k;
  j["vertices"] = g.vertex_count;
  j["edges"] = g.edges;
  j["simple"] = g.is_simple();
  return j.dump(2) + "\n";
}

PointSet pointset_from_json(const std::string& text) {
  const std::string what = "points JSON";
  const json j = parse_json(text, what);
  const int d = require_int(j, "d", what);
  bool exact = true;
  if (j.contains("exact")) {
    if (!j["exact"].is_boolean())
      throw UsageError(what + ": key 'exact' must be a boolean");
    exact = j["exact"].get<bool>();
  }
  std::string provenance = "file";
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string())
      throw UsageError(what + ": key 'provenance' must be a string");
    provenance = j["provenance"].get<std::string>();
  }
  const json& points = require_key(j, "points", what);
  if (!points.is_array() || points.empty())
    throw UsageError(what + ": key 'points' must be a non-empty array");
  if (exact) {
    std::vector<VecQ> parsed;
    parsed.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const json& row = points[i];
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        throw UsageError(what + ": key 'points' entry " + std::to_string(i) +
                         " must be an array of " + std::to_string(d) + " coordinates");
      VecQ p(d);
      for (int c = 0; c < d; ++c) {
        if (!row[c].is_string())
          throw UsageError(what + ": key 'points' entry " + std::to_string(i) +
                           " must hold rationals as strings (e.g. \"1/3\")");
        try {
          p[c] = q_parse(row[c].get<std::string>());
        } catch (const std::exception&) {
          throw UsageError(what + ": key 'points' entry " + std::to_string(i) +
                           " has an unparsable rational '" + row[c].get<std::string>() +
                           "'");
        }
      }
      parsed.push_back(std::move(p));
    }
    return make_pointset(d, std::move(parsed), provenance);
  }
  PointSet P;
  P.d = d;
  P.exact = false;
  P.provenance = provenance;
  P.fpoints.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const json& row = points[i];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw UsageError(what + ": key 'points' entry " + std::to_string(i) +
                       " must be an array of " + std::to_string(d) + " coordinates");
    std::vector<double> p(d);
    for (int c = 0; c < d; ++c) {
      if (!row[c].is_number())
        throw UsageError(what + ": key 'points' entry " + std::to_string(i) +
                         " must hold numbers when 'exact' is false");
      p[c] = row[c].get<double>();
    }
    P.fpoints.push_back(std::move(p));
  }
  return P;
}

std::string pointset_to_json(const PointSet& P) {
  json j;
  j["d"] = P.d;
  j["exact"] = P.exact;
  j["provenance"] = P.provenance;
  json points = json::array();
  if (P.exact) {
    for (const VecQ& p : P.points) {
      json row = json::array();
      for (const Q& c : p) row.push_back(q_to_string(c));
      points.push_back(std::move(row));
    }
  } else {
    for (const std::vector<double>& p : P.fpoints) points.push_back(p);
  }
  j["points"] = std::move(points);
  return j.dump(2) + "\n";
}

Hypergraph load_hypergraph(const std::string& path) {
  return hypergraph_from_json(read_text_file(path));
}

void save_hypergraph(const Hypergraph& g, const std::string& path) {
  write_text_file(path, hypergraph_to_json(g));
}

PointSet load_pointset(const std::string& path) {
  return pointset_from_json(read_text_file(path));
}

void save_pointset(const PointSet& P, const std::string& path) {
  write_text_file(path, pointset_to_json(P));
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

}  // namespace rigidlab
