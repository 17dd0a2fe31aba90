// JSON (de)serialisation for graphs and point sets, plus RFC-4180 CSV
// helpers. Parse failures throw UsageError naming the offending key.
#pragma once

#include <rigidlab/hypergraph.hpp>
#include <rigidlab/pointset.hpp>

#include <string>
#include <vector>

namespace rigidlab {

// {"k": 2, "vertices": 4, "edges": [[0,1], ...], "simple": true}
Hypergraph hypergraph_from_json(const std::string& text);
std::string hypergraph_to_json(const Hypergraph& g);

// {"d": 2, "exact": true, "points": [["0","0"], ["1/3","2/3"], ...]}
// with rationals as strings; float sets use "exact": false and numbers.
PointSet pointset_from_json(const std::string& text);
std::string pointset_to_json(const PointSet& P);

Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const Hypergraph& g, const std::string& path);
PointSet load_pointset(const std::string& path);
void save_pointset(const PointSet& P, const std::string& path);

// RFC-4180: fields containing commas, quotes, or line breaks are quoted and
// embedded quotes doubled; records end with CRLF.
std::string csv_field(const std::string& raw);
std::string csv_line(const std::vector<std::string>& fields);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rigidlab
