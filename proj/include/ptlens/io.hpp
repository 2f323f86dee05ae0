#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ptlens/analysis.hpp"
#include "ptlens/automorphism.hpp"
#include "ptlens/complex.hpp"
#include "ptlens/pattern.hpp"
#include "ptlens/primitive_tree.hpp"
#include "ptlens/report.hpp"

namespace ptlens::io {

using nlohmann::json;

// Serialization is canonical: containers are emitted in their canonical
// order and nlohmann::json keeps object keys sorted, so equal values produce
// identical bytes.

json to_json(const LabeledComplex& c);
LabeledComplex complex_from_json(const json& j); // throws Error("JsonSchema")

json to_json(const PrimitiveTree& t);
PrimitiveTree ptree_from_json(const json& j);

json to_json(const VertexMap& map);
VertexMap vertex_map_from_json(const json& j);

json to_json(const FixedLocus& locus);
json to_json(const AnalysisOutcome& outcome);

json to_json(const IntersectionPattern& p);
IntersectionPattern pattern_from_json(const json& j);
json to_json(const ReduceTrace& trace);

json to_json(const Report& report);
json to_json(const Corridor& cor, const LabeledComplex& c);

// Graphviz views: vertex shape tracks color, edge style tracks label.
std::string complex_to_dot(const LabeledComplex& c);
std::string ptree_to_dot(const PrimitiveTree& t);

// File helpers used by the CLI.
json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace ptlens::io
