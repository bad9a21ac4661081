#pragma once

#include "reeb/persistence.hpp"
#include "reeb/reeb_graph.hpp"
#include "reeb/scalar_complex.hpp"

#include <json.hpp>

#include <istream>

namespace reeb {

using json = nlohmann::json;

/// All readers throw SchemaError on malformed documents.
ScalarComplex complex_from_json(const json& doc);
json to_json(const ScalarComplex& complex);

/// OFF mesh (faces of any arity are fanned into triangles; their edges are
/// added) plus one scalar per vertex, in OFF vertex order. Vertex ids are
/// 0-based OFF positions.
ScalarComplex complex_from_off(std::istream& off, std::istream& scalars);

/// Regular (1, 1) nodes of the document are suppressed.
ReebGraph reeb_from_json(const json& doc);
json to_json(const ReebGraph& graph);

PersistenceDiagram diagram_from_json(const json& doc);
json to_json(const PersistenceDiagram& diagram);

Cycle cycle_from_json(const ReebGraph& graph, const json& doc);
json to_json(const Cycle& cycle);

}  // namespace reeb
