#include "reeb/io.hpp"

#include "reeb/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <string>

namespace reeb {

namespace {

const json& field(const json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key))
        throw SchemaError(std::string("missing key '") + key + "'");
    return obj.at(key);
}

int as_int(const json& v, const char* what)
{
    if (!v.is_number_integer())
        throw SchemaError(std::string(what) + " must be an integer");
    return v.get<int>();
}

double as_number(const json& v, const char* what)
{
    if (!v.is_number())
        throw SchemaError(std::string(what) + " must be a number");
    return v.get<double>();
}

const json& as_array(const json& v, const char* what)
{
    if (!v.is_array())
        throw SchemaError(std::string(what) + " must be an array");
    return v;
}

template <std::size_t N>
std::array<int, N> int_tuple(const json& v, const char* what)
{
    if (!v.is_array() || v.size() != N)
        throw SchemaError(std::string(what) + " must be an array of " + std::to_string(N) + " ids");
    std::array<int, N> out{};
    for (std::size_t i = 0; i < N; ++i)
        out[i] = as_int(v[i], what);
    return out;
}

}  // namespace

ScalarComplex complex_from_json(const json& doc)
{
    ScalarComplex c;
    for (const auto& v : as_array(field(doc, "vertices"), "vertices"))
        c.vertices.push_back({as_int(field(v, "id"), "vertex id"), as_number(field(v, "f"), "vertex value")});
    if (doc.contains("edges")) {
        for (const auto& e : as_array(doc.at("edges"), "edges"))
            c.edges.push_back(int_tuple<2>(e, "edge"));
    }
    if (doc.contains("triangles")) {
        for (const auto& t : as_array(doc.at("triangles"), "triangles"))
            c.triangles.push_back(int_tuple<3>(t, "triangle"));
    }
    return c;
}

json to_json(const ScalarComplex& complex)
{
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : complex.vertices)
        doc["vertices"].push_back({{"id", v.id}, {"f", v.value}});
    doc["edges"] = json::array();
    for (const auto& e : complex.edges)
        doc["edges"].push_back({e[0], e[1]});
    doc["triangles"] = json::array();
    for (const auto& t : complex.triangles)
        doc["triangles"].push_back({t[0], t[1], t[2]});
    return doc;
}

namespace {

// Next token of an OFF stream, skipping '#' comments.
bool next_token(std::istream& in, std::string& token)
{
    while (in >> token) {
        if (token[0] != '#')
            return true;
        std::string rest;
        std::getline(in, rest);
    }
    return false;
}

long off_count(std::istream& in, const char* what)
{
    std::string token;
    if (!next_token(in, token))
        throw SchemaError(std::string("OFF: missing ") + what);
    try {
        std::size_t used = 0;
        long v = std::stol(token, &used);
        if (used != token.size() || v < 0)
            throw SchemaError(std::string("OFF: bad ") + what);
        return v;
    } catch (const std::logic_error&) {
        throw SchemaError(std::string("OFF: bad ") + what + " '" + token + "'");
    }
}

}  // namespace

ScalarComplex complex_from_off(std::istream& off, std::istream& scalars)
{
    std::string token;
    if (!next_token(off, token) || token != "OFF")
        throw SchemaError("OFF: missing header");
    const long nv = off_count(off, "vertex count");
    const long nf = off_count(off, "face count");
    off_count(off, "edge count");
    for (long i = 0; i < 3 * nv; ++i) {
        if (!next_token(off, token))
            throw SchemaError("OFF: truncated vertex block");
    }

    ScalarComplex c;
    for (long i = 0; i < nv; ++i) {
        double value;
        if (!(scalars >> value))
            throw SchemaError("scalar file has fewer values than OFF vertices");
        c.vertices.push_back({static_cast<int>(i), value});
    }
    double extra;
    if (scalars >> extra)
        throw SchemaError("scalar file has more values than OFF vertices");

    std::set<std::array<int, 2>> edges;
    std::set<std::array<int, 3>> triangles;
    auto add_edge = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (long f = 0; f < nf; ++f) {
        const long k = off_count(off, "face size");
        std::vector<int> face;
        for (long i = 0; i < k; ++i)
            face.push_back(static_cast<int>(off_count(off, "face index")));
        std::string rest;
        std::getline(off, rest);  // optional colour
        for (long i = 0; i < k; ++i)
            add_edge(face[i], face[(i + 1) % k]);
        for (long i = 1; i + 1 < k; ++i) {
            std::array<int, 3> t{face[0], face[i], face[i + 1]};
            add_edge(t[0], t[2]);
            std::sort(t.begin(), t.end());
            triangles.insert(t);
        }
    }
    c.edges.assign(edges.begin(), edges.end());
    c.triangles.assign(triangles.begin(), triangles.end());
    return c;
}

ReebGraph reeb_from_json(const json& doc)
{
    std::vector<ReebNode> nodes;
    for (const auto& n : as_array(field(doc, "nodes"), "nodes"))
        nodes.push_back({as_int(field(n, "id"), "node id"), as_number(field(n, "f"), "node value"), false});
    std::vector<ArcSpec> arcs;
    for (const auto& a : as_array(field(doc, "arcs"), "arcs"))
        arcs.push_back({as_int(field(a, "id"), "arc id"), as_int(field(a, "lo"), "arc lo"),
                        as_int(field(a, "hi"), "arc hi")});
    for (const auto& n : nodes) {
        if (!std::isfinite(n.value))
            throw SchemaError("node " + std::to_string(n.id) + " has a non-finite value");
    }
    return suppress_regular(ReebGraph(std::move(nodes), std::move(arcs)));
}

json to_json(const ReebGraph& graph)
{
    json doc;
    doc["nodes"] = json::array();
    for (const auto& n : graph.nodes())
        doc["nodes"].push_back({{"id", n.id}, {"f", n.value}});
    doc["arcs"] = json::array();
    for (const auto& a : graph.arcs())
        doc["arcs"].push_back({{"id", a.id}, {"lo", graph.node(a.lo).id}, {"hi", graph.node(a.hi).id}});
    return doc;
}

PersistenceDiagram diagram_from_json(const json& doc)
{
    PersistenceDiagram d;
    for (const auto& p : as_array(field(doc, "points"), "points")) {
        DiagramPoint point;
        point.birth = as_number(field(p, "b"), "birth");
        const json& death = field(p, "d");
        if (death.is_string() && death.get<std::string>() == "inf")
            point.death = std::numeric_limits<double>::infinity();
        else
            point.death = as_number(death, "death");
        const json& cls = field(p, "class");
        if (!cls.is_string())
            throw SchemaError("class must be a string");
        point.cls = point_class_from_string(cls.get<std::string>());
        if (p.contains("creator"))
            point.creator = as_int(p.at("creator"), "creator");
        if (p.contains("destroyer"))
            point.destroyer = as_int(p.at("destroyer"), "destroyer");
        d.points.push_back(point);
    }
    return d;
}

json to_json(const PersistenceDiagram& diagram)
{
    json doc;
    doc["points"] = json::array();
    for (const auto& p : diagram.points) {
        json d = std::isinf(p.death) ? json("inf") : json(p.death);
        json point{{"b", p.birth}, {"d", d}, {"class", to_string(p.cls)}};
        if (p.creator >= 0)
            point["creator"] = p.creator;
        if (p.destroyer >= 0)
            point["destroyer"] = p.destroyer;
        doc["points"].push_back(std::move(point));
    }
    return doc;
}

Cycle cycle_from_json(const ReebGraph& graph, const json& doc)
{
    std::vector<int> ids;
    for (const auto& a : as_array(field(doc, "arcs"), "arcs"))
        ids.push_back(as_int(a, "arc id"));
    return make_cycle(graph, ids);
}

json to_json(const Cycle& cycle)
{
    return {{"arcs", cycle.arcs}};
}

}  // namespace reeb
