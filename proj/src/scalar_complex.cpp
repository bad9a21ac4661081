#include "reeb/scalar_complex.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace reeb {

std::string to_string(IssueKind kind)
{
    switch (kind) {
    case IssueKind::duplicate_vertex: return "duplicate vertex";
    case IssueKind::non_finite_value: return "non-finite value";
    case IssueKind::dangling_reference: return "dangling reference";
    case IssueKind::degenerate_simplex: return "degenerate simplex";
    case IssueKind::duplicate_simplex: return "duplicate simplex";
    case IssueKind::missing_face: return "missing face";
    }
    return "unknown";
}

namespace {

std::string edge_name(int a, int b)
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triangle_name(const std::array<int, 3>& t)
{
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace

ValidationReport validate(const ScalarComplex& complex)
{
    ValidationReport report;
    auto add = [&](IssueKind kind, std::string detail) {
        report.issues.push_back({kind, std::move(detail)});
    };

    std::unordered_map<int, double> values;
    for (const auto& v : complex.vertices) {
        if (!values.emplace(v.id, v.value).second)
            add(IssueKind::duplicate_vertex, "vertex " + std::to_string(v.id));
        if (!std::isfinite(v.value))
            add(IssueKind::non_finite_value, "vertex " + std::to_string(v.id));
    }

    std::set<std::array<int, 2>> edges;
    for (const auto& e : complex.edges) {
        bool ok = true;
        for (int id : e) {
            if (!values.contains(id)) {
                add(IssueKind::dangling_reference,
                    "edge " + edge_name(e[0], e[1]) + " references vertex " + std::to_string(id));
                ok = false;
            }
        }
        if (e[0] == e[1]) {
            add(IssueKind::degenerate_simplex, "edge " + edge_name(e[0], e[1]));
            ok = false;
        }
        if (!ok)
            continue;
        std::array<int, 2> key{std::min(e[0], e[1]), std::max(e[0], e[1])};
        if (!edges.insert(key).second)
            add(IssueKind::duplicate_simplex, "edge " + edge_name(e[0], e[1]));
    }

    std::set<std::array<int, 3>> triangles;
    for (const auto& t : complex.triangles) {
        bool ok = true;
        for (int id : t) {
            if (!values.contains(id)) {
                add(IssueKind::dangling_reference,
                    "triangle " + triangle_name(t) + " references vertex " + std::to_string(id));
                ok = false;
            }
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            add(IssueKind::degenerate_simplex, "triangle " + triangle_name(t));
            ok = false;
        }
        if (!ok)
            continue;
        std::array<int, 3> key = t;
        std::sort(key.begin(), key.end());
        if (!triangles.insert(key).second)
            add(IssueKind::duplicate_simplex, "triangle " + triangle_name(t));
        for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            if (!edges.contains({key[i], key[j]}))
                add(IssueKind::missing_face,
                    "triangle " + triangle_name(t) + " lacks edge " + edge_name(key[i], key[j]));
        }
    }
    return report;
}

TotalOrder tie_break(const ScalarComplex& complex)
{
    std::vector<Vertex> sorted = complex.vertices;
    std::sort(sorted.begin(), sorted.end(), [](const Vertex& a, const Vertex& b) {
        return precedes(a.value, a.id, b.value, b.id);
    });
    TotalOrder order;
    order.ids.reserve(sorted.size());
    for (const auto& v : sorted)
        order.ids.push_back(v.id);
    return order;
}

}  // namespace reeb
