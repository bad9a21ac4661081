#pragma once

#include <array>
#include <string>
#include <vector>

namespace reeb {

struct Vertex {
    int id = 0;
    double value = 0.0;
};

/// A simplicial 2-complex with one scalar value per vertex. The scalar field is
/// extended linearly over edges and triangles.
struct ScalarComplex {
    std::vector<Vertex> vertices;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
};

enum class IssueKind {
    duplicate_vertex,
    non_finite_value,
    dangling_reference,
    degenerate_simplex,
    duplicate_simplex,
    missing_face,
};

std::string to_string(IssueKind kind);

struct Issue {
    IssueKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Issue> issues;

    bool valid() const { return issues.empty(); }
};

ValidationReport validate(const ScalarComplex& complex);

/// Vertex ids sorted by (value, id). Every order comparison in the library goes
/// through this order, so equal scalar values never produce ties.
struct TotalOrder {
    std::vector<int> ids;
};

TotalOrder tie_break(const ScalarComplex& complex);

/// Strict (value, id) comparison.
inline bool precedes(double value_a, int id_a, double value_b, int id_b)
{
    return value_a < value_b || (value_a == value_b && id_a < id_b);
}

}  // namespace reeb
