#pragma once

#include "reeb/reeb_graph.hpp"

#include <Eigen/Core>

#include <limits>
#include <span>
#include <vector>

namespace reeb {

inline constexpr double infinite_distance = std::numeric_limits<double>::infinity();

/// Minimal path height between two points, with a path attaining it.
///
/// `points[i]` and `points[i + 1]` are joined by a monotone segment of
/// `arcs[i]`. A disconnected pair has `value == infinite_distance` and an empty
/// witness.
struct PathHeight {
    double value = infinite_distance;
    std::vector<ReebPoint> points;
    std::vector<int> arcs;

    bool connected() const { return value != infinite_distance; }
    double low() const;
    double high() const;
};

/// d_f(u, v): minimum over paths from u to v of (max f - min f) along the path.
///
/// For every floor b among the node values and f(u), f(v) not above
/// min(f(u), f(v)), a max-priority sweep over the part of the graph with f >= b
/// finds the lowest possible path maximum D(b); the answer is min_b D(b) - b.
/// The extrema of an optimal path sit at nodes or at the query points, so the
/// finite floor set is exact.
PathHeight df(const ReebGraph& graph, const ReebPoint& u, const ReebPoint& v);

/// Symmetric matrix of d_f over a sample of points; infinite entries mark
/// pairs in different components.
Eigen::MatrixXd all_pairs_df(const ReebGraph& graph, std::span<const ReebPoint> sample);

/// Same as all_pairs_df but keeps a witness path per pair (row-major).
std::vector<PathHeight> all_pairs_paths(const ReebGraph& graph, std::span<const ReebPoint> sample);

/// Every node of the graph as a point, in index order.
std::vector<ReebPoint> node_points(const ReebGraph& graph);

/// Result of subdivide(): the refined graph and, per input arc index, the
/// indices of the refined arcs covering it from bottom to top.
struct Subdivision {
    ReebGraph graph;
    std::vector<std::vector<int>> chains;

    /// Image of a point of the input graph in the refined graph.
    ReebPoint map_point(const ReebGraph& input, const ReebPoint& point) const;
};

/// Splits every arc into ceil(height / eps) pieces of equal height. Inserted
/// nodes are flagged as subdivision nodes. Throws NonPositiveEpsilon.
Subdivision subdivide(const ReebGraph& graph, double eps);

}  // namespace reeb
