#pragma once

#include "reeb/persistence.hpp"
#include "reeb/reeb_graph.hpp"

#include <vector>

namespace reeb {

/// L-infinity distance between two diagram points.
double point_cost(const DiagramPoint& a, const DiagramPoint& b);
/// Cost of sending a point to the diagonal, |d - b| / 2.
double diagonal_cost(const DiagramPoint& p);

/// Index into the first and second diagram; -1 stands for the diagonal.
struct MatchedPair {
    int first = -1;
    int second = -1;
    double cost = 0.0;
};

struct Matching {
    std::vector<MatchedPair> pairs;
    double cost = 0.0;
};

struct BottleneckResult {
    double value = 0.0;
    Matching matching;
};

/// Bottleneck distance, all points of both diagrams taken as one class.
///
/// Points with infinite death are paired separately, sorted by birth; their
/// counts must agree or InfiniteMismatch is thrown. The finite part is the
/// smallest candidate cost (pairwise distances, diagonal costs, 0) at which the
/// diagonal-augmented bipartite graph has a perfect matching.
BottleneckResult bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

struct ClassDistances {
    double ordinary0_up = 0.0;
    double ordinary0_down = 0.0;
    double extended1 = 0.0;
    double essential0 = 0.0;
};

ClassDistances bottleneck_all_classes(const ReebGraph& f, const ReebGraph& g);

}  // namespace reeb
